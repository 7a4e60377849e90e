from typing import Optional

from fastapi import APIRouter
from fastapi.params import Query

from config import config
from models.reports import FitReport
from models.run import Command, RunConfig
from services.modularity import ModularityService

modularity_router = APIRouter()


@modularity_router.get("/fit", response_model=FitReport)
def get_fit(
    n: int = Query(1),
    r: int = Query(0),
    s: int = Query(0, ge=0),
    weight_bound: Optional[int] = Query(None),
    weight_ceiling: int = Query(config.WEIGHT_CEILING),
) -> FitReport:
    run = RunConfig.build(
        command=Command.FIT,
        n=n,
        r=r,
        weight_bound=weight_bound,
        weight_ceiling=weight_ceiling,
    )
    return ModularityService.fit_coefficient(
        run.n, run.r, s, weight_bound=run.weight_bound, ceiling=run.weight_ceiling
    )
