from typing import List

from fastapi import APIRouter
from fastapi.params import Path, Query

from config import config
from models.partition import CTable, Route, TableCell
from models.run import Command, RunConfig
from services.partition import PartitionService
from services.ucombinatorics import UCombinatoricsService

partition_router = APIRouter()


@partition_router.get("/table", response_model=List[TableCell])
def get_table(
    n: int = Query(1),
    r: int = Query(0),
    gmax: int = Query(4),
    kmin: int = Query(0),
    kmax: int = Query(4),
    hodge: bool = Query(False),
) -> List[TableCell]:
    run = RunConfig.build(
        command=Command.TABLE, n=n, r=r, gmax=gmax, kmin=kmin, kmax=kmax, hodge=hodge
    )
    return PartitionService.table_cells(
        run.n, run.r, run.gmax, run.kmin, run.kmax, hodge=run.hodge
    )


@partition_router.get("/series/{route}")
def get_series(
    route: Route = Path(...),
    n: int = Query(1),
    r: int = Query(0),
    qorder: int = Query(config.QORDER),
    ywin: int = Query(config.YWIN),
) -> dict:
    run = RunConfig.build(
        command=Command.SERIES, n=n, r=r, qorder=qorder, ywin=ywin, route=route
    )
    result = PartitionService.series(run.route, run.n, run.r, run.qorder, run.ywin)
    return result.to_dict()


@partition_router.get("/c-table")
def get_c_table(n: int = Query(1), r: int = Query(0)) -> dict:
    table = CTable(n=n, r=r, entries=UCombinatoricsService.c_table(n, r))
    return table.to_dict()
