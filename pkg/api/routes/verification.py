from fastapi import APIRouter
from fastapi.params import Path, Query

from config import config
from models.reports import Suite, SuiteReport
from models.run import Command, RunConfig
from services.verification import VerificationService

verification_router = APIRouter()


@verification_router.post("/{suite}", response_model=SuiteReport)
def run_suite(
    suite: Suite = Path(...),
    n: int = Query(3, description="largest section rank for route checks"),
    qorder: int = Query(config.QORDER),
    ywin: int = Query(config.YWIN),
    vorder: int = Query(config.VORDER),
    cutoff: int = Query(config.CUTOFF),
) -> SuiteReport:
    run = RunConfig.build(
        command=Command.VERIFY,
        suite=suite,
        n=n,
        qorder=qorder,
        ywin=ywin,
        vorder=vorder,
        cutoff=cutoff,
    )
    return VerificationService.run_suite(
        run.suite, run.qorder, run.ywin, run.vorder, run.cutoff, run.rank_max, run.n
    )
