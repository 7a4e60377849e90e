from enum import Enum
from typing import Optional

from pydantic import BaseModel, ValidationError, root_validator, validator

from config import config
from models.partition import Route
from models.reports import Suite
from utils.errors import InvalidRunConfigError


class Command(str, Enum):
    TABLE = "table"
    VERIFY = "verify"
    FIT = "fit"
    SERIES = "series"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class SeriesKind(str, Enum):
    G = "g"
    F = "f"
    EULER = "euler"
    C_TABLE = "c-table"


class RunConfig(BaseModel):
    """Validated options of one batch run."""

    command: Command
    n: int = 1
    r: int = 0
    gmax: int = 4
    kmin: int = 0
    kmax: int = 4
    qorder: int = config.QORDER
    ywin: int = config.YWIN
    vorder: int = config.VORDER
    vmax: int = 4
    weight_bound: Optional[int] = None
    weight_ceiling: int = config.WEIGHT_CEILING
    cutoff: int = config.CUTOFF
    rank_max: int = config.MATRIX_RANK_MAX
    suite: Suite = Suite.ALL
    route: Route = Route.CLOSED
    kind: SeriesKind = SeriesKind.G
    hodge: bool = False
    format: OutputFormat = OutputFormat.CSV
    output: Optional[str] = None
    golden: Optional[str] = None

    class Config:
        allow_mutation = False

    @validator("qorder", "ywin", "vorder", "cutoff", "rank_max")
    def non_negative(cls, value, field):
        if value < 0:
            raise ValueError(f"{field.name} must be >= 0, got {value}")
        return value

    @validator("n")
    def positive_rank(cls, value):
        if value < 1:
            raise ValueError(f"n must be >= 1, got {value}")
        return value

    @validator("gmax")
    def non_negative_genus(cls, value):
        if value < 0:
            raise ValueError(f"gmax must be >= 0, got {value}")
        return value

    @root_validator(skip_on_failure=True)
    def consistent_ranges(cls, values):
        n, r = values["n"], values["r"]
        if not 0 <= r <= n:
            raise ValueError(f"0 <= r <= n violated by r={r}, n={n}")
        if values["kmin"] > values["kmax"]:
            raise ValueError(
                f"kmin <= kmax violated by kmin={values['kmin']}, kmax={values['kmax']}"
            )
        return values

    @classmethod
    def build(cls, **values) -> "RunConfig":
        try:
            return cls(**values)
        except ValidationError as exc:
            raise InvalidRunConfigError(_describe(exc)) from exc


def _describe(exc: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
        for error in exc.errors()
    )
