from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, StrictInt

from models.polynomials import UPoly
from models.series import QSeries


class Route(str, Enum):
    CLOSED = "closed"
    MATRICES = "matrices"
    MODUS = "modus"
    F = "f"
    EULER = "euler"


class PartitionFunction(BaseModel):
    """G = F / S (routes closed, matrices, modus, euler) or F itself (route f)."""

    n: int
    r: int
    route: Route
    qorder: int
    ywin: Optional[int]
    series: QSeries

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    def coefficient(self, q: int, y: int):
        return self.series.coefficient(q).coefficient(y)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "route": self.route.value,
            "qorder": self.qorder,
            "ywin": self.ywin,
            "series": self.series.to_dict(),
        }


class CTable(BaseModel):
    n: int
    r: int
    entries: Dict[Tuple[int, int], UPoly]

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "entries": [
                {"i": i, "j": j, "poly": str(poly)}
                for (i, j), poly in sorted(self.entries.items())
            ],
        }


class TableCell(BaseModel):
    n: int
    r: int
    g: int
    k: int
    value: Union[StrictInt, str]


TableRows = List[TableCell]
