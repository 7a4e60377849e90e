from typing import Dict, List, Tuple

from pydantic import BaseModel

from models.series import QSeries


class BasisElement(BaseModel):
    """A monomial in E_2, E_3(q^2), E_4, E_5(q^2), ... with its q-expansion."""

    name: str
    weight: int
    exponents: Tuple[int, ...]
    series: QSeries

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False


class EisensteinBasis(BaseModel):
    weight_bound: int
    qorder: int
    elements: List[BasisElement]

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    def names(self) -> List[str]:
        return [element.name for element in self.elements]

    def by_name(self) -> Dict[str, BasisElement]:
        return {element.name: element for element in self.elements}
