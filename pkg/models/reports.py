from enum import Enum
from typing import Dict, List

from pydantic import BaseModel

from utils.errors import IdentityMismatchError


class Suite(str, Enum):
    UCOMB = "ucomb"
    THETA = "theta"
    ROUTES = "routes"
    DUALITY = "duality"
    GEOMETRY = "geometry"
    MODULARITY = "modularity"
    ALL = "all"


class Verdict(BaseModel):
    identity: str
    passed: bool
    location: Dict[str, str] = {}
    detail: str = ""

    def raise_for_failure(self) -> "Verdict":
        if not self.passed:
            raise IdentityMismatchError(self.identity, self.location)
        return self


class SuiteReport(BaseModel):
    suite: str
    passed: bool
    verdicts: List[Verdict]

    @property
    def first_failure(self):
        return next((verdict for verdict in self.verdicts if not verdict.passed), None)


class CombinationTerm(BaseModel):
    monomial: str
    coeff: str


class FitReport(BaseModel):
    n: int
    r: int
    s: int
    weight_bound: int
    combination: List[CombinationTerm]
    validated_to_qorder: int
