from pydantic import BaseModel, Field


class MukaiVector(BaseModel):
    """v = (r, d * D_g, a) on a K3 surface, D_g primitive with D^2 = 2g - 2."""

    r: int
    genus: int = Field(..., ge=0)
    a: int
    d: int = Field(1, ge=0)

    class Config:
        allow_mutation = False

    @property
    def self_intersection(self) -> int:
        return 2 * self.genus - 2

    def __str__(self):
        divisor = "0" if not self.d else ("D" if self.d == 1 else f"{self.d}D")
        return f"({self.r}, {divisor}_{self.genus}, {self.a})"
