from dataclasses import dataclass
from fractions import Fraction

from models.polynomials import UPoly, YPoly
from models.rings import as_fraction


@dataclass(frozen=True)
class Monomial:
    """x = u^(u2/2) * y^y, the argument of the theta kernels."""

    u2: int = 0
    y: int = 0

    @classmethod
    def of(cls, u=0, y: int = 0) -> "Monomial":
        doubled = 2 * as_fraction(u)
        if doubled.denominator != 1:
            raise ValueError(f"u-exponent {u} is not a half-integer")
        return cls(int(doubled), y)

    @property
    def u_exp(self) -> Fraction:
        return Fraction(self.u2, 2)

    def is_trivial(self) -> bool:
        return self.u2 == 0 and self.y == 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.u2 + other.u2, self.y + other.y)

    def __pow__(self, exponent: int) -> "Monomial":
        return Monomial(self.u2 * exponent, self.y * exponent)

    def inverse(self) -> "Monomial":
        return Monomial(-self.u2, -self.y)

    def to_ypoly(self, coefficient=1) -> YPoly:
        return YPoly({self.y: UPoly.from_doubled(self.u2, coefficient)})

    def __str__(self):
        factors = []
        if self.u2:
            factors.append("u" if self.u2 == 2 else f"u^{self.u_exp}")
        if self.y:
            factors.append("y" if self.y == 1 else f"y^{self.y}")
        return "*".join(factors) or "1"
