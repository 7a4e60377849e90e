from fractions import Fraction
from typing import Dict, Optional, Tuple

from models.polynomials import SparsePolynomial, TTPoly, UPoly, YPoly
from models.reports import Verdict
from models.series import QSeries

Difference = Tuple[Dict[str, str], object, object]


def _key_location(polynomial: SparsePolynomial, key) -> Dict[str, str]:
    if isinstance(polynomial, UPoly):
        return {"u": str(Fraction(key, 2))}
    if isinstance(polynomial, TTPoly):
        return {"t": str(key[0]), "tbar": str(key[1])}
    return {"y": str(key)}


def _polynomial_like(value, template: SparsePolynomial) -> SparsePolynomial:
    if isinstance(value, SparsePolynomial):
        return value
    return template.constant(value)


def first_difference(lhs, rhs) -> Optional[Difference]:
    """Location of the first differing coefficient, walking q, y, u and Hodge keys."""
    if isinstance(lhs, QSeries) or isinstance(rhs, QSeries):
        if not (isinstance(lhs, QSeries) and isinstance(rhs, QSeries)):
            return None if lhs == rhs else ({}, lhs, rhs)
        for exponent in range(min(lhs.lower, rhs.lower), min(lhs.order, rhs.order)):
            found = first_difference(
                lhs.coefficient(exponent), rhs.coefficient(exponent)
            )
            if found is not None:
                location, left, right = found
                return {lhs.var: str(exponent), **location}, left, right
        return None
    if isinstance(lhs, SparsePolynomial) or isinstance(rhs, SparsePolynomial):
        template = lhs if isinstance(lhs, SparsePolynomial) else rhs
        left = _polynomial_like(lhs, template)
        right = _polynomial_like(rhs, template)
        window = None
        if isinstance(left, YPoly) and isinstance(right, YPoly):
            window = YPoly._combine_windows(left.window, right.window)
        keys = sorted(set(left.terms) | set(right.terms))
        for key in keys:
            if window is not None and abs(key) > window:
                continue
            found = first_difference(left.coefficient(key), right.coefficient(key))
            if found is not None:
                location, a, b = found
                return {**_key_location(template, key), **location}, a, b
        return None
    return None if lhs == rhs else ({}, lhs, rhs)


def compare(identity: str, lhs, rhs) -> Verdict:
    found = first_difference(lhs, rhs)
    if found is None:
        return Verdict(identity=identity, passed=True)
    location, left, right = found
    return Verdict(
        identity=identity,
        passed=False,
        location=location,
        detail=f"{left} != {right}",
    )
