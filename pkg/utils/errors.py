from typing import Dict, Optional


class NonUnitLeadingError(ValueError):
    """Base error for series whose leading coefficient is not invertible"""


class NotDivisibleError(ValueError):
    """Base error for polynomial division that leaves a remainder"""


class NonExactDivisionError(NotDivisibleError):
    """Error for a u-integer quotient that is not a polynomial"""


class InternalNonExactDivisionError(NotDivisibleError):
    """Error for a closed-form normalization that should have been exact"""


class BadConstantTermError(ValueError):
    """Base error for log/exp called on a series with the wrong constant term"""


class TruncationError(ValueError):
    """Base error for operations whose result would not be exactly known"""


class NegativeDimensionError(ValueError):
    """Base error for a moduli space of negative expected dimension"""

    def __init__(self, dimension: int, *args):
        super().__init__(f"expected dimension {dimension} is negative", *args)
        self.dimension = dimension


class UnsupportedRankError(ValueError):
    """Base error for a rank outside the range a formula is valid for"""


class IdentityMismatchError(ValueError):
    """Base error for a failed exact identity check"""

    def __init__(self, identity: str, location: Optional[Dict[str, str]] = None):
        self.identity = identity
        self.location = location or {}
        where = ", ".join(f"{key}={value}" for key, value in self.location.items())
        super().__init__(f"{identity} fails at {where or 'unknown location'}")


class NoSolutionError(ValueError):
    """Base error for a target outside the span of the fitting basis"""


class ValidationFailureError(ValueError):
    """Base error for a fit that does not hold beyond its fitting window"""


class FitWindowError(ValueError):
    """Base error for a fitting window too short to separate the basis"""


class InvalidRunConfigError(ValueError):
    """Base error for a run configuration violating one of its constraints"""
