"""Sparse Laurent polynomials used as coefficients of the generating series.

``UPoly`` is a Laurent polynomial in ``u`` with half-integer exponents, stored
under doubled exponents. ``TTPoly`` is a Laurent polynomial in the Hodge
variables ``t`` and ``tb``. ``YPoly`` is a Laurent polynomial in ``y`` whose
coefficients may live in any ring; it optionally carries a symmetric window
``|e| <= window`` outside of which nothing is known.
"""
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Hashable, Iterator, Optional, Tuple, Union

from models.rings import Rational, as_fraction, divide_scalar
from utils.errors import NonUnitLeadingError, NotDivisibleError, TruncationError

Exponent = Union[int, Fraction]


def _format_coefficient(coefficient, has_monomial: bool) -> str:
    if not has_monomial:
        if isinstance(coefficient, (int, Fraction)):
            return str(coefficient)
        return f"({coefficient})"
    if coefficient == 1:
        return ""
    if coefficient == -1:
        return "-"
    if isinstance(coefficient, int):
        return str(coefficient)
    return f"({coefficient})"


def _join_terms(parts) -> str:
    text = ""
    for part in parts:
        if text and not part.startswith("-"):
            text += "+"
        text += part
    return text or "0"


class SparsePolynomial:
    """Finitely supported map from exponent keys to nonzero coefficients."""

    __slots__ = ("_terms",)
    _rank = 1
    _zero_key: Hashable = 0

    def __init__(self, terms: Optional[Dict[Hashable, object]] = None):
        self._terms = {key: value for key, value in (terms or {}).items() if value != 0}

    # construction helpers

    def _new(self, terms: Dict[Hashable, object]):
        return self.__class__(terms)

    @classmethod
    def constant(cls, value):
        return cls({cls._zero_key: value})

    @staticmethod
    def _add_keys(a, b):
        return a + b

    @staticmethod
    def _negate_key(a):
        return -a

    # access

    @property
    def terms(self) -> Dict[Hashable, object]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Hashable, object]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, key):
        return self._terms.get(key, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def map_coefficients(self, function: Callable):
        return self._new({key: function(value) for key, value in self._terms.items()})

    def _is_scalar(self, other) -> bool:
        return getattr(other, "_rank", 0) < self._rank

    # arithmetic

    def __neg__(self):
        return self._new({key: -value for key, value in self._terms.items()})

    def __add__(self, other):
        if type(other) is type(self):
            terms = dict(self._terms)
            for key, value in other._terms.items():
                terms[key] = terms.get(key, 0) + value
            return self._new(terms)
        if self._is_scalar(other):
            return self + self.constant(other)
        return NotImplemented

    def __radd__(self, other):
        if self._is_scalar(other):
            return self.constant(other) + self
        return NotImplemented

    def __sub__(self, other):
        if type(other) is type(self) or self._is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if self._is_scalar(other):
            return self.constant(other) + (-self)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is type(self):
            return self._multiply(other)
        if self._is_scalar(other):
            return self._new({key: value * other for key, value in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if self._is_scalar(other):
            return self._new({key: other * value for key, value in self._terms.items()})
        return NotImplemented

    def __truediv__(self, other):
        if self._is_scalar(other):
            return self.map_coefficients(lambda value: divide_scalar(value, other))
        return NotImplemented

    def unit_inverse(self):
        """Inverse of a monomial with invertible coefficient."""
        if len(self._terms) != 1:
            raise NonUnitLeadingError(f"{self} is not a unit")
        ((key, value),) = self._terms.items()
        if isinstance(value, int) and value not in (1, -1):
            raise NonUnitLeadingError(f"{self} is not a unit")
        return self._new({self._negate_key(key): divide_scalar(1, value)})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = self.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def _multiply(self, other):
        terms: Dict[Hashable, object] = {}
        for (ka, va), (kb, vb) in product(self._terms.items(), other._terms.items()):
            key = self._add_keys(ka, kb)
            terms[key] = terms.get(key, 0) + va * vb
        return self._new(terms)

    def __eq__(self, other):
        if type(other) is type(self):
            return not (self - other)._terms
        if self._is_scalar(other):
            return self == self.constant(other)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"{self.__class__.__name__}({self})"


class UPoly(SparsePolynomial):
    """Laurent polynomial in u; keys are doubled exponents."""

    __slots__ = ()

    @classmethod
    def monomial(cls, exponent: Exponent = 0, coefficient=1) -> "UPoly":
        doubled = 2 * as_fraction(exponent)
        if doubled.denominator != 1:
            raise ValueError(f"u-exponent {exponent} is not a half-integer")
        return cls({int(doubled): coefficient})

    @classmethod
    def from_doubled(cls, doubled: int, coefficient=1) -> "UPoly":
        return cls({doubled: coefficient})

    @classmethod
    def from_coefficients(cls, coefficients, lowest: int = 0) -> "UPoly":
        """Build sum c_i u^(lowest + i) from a coefficient sequence."""
        return cls({2 * (lowest + i): c for i, c in enumerate(coefficients)})

    def exponents(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(key, 2) for key in sorted(self._terms))

    def shift(self, exponent: Exponent) -> "UPoly":
        doubled = 2 * as_fraction(exponent)
        if doubled.denominator != 1:
            raise ValueError(f"u-exponent {exponent} is not a half-integer")
        step = int(doubled)
        return UPoly({key + step: value for key, value in self._terms.items()})

    def has_integer_exponents(self) -> bool:
        return all(key % 2 == 0 for key in self._terms)

    def evaluate_at_one(self):
        return sum(self._terms.values(), 0)

    def derivative_at_one(self, order: int):
        """t-th derivative at u = 1: sum of c * t! * C(a, t) over monomials c u^a."""
        if not self.has_integer_exponents():
            raise ValueError("derivative at u = 1 needs integer exponents")
        total = 0
        for key, value in self._terms.items():
            falling = 1
            for i in range(order):
                falling *= key // 2 - i
            total = total + value * falling
        return total

    def invert_u(self) -> "UPoly":
        return UPoly({-key: value for key, value in self._terms.items()})

    def embed(self) -> "TTPoly":
        """Image under u -> t*tb."""
        if not self.has_integer_exponents():
            raise ValueError("only integer u-exponents embed into the Hodge ring")
        return TTPoly({(k // 2, k // 2): value for k, value in self._terms.items()})

    def _multiply(self, other: "UPoly") -> "UPoly":
        if not self._terms or not other._terms:
            return UPoly()
        if len(self._terms) * len(other._terms) < 64:
            return super()._multiply(other)
        step = 2 if self._uniform_parity() and other._uniform_parity() else 1
        dense_a, low_a = self._dense(step)
        dense_b, low_b = other._dense(step)
        out = [0] * (len(dense_a) + len(dense_b) - 1)
        for i, a in enumerate(dense_a):
            if not a:
                continue
            for j, b in enumerate(dense_b, i):
                if b:
                    out[j] += a * b
        low = low_a + low_b
        return UPoly({low + step * i: value for i, value in enumerate(out)})

    def _uniform_parity(self) -> bool:
        return len({key % 2 for key in self._terms}) == 1

    def _dense(self, step: int):
        low = min(self._terms)
        high = max(self._terms)
        dense = [0] * ((high - low) // step + 1)
        for key, value in self._terms.items():
            dense[(key - low) // step] = value
        return dense, low

    def exact_divide(self, divisor: "UPoly") -> "UPoly":
        """Laurent long division that must leave no remainder."""
        if not divisor._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return UPoly()
        top_key = max(divisor._terms)
        top = divisor._terms[top_key]
        lowest_quotient = min(self._terms) - min(divisor._terms)
        remainder = dict(self._terms)
        quotient: Dict[int, object] = {}
        while remainder:
            key = max(remainder)
            shift = key - top_key
            if shift < lowest_quotient:
                raise NotDivisibleError(f"{self} is not divisible by {divisor}")
            factor = divide_scalar(remainder[key], top)
            quotient[shift] = factor
            for dkey, dvalue in divisor._terms.items():
                target = dkey + shift
                value = remainder.get(target, 0) - factor * dvalue
                if value != 0:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return UPoly(quotient)

    def exact_div_u_minus_one(self, power: int) -> "UPoly":
        return self.exact_divide(U_MINUS_ONE**power)

    def __str__(self):
        parts = []
        for key, value in sorted(self._terms.items()):
            if key == 0:
                parts.append(_format_coefficient(value, False))
                continue
            exponent = Fraction(key, 2)
            monomial = "u" if exponent == 1 else f"u^{exponent}"
            parts.append(_format_coefficient(value, True) + monomial)
        return _join_terms(parts)


class TTPoly(SparsePolynomial):
    """Laurent polynomial in the Hodge variables t and tb; keys are (a, b)."""

    __slots__ = ()
    _zero_key = (0, 0)

    @staticmethod
    def _add_keys(a, b):
        return a[0] + b[0], a[1] + b[1]

    @staticmethod
    def _negate_key(a):
        return -a[0], -a[1]

    @classmethod
    def monomial(cls, a: int, b: int, coefficient=1) -> "TTPoly":
        return cls({(a, b): coefficient})

    def shift(self, a: int, b: int) -> "TTPoly":
        terms = self._terms.items()
        return TTPoly({(ka + a, kb + b): value for (ka, kb), value in terms})

    def evaluate_at_one(self):
        return sum(self._terms.values(), 0)

    def degree(self) -> Tuple[int, int]:
        if not self._terms:
            return 0, 0
        return max(a for a, _ in self._terms), max(b for _, b in self._terms)

    def low_degree(self) -> Tuple[int, int]:
        if not self._terms:
            return 0, 0
        return min(a for a, _ in self._terms), min(b for _, b in self._terms)

    def is_diagonal(self) -> bool:
        return all(a == b for a, b in self._terms)

    def diagonal(self) -> UPoly:
        """Inverse of UPoly.embed on diagonal polynomials."""
        if not self.is_diagonal():
            raise ValueError(f"{self} has off-diagonal Hodge terms")
        return UPoly({2 * a: value for (a, _), value in self._terms.items()})

    def __str__(self):
        parts = []
        for (a, b), value in sorted(self._terms.items()):
            factors = []
            for name, power in (("t", a), ("tb", b)):
                if power == 1:
                    factors.append(name)
                elif power:
                    factors.append(f"{name}^{power}")
            if not factors:
                parts.append(_format_coefficient(value, False))
            else:
                parts.append(_format_coefficient(value, True) + "*".join(factors))
        return _join_terms(parts)


class YPoly(SparsePolynomial):
    """Laurent polynomial in y over an arbitrary coefficient ring.

    ``window=None`` means the polynomial is exact. Otherwise only exponents with
    ``|e| <= window`` are known and every other coefficient is unknown.
    """

    __slots__ = ("window",)
    _rank = 2

    def __init__(self, terms=None, window: Optional[int] = None):
        if window is not None and window < 0:
            raise TruncationError(f"y-window {window} is empty")
        self.window = window
        if window is not None:
            terms = {
                key: value
                for key, value in (terms or {}).items()
                if abs(key) <= window
            }
        super().__init__(terms)

    def _new(self, terms, window: Union[Optional[int], str] = "same"):
        return YPoly(terms, self.window if window == "same" else window)

    @classmethod
    def constant(cls, value, window: Optional[int] = None):
        return cls({0: value}, window)

    @classmethod
    def monomial(cls, exponent: int, coefficient=1, window: Optional[int] = None):
        return cls({exponent: coefficient}, window)

    def is_exact(self) -> bool:
        return self.window is None

    def max_abs_exponent(self) -> int:
        return max((abs(key) for key in self._terms), default=0)

    def restrict(self, window: Optional[int]) -> "YPoly":
        if window is None:
            return self
        if self.window is not None and window > self.window:
            raise TruncationError(f"cannot widen y-window {self.window} to {window}")
        return YPoly(self._terms, window)

    def invert_y(self) -> "YPoly":
        return self._new({-key: value for key, value in self._terms.items()})

    def shift(self, exponent: int) -> "YPoly":
        """Multiply by y^exponent."""
        window = None if self.window is None else self.window - abs(exponent)
        terms = {key + exponent: value for key, value in self._terms.items()}
        return YPoly(terms, window)

    def map_coefficients(self, function: Callable) -> "YPoly":
        return self._new({key: function(value) for key, value in self._terms.items()})

    @staticmethod
    def _combine_windows(a: Optional[int], b: Optional[int]) -> Optional[int]:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        if isinstance(other, YPoly):
            terms = dict(self._terms)
            for key, value in other._terms.items():
                terms[key] = terms.get(key, 0) + value
            return YPoly(terms, self._combine_windows(self.window, other.window))
        if self._is_scalar(other):
            return self + YPoly.constant(other)
        return NotImplemented

    def __radd__(self, other):
        if self._is_scalar(other):
            return YPoly.constant(other) + self
        return NotImplemented

    def __rsub__(self, other):
        if self._is_scalar(other):
            return YPoly.constant(other) + (-self)
        return NotImplemented

    def _multiply(self, other: "YPoly") -> "YPoly":
        if self.window is not None and other.window is not None:
            raise TruncationError("product of two windowed y-series is not determined")
        if self.window is None and other.window is None:
            window = None
        elif self.window is None:
            window = other.window - self.max_abs_exponent()
        else:
            window = self.window - other.max_abs_exponent()
        if window is not None and window < 0:
            raise TruncationError("y-window exhausted by multiplication")
        terms: Dict[int, object] = {}
        for (ka, va), (kb, vb) in product(self._terms.items(), other._terms.items()):
            key = ka + kb
            if window is not None and abs(key) > window:
                continue
            terms[key] = terms.get(key, 0) + va * vb
        return YPoly(terms, window)

    def __eq__(self, other):
        if isinstance(other, YPoly):
            window = self._combine_windows(self.window, other.window)
            difference = self - other
            return all(
                window is not None and abs(key) > window for key in difference._terms
            )
        if self._is_scalar(other):
            return self == YPoly.constant(other)
        return NotImplemented

    def __str__(self):
        parts = []
        for key, value in sorted(self._terms.items()):
            if key == 0:
                parts.append(f"({value})")
                continue
            monomial = "y" if key == 1 else f"y^{key}"
            parts.append(f"({value}){monomial}")
        text = _join_terms(parts)
        if self.window is not None:
            text += f" [|y|<={self.window}]"
        return text


U_MINUS_ONE = UPoly({2: 1, 0: -1})


def u_power(exponent: Exponent) -> UPoly:
    return UPoly.monomial(exponent)


def rational_upoly(value: Rational) -> UPoly:
    return UPoly.constant(value)
