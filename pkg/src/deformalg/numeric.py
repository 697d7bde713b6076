"""Exact rationals and the three-mode scalar domain.

Every quantity in this package is a :class:`Scalar`: an exact rational
(arbitrary-precision ``fractions.Fraction``), a real double, or a complex
double.  Mixed-mode arithmetic promotes to the least exact mode involved
(exact -> real -> complex); the reverse direction is an error, never a
silent conversion.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import ClosureError, DivisionByZero, IllegalPromotion

# Rational values are plain stdlib Fractions: arbitrary-precision integers,
# always canonical (positive denominator, gcd-reduced).
Rational = Fraction

EXACT = "exact"
REAL = "real"
COMPLEX = "complex"

MODES = (EXACT, REAL, COMPLEX)

# Promotion order: lower rank = more exact.
_RANK = {EXACT: 0, REAL: 1, COMPLEX: 2}

ScalarLike = Union["Scalar", Fraction, int, float, complex, str]


def join_mode(a: str, b: str) -> str:
    """Least exact of two modes."""
    return a if _RANK[a] >= _RANK[b] else b


def rational_from_string(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact rational."""
    return Fraction(text.strip())


def rational_to_string(value: Fraction) -> str:
    """Format as "p/q", or "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _integer_nth_root(n: int, k: int) -> int | None:
    """Exact k-th root of a nonnegative integer, or None if not a perfect power."""
    if n < 0 or k <= 0:
        return None
    if n in (0, 1) or k == 1:
        return n
    if k == 2:
        r = math.isqrt(n)
        return r if r * r == n else None
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def rational_pow(base: Fraction, exponent: Fraction) -> Fraction:
    """base**exponent as an exact rational, or ClosureError if irrational.

    Integer exponents always succeed (base != 0); fractional exponents
    succeed only when base is a perfect power, e.g. 16**(1/2) = 4.
    """
    exponent = Fraction(exponent)
    base = Fraction(base)
    if exponent.denominator == 1:
        e = exponent.numerator
        if e >= 0:
            return base**e
        if base == 0:
            raise DivisionByZero("0 raised to a negative power")
        return (1 / base) ** (-e)
    if base < 0:
        raise ClosureError(f"({base})**({exponent}) is not a real rational")
    if base == 0:
        return Fraction(0)
    k = exponent.denominator
    num_root = _integer_nth_root(base.numerator, k)
    den_root = _integer_nth_root(base.denominator, k)
    if num_root is None or den_root is None:
        raise ClosureError(f"({base})**({exponent}) is irrational")
    return rational_pow(Fraction(num_root, den_root), Fraction(exponent.numerator))


class Scalar:
    """Immutable number in one of the modes exact | real | complex."""

    __slots__ = ("mode", "value")

    def __init__(self, mode: str, value):
        if mode not in _RANK:
            raise ValueError(f"unknown scalar mode {mode!r}")
        if mode == EXACT:
            value = Fraction(value)
        elif mode == REAL:
            value = float(value)
        else:
            value = complex(value)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, val):  # pragma: no cover - immutability guard
        raise AttributeError("Scalar is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def exact(value) -> "Scalar":
        return Scalar(EXACT, Fraction(value))

    @staticmethod
    def real(value) -> "Scalar":
        return Scalar(REAL, float(value))

    @staticmethod
    def of(value: ScalarLike) -> "Scalar":
        """Wrap a native number; ints/Fractions/strings stay exact."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, (int, Fraction)):
            return Scalar(EXACT, value)
        if isinstance(value, str):
            return Scalar(EXACT, rational_from_string(value))
        if isinstance(value, float):
            return Scalar(REAL, value)
        if isinstance(value, complex):
            return Scalar(COMPLEX, value)
        raise TypeError(f"cannot build a Scalar from {type(value).__name__}")

    # -- mode handling -------------------------------------------------

    def promote(self, target_mode: str) -> "Scalar":
        """Convert toward a less exact mode; exact->real is nearest-double."""
        if target_mode not in _RANK:
            raise ValueError(f"unknown scalar mode {target_mode!r}")
        if _RANK[target_mode] < _RANK[self.mode]:
            raise IllegalPromotion(f"cannot promote {self.mode} value to {target_mode}")
        if target_mode == self.mode:
            return self
        return Scalar(target_mode, self.value)

    @property
    def is_exact(self) -> bool:
        return self.mode == EXACT

    def _pair(self, other: ScalarLike) -> tuple["Scalar", "Scalar", str]:
        other = Scalar.of(other)
        mode = join_mode(self.mode, other.mode)
        return self.promote(mode), other.promote(mode), mode

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        a, b, mode = self._pair(other)
        return Scalar(mode, a.value + b.value)

    __radd__ = __add__

    def __sub__(self, other):
        a, b, mode = self._pair(other)
        return Scalar(mode, a.value - b.value)

    def __rsub__(self, other):
        return Scalar.of(other).__sub__(self)

    def __mul__(self, other):
        a, b, mode = self._pair(other)
        return Scalar(mode, a.value * b.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b, mode = self._pair(other)
        if b.value == 0:
            raise DivisionByZero(f"division by zero in {mode} mode")
        return Scalar(mode, a.value / b.value)

    def __rtruediv__(self, other):
        return Scalar.of(other).__truediv__(self)

    def __neg__(self):
        return Scalar(self.mode, -self.value)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("Scalar power requires an integer exponent")
        if exponent < 0 and self.value == 0:
            raise DivisionByZero("0 raised to a negative power")
        return Scalar(self.mode, self.value**exponent)

    def __abs__(self):
        if self.mode == COMPLEX:
            return Scalar(REAL, abs(self.value))
        return Scalar(self.mode, abs(self.value))

    # -- predicates and conversions -------------------------------------

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def is_integer(self) -> bool:
        if self.mode == EXACT:
            return self.value.denominator == 1
        if self.mode == REAL:
            return float(self.value).is_integer()
        return self.value.imag == 0 and self.value.real.is_integer()

    def sign(self) -> int:
        if self.mode == COMPLEX:
            raise TypeError("sign of a complex scalar is undefined")
        if self.value > 0:
            return 1
        if self.value < 0:
            return -1
        return 0

    def __float__(self) -> float:
        if self.mode == COMPLEX:
            if self.value.imag != 0:
                raise TypeError("complex scalar has nonzero imaginary part")
            return self.value.real
        return float(self.value)

    def __complex__(self) -> complex:
        return complex(self.value)

    def magnitude(self) -> float:
        """abs as a float, for residual reporting in any mode."""
        return abs(complex(self.value))

    def __eq__(self, other):
        if not isinstance(other, (Scalar, int, float, complex, Fraction)):
            return NotImplemented
        a, b, _ = self._pair(other)
        return a.value == b.value

    def __hash__(self):
        # Python's numeric hash agrees across Fraction/float/complex,
        # keeping hash consistent with cross-mode equality.
        return hash(self.value)

    def close_to(self, other: ScalarLike, tol: float = 1e-10) -> bool:
        """Mode-aware comparison: exact pairs compare exactly, floats to tol."""
        a, b, mode = self._pair(other)
        if mode == EXACT:
            return a.value == b.value
        diff = abs(complex(a.value) - complex(b.value))
        scale = max(1.0, abs(complex(a.value)), abs(complex(b.value)))
        return diff <= tol * scale

    def __repr__(self):
        return f"Scalar({self.mode}, {self.value!r})"

    def __str__(self):
        if self.mode == EXACT:
            return rational_to_string(self.value)
        return str(self.value)

    # -- powers with scalar exponents -----------------------------------

    def pow_scalar(self, exponent: "Scalar") -> "Scalar":
        """self**exponent; exact when representable, ClosureError otherwise.

        Float-mode values never raise ClosureError (the result is a float).
        """
        exponent = Scalar.of(exponent)
        mode = join_mode(self.mode, exponent.mode)
        if mode == EXACT:
            return Scalar(EXACT, rational_pow(self.value, exponent.value))
        a = complex(self.value) if mode == COMPLEX else float(self.value)
        e = complex(exponent.value) if mode == COMPLEX else float(exponent.value)
        if a == 0 and (e.real if mode == COMPLEX else e) < 0:
            raise DivisionByZero("0 raised to a negative power")
        return Scalar(mode, a**e)

    # -- serialization ---------------------------------------------------

    def to_json(self):
        """JSON form: exact/real as strings, complex as [re, im]."""
        if self.mode == EXACT:
            return rational_to_string(self.value)
        if self.mode == REAL:
            return format_float(self.value)
        return [self.value.real, self.value.imag]

    @staticmethod
    def from_json(data, mode_hint: str | None = None) -> "Scalar":
        if isinstance(data, list):
            if len(data) != 2:
                raise ValueError("complex scalar JSON must be [re, im]")
            return Scalar(COMPLEX, complex(float(data[0]), float(data[1])))
        if isinstance(data, (int, float)) and not isinstance(data, bool):
            s = Scalar(EXACT, data) if isinstance(data, int) else Scalar(REAL, data)
        elif isinstance(data, str):
            try:
                s = Scalar(EXACT, rational_from_string(data))
            except ValueError:
                s = Scalar(REAL, float(data))
        else:
            raise ValueError(f"cannot parse scalar from {data!r}")
        if mode_hint is not None:
            s = s.promote(join_mode(s.mode, mode_hint))
        return s


def format_float(x: float) -> str:
    """Round-trip decimal formatting used in all JSON output."""
    return f"{x:.17g}"


ZERO = Scalar.exact(0)
ONE = Scalar.exact(1)
