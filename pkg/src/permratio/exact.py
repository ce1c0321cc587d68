"""Exact scalars: Python ints, :class:`fractions.Fraction`, and Q(sqrt 2).

Python's ``int`` is already an unbounded integer and ``Fraction`` keeps
itself in lowest terms with a positive denominator, so both are used
directly.  Only the quadratic extension needs a type of its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import NonRational, ParseError

Scalar = Union[int, Fraction]


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class Sqrt2:
    """The number ``a + b*sqrt(2)`` with rational ``a`` and ``b``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _q(self.a))
        object.__setattr__(self, "b", _q(self.b))

    @classmethod
    def coerce(cls, x) -> "Sqrt2":
        if isinstance(x, Sqrt2):
            return x
        return cls(_q(x), Fraction(0))

    def __add__(self, other):
        try:
            o = Sqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return Sqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Sqrt2(-self.a, -self.b)

    def __sub__(self, other):
        try:
            o = Sqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return Sqrt2(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = Sqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return sqrt2_mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Only division by a rational is needed; keeps the type closed without inverses.
        if isinstance(other, Sqrt2):
            if other.b != 0:
                n = other.norm()
                return self * other.conjugate() * Sqrt2(1 / n)
            other = other.a
        d = _q(other)
        return Sqrt2(self.a / d, self.b / d)

    def __pow__(self, e: int):
        return sqrt2_pow(self, e)

    def conjugate(self) -> "Sqrt2":
        return Sqrt2(self.a, -self.b)

    def norm(self) -> Fraction:
        """``x * conjugate(x)``, always rational."""
        return self.a * self.a - 2 * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self):
        return f"{format_rational(self.a)}+{format_rational(self.b)}*sqrt2"


ONE = Sqrt2(1, 0)
ZERO = Sqrt2(0, 0)
SQRT2 = Sqrt2(0, 1)


def sqrt2_mul(x: Sqrt2, y: Sqrt2) -> Sqrt2:
    return Sqrt2(x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a)


def sqrt2_pow(x: Sqrt2, e: int) -> Sqrt2:
    if not isinstance(e, int) or e < 0:
        raise ValueError("exponent must be a nonnegative integer")
    result = ONE
    base = x
    while e:
        if e & 1:
            result = sqrt2_mul(result, base)
        base = sqrt2_mul(base, base)
        e >>= 1
    return result


def conjugate(x: Sqrt2) -> Sqrt2:
    return x.conjugate()


def as_rational(x: Sqrt2) -> Fraction:
    if x.b != 0:
        raise NonRational(f"{x} has a nonzero sqrt2 component")
    return x.a


def format_rational(q) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = _q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        if not sep:
            return Fraction(int(num))
        if den.strip().startswith(("-", "+")):
            raise ParseError(f"sign belongs on the numerator: {text!r}")
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r}") from exc


def format_decimal(q, places: int = 12) -> str:
    """Round half away from zero to a fixed number of decimal places."""
    q = _q(q)
    scale = 10**places
    neg = q < 0
    num, den = abs(q.numerator) * scale, q.denominator
    whole, rem = divmod(num, den)
    if 2 * rem >= den:
        whole += 1
    int_part, frac_part = divmod(whole, scale)
    sign = "-" if neg and whole else ""
    if places == 0:
        return f"{sign}{int_part}"
    return f"{sign}{int_part}.{frac_part:0{places}d}"
