"""Exact scalars: rationals and elements of a real quadratic field Q(sqrt d).

Inside one computation every coefficient shares the same ``d``.  For ``d == 1``
plain :class:`fractions.Fraction` values are used directly, which keeps the
common rational case fast; otherwise coefficients are :class:`QF` instances.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from ..errors import FieldMismatch


def _squarefree(d: int) -> bool:
    if d < 1:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


class QF:
    """``a + b*sqrt(d)`` with rational ``a``, ``b``.

    Instances are immutable and hashable.  Arithmetic with ints and Fractions
    coerces them into the field; mixing two different ``d`` raises
    :class:`FieldMismatch`.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=2):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", int(d))

    def __setattr__(self, name, value):
        raise AttributeError("QF is immutable")

    @classmethod
    def _raw(cls, a, b, d):
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        object.__setattr__(obj, "d", d)
        return obj

    def _coerce(self, other):
        if isinstance(other, QF):
            if other.d != self.d:
                raise FieldMismatch(f"Q(sqrt {self.d}) vs Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Rational)):
            return QF._raw(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QF._raw(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QF._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QF._raw(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QF._raw(self.a * other, self.b * other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QF._raw(self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self) -> "QF":
        return QF._raw(self.a, -self.b, self.d)

    def inverse(self) -> "QF":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return QF._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt d)")
            return QF._raw(self.a / other, self.b / other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QF._raw(Fraction(1), Fraction(0), self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QF):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def sign(self) -> int:
        """Exact sign of the real number ``a + b sqrt d``."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with d b^2
        diff = self.a * self.a - self.d * self.b * self.b
        if diff == 0:
            return 0
        return sa if diff > 0 else sb

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __complex__(self):
        return complex(float(self))

    def __repr__(self):
        return f"QF({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        return f"{self.a} + {self.b}*sqrt({self.d})"


class Field:
    """Coefficient context: Q when ``d == 1``, otherwise Q(sqrt d)."""

    __slots__ = ("d",)

    def __init__(self, d: int = 1):
        d = int(d)
        if d != 1 and not _squarefree(d):
            raise ValueError(f"d must be a square-free integer > 1 (or 1 for Q), got {d}")
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    def __eq__(self, other):
        return isinstance(other, Field) and other.d == self.d

    def __hash__(self):
        return hash(("Field", self.d))

    def __repr__(self):
        return "Field(Q)" if self.d == 1 else f"Field(Q(sqrt {self.d}))"

    @property
    def is_rational(self) -> bool:
        return self.d == 1

    def __call__(self, a=0, b=0):
        """Build ``a + b sqrt d`` in this field."""
        if self.d == 1:
            if b:
                raise FieldMismatch("irrational part requested in Q")
            return Fraction(a)
        return QF(a, b, self.d)

    def sqrt_d(self):
        return Fraction(1) if self.d == 1 else QF(0, 1, self.d)

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def coerce(self, x):
        """Bring ``x`` (int, Fraction, QF) into this field."""
        if isinstance(x, QF):
            if self.d == 1:
                if x.b:
                    raise FieldMismatch(f"{x} is not rational")
                return x.a
            if x.d != self.d:
                raise FieldMismatch(f"Q(sqrt {x.d}) element used in {self}")
            return x
        if isinstance(x, (int, Rational)):
            return self(Fraction(x))
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def parts(self, x):
        """Return ``(a, b)`` with ``x == a + b sqrt d``."""
        x = self.coerce(x)
        if isinstance(x, QF):
            return x.a, x.b
        return Fraction(x), Fraction(0)

    def to_float(self, x) -> float:
        a, b = self.parts(x)
        return float(a) + float(b) * math.sqrt(self.d)

    def sign(self, x) -> int:
        x = self.coerce(x)
        if isinstance(x, QF):
            return x.sign()
        return (x > 0) - (x < 0)

    def encode(self, x) -> list:
        """Flat integer encoding ``[a_num, a_den, b_num, b_den]``."""
        a, b = self.parts(x)
        return [a.numerator, a.denominator, b.numerator, b.denominator]

    def decode(self, data):
        if len(data) == 2 and all(isinstance(p, (list, tuple)) for p in data):
            (an, ad), (bn, bd) = data
        else:
            an, ad, bn, bd = data
        return self(Fraction(an, ad), Fraction(bn, bd))

    def join(self, other: "Field") -> "Field":
        """Smallest field in scope containing both, or FieldMismatch."""
        if self.d == other.d or other.d == 1:
            return self
        if self.d == 1:
            return other
        raise FieldMismatch(f"cannot combine {self} and {other}")
