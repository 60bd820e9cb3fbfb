"""Complex gamma function and an exact representation for its special values.

``gamma`` uses reflection for Re z < 1/2, upward recursion to |z| >= 18 and
the Stirling series for log-gamma.  Relative accuracy is about 1e-14 away
from poles.  Poles raise :class:`GammaPole` instead of returning infinity.

:class:`ExactValue` holds numbers of the form ``(a + b i) sqrt2^s pi^{t/2}``
with rational ``a, b``, enough for gamma values at integers and
half-integers and the powers of 2 and 2 pi that accompany them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import GammaPole

# Stirling coefficients B_{2k} / (2k (2k-1))
_STIRLING = [
    Fraction(1, 12), Fraction(-1, 360), Fraction(1, 1260), Fraction(-1, 1680),
    Fraction(1, 1188), Fraction(-691, 360360), Fraction(1, 156), Fraction(-3617, 122400),
    Fraction(43867, 244188), Fraction(-174611, 125400),
]
_STIRLING_F = [float(c) for c in _STIRLING]
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)
_SHIFT = 18.0


def _pole_index(z: complex):
    """Return the integer n <= 0 if z is (numerically) a pole, else None."""
    if abs(z.imag) > 1e-14 * max(1.0, abs(z.real)):
        return None
    r = round(z.real)
    if r <= 0 and abs(z.real - r) <= 1e-13 * max(1.0, abs(r)):
        return int(r)
    return None


def _loggamma_right(z: complex) -> complex:
    """log Gamma(z) for Re z >= 1/2 (branch not normalised)."""
    shift = 0j
    acc = 1 + 0j
    while abs(z) < _SHIFT:
        acc *= z
        if abs(acc) > 1e250 or abs(acc) < 1e-250:
            shift += cmath.log(acc)
            acc = 1 + 0j
        z += 1
    shift += cmath.log(acc)
    inv = 1 / z
    inv2 = inv * inv
    series = 0j
    p = inv
    for c in _STIRLING_F:
        series += c * p
        p *= inv2
    return (z - 0.5) * cmath.log(z) - z + _HALF_LOG_2PI + series - shift


def loggamma(z) -> complex:
    z = complex(z)
    if _pole_index(z) is not None:
        raise GammaPole(z)
    if z.real < 0.5:
        # log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
        return math.log(math.pi) - cmath.log(_sinpi(z)) - _loggamma_right(1 - z)
    return _loggamma_right(z)


def _sinpi(z: complex) -> complex:
    # reduce the real part first so sin(pi z) keeps relative accuracy near integers
    n = math.floor(z.real + 0.5)
    w = complex(z.real - n, z.imag)
    s = cmath.sin(math.pi * w)
    return -s if n % 2 else s


def gamma(z) -> complex:
    """Gamma(z) for complex z; raises GammaPole at 0, -1, -2, ..."""
    z = complex(z)
    if _pole_index(z) is not None:
        raise GammaPole(z)
    if z.imag == 0 and z.real > 0 and z.real == int(z.real) and z.real < 171:
        return complex(math.factorial(int(z.real) - 1))
    if z.real < 0.5:
        return math.pi / (_sinpi(z) * gamma(1 - z))
    if abs(z) < _SHIFT:
        # small |z|: recursion product directly is more accurate than exp(log)
        acc = 1 + 0j
        w = z
        while abs(w) < _SHIFT:
            acc *= w
            w += 1
        return cmath.exp(_loggamma_right(w)) / acc
    return cmath.exp(_loggamma_right(z))


def rgamma(z) -> complex:
    """1/Gamma(z), entire; zero at the poles of Gamma."""
    z = complex(z)
    if _pole_index(z) is not None:
        return 0j
    return 1 / gamma(z)


# ---------------------------------------------------------------------------
# exact values


class NotExact(ValueError):
    """The requested quantity has no representation as an ExactValue."""


@dataclass(frozen=True)
class ExactValue:
    """``(re + i im) * sqrt(2)^s2 * sqrt(pi)^spi`` with ``s2`` in {0, 1}."""

    re: Fraction
    im: Fraction = Fraction(0)
    s2: int = 0
    spi: int = 0

    def __post_init__(self):
        re, im, s2 = Fraction(self.re), Fraction(self.im), int(self.s2)
        # fold even powers of sqrt2 into the coefficient
        k, s2 = divmod(s2, 2)
        scale = Fraction(2) ** k
        object.__setattr__(self, "re", re * scale)
        object.__setattr__(self, "im", im * scale)
        object.__setattr__(self, "s2", s2)
        object.__setattr__(self, "spi", int(self.spi) if (re or im) else 0)
        if not (re or im):
            object.__setattr__(self, "s2", 0)

    @classmethod
    def of(cls, x) -> "ExactValue":
        if isinstance(x, ExactValue):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(Fraction(x))
        raise NotExact(f"{x!r} is not exact")

    def __mul__(self, other):
        o = ExactValue.of(other)
        return ExactValue(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re,
                          self.s2 + o.s2, self.spi + o.spi)

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of exact zero")
        # 1/sqrt2 = sqrt2/2
        return ExactValue(self.re / n, -self.im / n, -self.s2, -self.spi)

    def __truediv__(self, other):
        return self * ExactValue.of(other).inverse()

    def __rtruediv__(self, other):
        return ExactValue.of(other) * self.inverse()

    def __neg__(self):
        return ExactValue(-self.re, -self.im, self.s2, self.spi)

    def _same_kind(self, o):
        if not (self.re or self.im):
            return True
        if not (o.re or o.im):
            return True
        return self.s2 == o.s2 and self.spi == o.spi

    def __add__(self, other):
        o = ExactValue.of(other)
        if not self._same_kind(o):
            raise NotExact("sum of incommensurable exact values")
        if not (self.re or self.im):
            return o
        if not (o.re or o.im):
            return self
        return ExactValue(self.re + o.re, self.im + o.im, self.s2, self.spi)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-ExactValue.of(other))

    def __rsub__(self, other):
        return ExactValue.of(other) + (-self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise NotExact("non-integer power of an exact value")
        out = ExactValue(Fraction(1))
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        try:
            o = ExactValue.of(other)
        except NotExact:
            return NotImplemented
        return (self.re, self.im, self.s2, self.spi) == (o.re, o.im, o.s2, o.spi)

    def __hash__(self):
        return hash((self.re, self.im, self.s2, self.spi))

    def __bool__(self):
        return bool(self.re or self.im)

    def __complex__(self):
        f = math.sqrt(2) ** self.s2 * math.sqrt(math.pi) ** self.spi
        return complex(float(self.re) * f, float(self.im) * f)

    def as_fraction(self):
        """The value as a Fraction when it is rational, else None."""
        if self.im or self.s2 or self.spi:
            return None
        return self.re

    def __str__(self):
        if self.im:
            coeff = f"({self.re} + {self.im}i)"
        else:
            coeff = str(self.re)
        parts = [coeff]
        if self.s2:
            parts.append("sqrt(2)")
        if self.spi:
            parts.append("sqrt(pi)" if self.spi == 1 else f"pi^({Fraction(self.spi, 2)})")
        return "*".join(parts)


def _as_half_integer(x):
    """Return ``2x`` as an int if x is an exact integer or half-integer, else None."""
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return 2 * x
    if isinstance(x, Fraction):
        t = 2 * x
        return int(t) if t.denominator == 1 else None
    return None


def gamma_exact(x) -> ExactValue:
    """Gamma at an integer or half-integer argument, exactly."""
    t = _as_half_integer(x)
    if t is None:
        raise NotExact(f"Gamma({x}) has no exact form here")
    if t % 2 == 0:
        n = t // 2
        if n <= 0:
            raise GammaPole(n)
        return ExactValue(Fraction(math.factorial(n - 1)))
    # x = n + 1/2
    n = (t - 1) // 2
    if n >= 0:
        return ExactValue(Fraction(math.factorial(2 * n), 4 ** n * math.factorial(n)), spi=1)
    k = -n  # Gamma(1/2 - k) = (-4)^k k! / (2k)! sqrt(pi)
    return ExactValue(Fraction((-4) ** k * math.factorial(k), math.factorial(2 * k)), spi=1)


def rgamma_exact(x) -> ExactValue:
    try:
        return gamma_exact(x).inverse()
    except GammaPole:
        return ExactValue(Fraction(0))


def pow2_exact(x) -> ExactValue:
    """``2^x`` for integer or half-integer x."""
    t = _as_half_integer(x)
    if t is None:
        raise NotExact(f"2^{x} has no exact form here")
    return ExactValue(Fraction(1), s2=t)


def pi_pow_exact(x) -> ExactValue:
    """``pi^x`` for integer or half-integer x."""
    t = _as_half_integer(x)
    if t is None:
        raise NotExact(f"pi^{x} has no exact form here")
    return ExactValue(Fraction(1), spi=t)


def exp_pi_i_exact(x) -> ExactValue:
    """``e^{pi i x}`` for half-integer x (a power of i)."""
    t = _as_half_integer(x)
    if t is None:
        raise NotExact(f"exp(pi i {x}) has no exact form here")
    return [ExactValue(1), ExactValue(0, 1), ExactValue(-1), ExactValue(0, -1)][t % 4]
