"""Gamma-product closed forms for generalised Macdonald-Mehta integrals.

Every evaluator is written once against a small arithmetic backend and run
twice: in floating complex arithmetic, and exactly when all arguments are
integers or half-integers.  The exact run fails quietly (``exact=None``) as
soon as some factor has no exact form.

Two printed constants are corrected here (see ``as_printed`` flags):
the Dotsenko-Fateev denominator uses ``alpha + beta``, the phase in the
deformed type-A value is ``(-1)^{mn} exp(-pi i (m(m-1) rho/2 + n(n-1)/(2 rho)))``,
and the deformed type-BC value (with its corollary for ``C_{m+1}(r, s)``)
carries ``2^{-2(m+n)}`` relative to the printed constant.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import gamma as _g
from .errors import GammaPole

REL_AGREEMENT = 1e-12
_H = Fraction(1, 2)


@dataclass(frozen=True)
class ClosedFormValue:
    value: complex
    exact: _g.ExactValue | None
    source: str
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.exact is not None:
            ex = complex(self.exact)
            if abs(ex - self.value) > REL_AGREEMENT * max(abs(ex), 1e-300):
                raise AssertionError(f"{self.source}: exact {ex} and float {self.value} disagree")

    @property
    def rational(self):
        """The exact value as a Fraction when it is rational, else None."""
        return self.exact.as_fraction() if self.exact is not None else None

    def __complex__(self):
        return complex(self.value)

    def __float__(self):
        if abs(self.value.imag) > 1e-12 * max(1.0, abs(self.value.real)):
            raise TypeError(f"{self.source} value {self.value} is not real")
        return self.value.real

    def exact_str(self) -> str | None:
        return None if self.exact is None else str(self.exact)


# ---------------------------------------------------------------------------
# arithmetic backends

class _Float:
    exact = False

    @staticmethod
    def num(x):
        return complex(x)

    G = staticmethod(_g.gamma)
    RG = staticmethod(_g.rgamma)

    @staticmethod
    def pow2(x):
        return cmath.exp(complex(x) * math.log(2))

    @staticmethod
    def pow_pos(base, x):
        """``base^x`` for real base > 0."""
        return cmath.exp(complex(x) * math.log(complex(base).real))

    @staticmethod
    def pi_pow(x):
        return cmath.exp(complex(x) * math.log(math.pi))

    @staticmethod
    def e_pi_i(x):
        x = complex(x)
        # reduce the real part mod 2 for accuracy at large arguments
        r = math.fmod(x.real, 2.0)
        return cmath.exp(1j * math.pi * complex(r, x.imag))

    @staticmethod
    def geom(a: int, u):
        """``(1 - e^{2 pi i a u}) / (1 - e^{2 pi i u}) = sum_{r<a} e^{2 pi i r u}``; no singularity."""
        u = complex(u)
        return sum(_Float.e_pi_i(2 * r * u) for r in range(a))

    @staticmethod
    def ipow(k: int, base):
        return complex(base) ** k


class _Exact:
    exact = True

    @staticmethod
    def num(x):
        if isinstance(x, (int, Fraction)):
            return _g.ExactValue(Fraction(x))
        raise _g.NotExact(x)

    G = staticmethod(_g.gamma_exact)
    RG = staticmethod(_g.rgamma_exact)
    pow2 = staticmethod(_g.pow2_exact)
    pi_pow = staticmethod(_g.pi_pow_exact)
    e_pi_i = staticmethod(_g.exp_pi_i_exact)

    @staticmethod
    def pow_pos(base, x):
        if isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1):
            return _Exact.num(Fraction(base)) ** int(x)
        if Fraction(base) == 2:
            return _g.pow2_exact(x)
        raise _g.NotExact(f"{base}^{x}")

    @staticmethod
    def geom(a: int, u):
        out = _g.ExactValue(Fraction(0))
        for r in range(a):
            out = out + _g.exp_pi_i_exact(2 * r * _frac(u))
        return out

    @staticmethod
    def ipow(k: int, base):
        return _Exact.num(base) ** k


def _frac(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise _g.NotExact(x)


def _to_exact_arg(x):
    """Exact Fraction for ints, Fractions and floats that are multiples of 1/4, else None."""
    if isinstance(x, bool):
        return None
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, complex):
        if x.imag:
            return None
        x = x.real
    if isinstance(x, float) and math.isfinite(x):
        f = Fraction(x)
        if (4 * f).denominator == 1:
            return f
    return None


def _evaluate(formula, source, args: dict, *, exact_ok=True) -> ClosedFormValue:
    """Run ``formula(backend, **args)`` in float mode and (if possible) exactly."""
    fargs = {}
    eargs = {}
    exact_possible = exact_ok
    for k, v in args.items():
        if isinstance(v, (int, Fraction, float, complex)) and not isinstance(v, bool):
            fargs[k] = complex(v) if isinstance(v, complex) or not isinstance(v, int) else v
            e = _to_exact_arg(v)
            if e is None:
                exact_possible = False
            eargs[k] = e if e is None or e.denominator != 1 else int(e)
        else:
            fargs[k] = eargs[k] = v
    value = complex(formula(_Float, **fargs))
    exact = None
    if exact_possible:
        try:
            exact = formula(_Exact, **eargs)
            if not isinstance(exact, _g.ExactValue):
                exact = _g.ExactValue.of(exact)
        except (_g.NotExact, TypeError):
            exact = None
        except GammaPole:
            # a pole the float path stepped around numerically cannot be trusted
            raise
    if exact is not None:
        value = complex(exact)
    params = {k: (str(v) if isinstance(v, Fraction) else v) for k, v in args.items() if not hasattr(v, "degrees")}
    return ClosedFormValue(value, exact, source, params)


# ---------------------------------------------------------------------------
# Coxeter groups, equal multiplicity

def _degrees(datum):
    return tuple(int(d) for d in datum.degrees)


def mm_coxeter(datum, k) -> ClosedFormValue:
    """``int_{R^n} prod |(alpha, x)|^{2k} dgamma = prod Gamma(1 + k d_j) / Gamma(1 + k)``."""
    def f(B, datum, k):
        out = B.num(1)
        for d in _degrees(datum):
            out = out * B.G(1 + k * d) / B.G(1 + k)
        return out
    return _evaluate(f, "macdonald-mehta", {"datum": datum, "k": k})


def contour_factor_equal(datum, k) -> ClosedFormValue:
    """Ratio of the shifted-contour integral to the real one (positive-chamber branch).

    ``(1/|W|) prod (1 - e^{2 pi i k d_j}) / (1 - e^{2 pi i k})``; the integer-k
    limit is built in through the geometric-sum form of each ratio.
    """
    def f(B, datum, k):
        out = B.num(Fraction(1, datum.order))
        for d in _degrees(datum):
            out = out * B.geom(d, k)
        return out
    return _evaluate(f, "contour-factor", {"datum": datum, "k": k})


def contour_gaussian(datum, m: int) -> ClosedFormValue:
    """``int_{i xi + R^n} dgamma / prod (alpha, x)^{2m} = (-1)^{m|R+|}/|W| prod Gamma(m)/Gamma(m d_j)``."""
    _check_pos_int(m, "m")

    def f(B, datum, m):
        out = B.num(Fraction((-1) ** (m * datum.n_positive), datum.order))
        for d in _degrees(datum):
            out = out * B.G(m) / B.G(m * d)
        return out
    return _evaluate(f, "contour-gaussian", {"datum": datum, "m": m})


def gw_product(datum, m: int) -> ClosedFormValue:
    """``G_W(m) G_W(-m)`` assembled from the evaluators; equals ``(-1)^{m|R+|}``."""
    _check_pos_int(m, "m")
    g_plus = mm_coxeter(datum, m)
    factor = contour_factor_equal(datum, m)
    g_minus = contour_gaussian(datum, m)
    value = g_plus.value * factor.value * g_minus.value
    exact = None
    if g_plus.exact is not None and factor.exact is not None and g_minus.exact is not None:
        exact = g_plus.exact * factor.exact * g_minus.exact
    return ClosedFormValue(value if exact is None else complex(exact), exact, "reflection-product",
                           {"m": m})


def _poch(x, n):
    out = 1
    for i in range(n):
        out *= x + i
    return out


def wm_norm(datum, m: int) -> ClosedFormValue:
    """``(w_m, w_m) = (-1)^{m|R+|} prod (m+2)_{(m+1)(d_j-1)} (m+1)_{m(d_j-1)}``."""
    if int(m) != m or m < 0:
        raise ValueError("m must be a non-negative integer")
    m = int(m)
    out = (-1) ** (m * datum.n_positive)
    for d in _degrees(datum):
        out *= _poch(m + 2, (m + 1) * (d - 1)) * _poch(m + 1, m * (d - 1))
    ex = _g.ExactValue(Fraction(out))
    return ClosedFormValue(complex(out), ex, "m-discriminant-norm", {"m": m})


# ---------------------------------------------------------------------------
# two orbits: B_n (short roots e_j) and F4 (short roots of length 1)

def _family(family, n):
    f = family.upper()
    if f.startswith("B") or f.startswith("C"):
        rank = n if n is not None else (int(f[1:]) if f[1:].isdigit() else None)
        if rank is None or rank < 1:
            raise ValueError("B_n family needs a rank")
        return "B", rank
    if f == "F4":
        return "F4", 4
    raise ValueError(f"two-parameter formulas exist for B_n and F4, not {family!r}")


def mm_two_param(family, k1, k2, n: int | None = None) -> ClosedFormValue:
    """Real-axis integral of ``|Delta_s|^{2k1} |Delta_l|^{2k2}`` (short roots unnormalised)."""
    fam, n = _family(family, n)

    def f(B, k1, k2, n):
        if fam == "B":
            out = B.pow2(-n * k1)
            for j in range(1, n + 1):
                out = out * B.G(1 + 2 * k1 + 2 * k2 * (j - 1)) / B.G(1 + k1 + k2 * (j - 1))
                out = out * B.G(1 + j * k2) / B.G(1 + k2)
            return out
        s = k1 + k2
        out = B.pow2(-12 * k1) * B.G(4 * s + 1) * B.G(6 * s + 1) / (B.G(s + 1) * B.G(3 * s + 1))
        for kj in (k1, k2):
            out = out * B.G(2 * kj + 1) * B.G(3 * kj + 1) * B.G(2 * kj + 2 * s + 1)
            out = out / (B.G(kj + 1) * B.G(kj + 1) * B.G(kj + s + 1))
        return out
    return _evaluate(f, f"macdonald-mehta-two-param-{fam}", {"k1": k1, "k2": k2, "n": n})


def contour_factor_two_param(family, k1, k2, n: int | None = None) -> ClosedFormValue:
    """``P(k1, k2) / |W|``: shifted over real integral for the two-orbit branch."""
    fam, n = _family(family, n)
    order = 2 ** n * math.factorial(n) if fam == "B" else 1152

    def f(B, k1, k2, n):
        out = B.num(Fraction(1, order))
        if fam == "B":
            for j in range(1, n + 1):
                out = out * B.geom(2, k1 + (j - 1) * k2) * B.geom(j, k2)
            return out
        s = k1 + k2
        out = out * B.geom(4, s) * B.geom(2, 3 * s)
        for kj in (k1, k2):
            out = out * B.geom(2, kj) * B.geom(3, kj) * B.geom(2, kj + s)
        return out
    return _evaluate(f, f"contour-factor-two-param-{fam}", {"k1": k1, "k2": k2, "n": n})


def contour_gaussian_two_param(family, m1: int, m2: int, n: int | None = None) -> ClosedFormValue:
    """``int_{i xi + R^n} dgamma / (Delta_s^{2 m1} Delta_l^{2 m2})``."""
    fam, n = _family(family, n)
    _check_pos_int(m1, "m1")
    _check_pos_int(m2, "m2")

    def f(B, m1, m2, n):
        if fam == "B":
            out = B.num(Fraction((-2) ** (n * m1), 2 ** n * math.factorial(n)))
            for j in range(1, n + 1):
                out = out * B.G(m1 + (j - 1) * m2) / B.G(2 * m1 + 2 * (j - 1) * m2)
                out = out * B.G(m2) / B.G(j * m2)
            return out
        s = m1 + m2
        out = B.num(Fraction(2 ** (12 * m1), 2 ** 7 * 3 ** 2))
        out = out * B.G(s) * B.G(3 * s) / (B.G(4 * s) * B.G(6 * s))
        for mj in (m1, m2):
            out = out * B.G(mj) * B.G(mj) * B.G(mj + s) / (B.G(2 * mj) * B.G(3 * mj) * B.G(2 * mj + 2 * s))
        return out
    return _evaluate(f, f"contour-gaussian-two-param-{fam}", {"m1": m1, "m2": m2, "n": n})


# ---------------------------------------------------------------------------
# two-dimensional configurations from Darboux chains

def _check_2d(m, mt, l, q):
    for name, v in (("m", m), ("mtilde", mt), ("l", l), ("q", q)):
        if int(v) != v or v < 0:
            raise ValueError(f"{name} must be a non-negative integer")
    if m < 1 or q < 1:
        raise ValueError("need m >= 1 and q >= 1")
    if mt > m:
        raise ValueError("need m >= mtilde")
    if l % 2:
        raise ValueError("l must be even")


def wronskian_frequencies(m: int, mt: int, l: int, q: int) -> list[int]:
    """Frequencies ``k_0..k_m`` of the cosine chain.

    For ``mt >= 1``: ``k_j = q j`` (j <= m - mt), ``k_{m-mt+j} = q(m - mt + 2j)``
    (1 <= j < mt), ``k_m = q(m + mt + l)``.  For ``mt = 0`` the last frequency
    is ``q(m + l)`` and the rest are ``q j``.
    """
    _check_2d(m, mt, l, q)
    if mt == 0:
        return [q * j for j in range(m)] + [q * (m + l)]
    ks = [q * j for j in range(m - mt + 1)]
    ks += [q * (m - mt + 2 * j) for j in range(1, mt)]
    ks.append(q * (m + mt + l))
    return ks


def a_coefficient(m: int, mt: int, l: int, q: int) -> int:
    """``|A| = 2^{m + mt + l - 1} prod_{j<m} (k_m - k_j)``."""
    ks = wronskian_frequencies(m, mt, l, q)
    out = Fraction(2) ** (m + mt + l - 1)
    for kj in ks[:-1]:
        out *= ks[-1] - kj
    return out


def phi00_dihedral_wronskian(m: int, mt: int, l: int, q: int) -> ClosedFormValue:
    """``phi(0,0) = (-1)^{q(m+mt)} 2 Gamma(q(m+mt+l)+1) prod (k_m + k_j)/(k_m - k_j)``."""
    ks = wronskian_frequencies(m, mt, l, q)
    km = ks[-1]
    out = Fraction((-1) ** (q * (m + mt)) * 2 * math.factorial(q * (m + mt + l)))
    for kj in ks[:-1]:
        out *= Fraction(km + kj, km - kj)
    return ClosedFormValue(complex(out), _g.ExactValue(out), "dihedral-phi00",
                           {"m": m, "mtilde": mt, "l": l, "q": q})


def mm_2d(m: int, mt: int, l: int, q: int) -> ClosedFormValue:
    """``M = (-1)^{q(m+mt)} (2^{N-1} Gamma(N+1) prod (k_m^2 - k_j^2))^{-1}`` with ``N = q(m+mt+l)``."""
    ks = wronskian_frequencies(m, mt, l, q)
    km = ks[-1]
    N = q * (m + mt + l)
    den = Fraction(2) ** (N - 1) * math.factorial(N)
    for kj in ks[:-1]:
        den *= km * km - kj * kj
    out = Fraction((-1) ** (q * (m + mt))) / den
    return ClosedFormValue(complex(out), _g.ExactValue(out), "dihedral-macdonald-mehta",
                           {"m": m, "mtilde": mt, "l": l, "q": q})


# ---------------------------------------------------------------------------
# deformed root systems

def _pole_order(t):
    """``r`` when ``t = -r`` is a pole of Gamma (r = 0, 1, ...), else None."""
    if isinstance(t, (int, Fraction)):
        t = Fraction(t)
        return int(-t) if t.denominator == 1 and t <= 0 else None
    t = complex(t)
    if t.imag == 0 and t.real <= 0 and t.real == round(t.real):
        return int(-t.real)
    return None


def _gamma_ratio(B, a: int, b: int, t):
    """``Gamma(a t + b) / Gamma(t)`` for integers ``a >= 1``, ``b <= 0``.

    At ``t = -r`` both gammas have poles; the ratio of residues gives the
    finite limit ``(-1)^{K-r} r! / (a K!)`` with ``a t + b = -K``.
    """
    r = _pole_order(t)
    if r is None:
        return B.G(a * t + b) / B.G(t)
    K = a * r - b
    return B.num(Fraction((-1) ** (K - r) * math.factorial(r), a * math.factorial(K)))


def _gamma_ratios(B, n, m, rho, inv):
    """``prod_{j<=n} Gamma(j/rho)/Gamma(1/rho) prod_{j<=m} Gamma(j rho - n)/Gamma(rho)``.

    The j = 1 factors that are identically one are skipped; ratios whose
    gammas both sit on poles (integer rho) take their finite limits.
    """
    out = B.num(1)
    for j in range(2, n + 1):
        out = out * _gamma_ratio(B, j, 0, inv)
    for j in range(1 if n else 2, m + 1):
        out = out * _gamma_ratio(B, j, -n, rho)
    return out


def dotsenko_fateev(n: int, m: int, alpha, beta, rho, as_printed: bool = False) -> ClosedFormValue:
    """Dotsenko-Fateev value of J.

    The denominator of the last product uses ``alpha + beta``; with
    ``as_printed=True`` the printed ``2 alpha`` is used instead.
    """
    _check_nonneg_int(n, "n")
    _check_nonneg_int(m, "m")

    def f(B, n, m, alpha, beta, rho):
        out = B.num(1)
        if n * m:
            out = out * B.ipow(2 * n * m, rho)
        for k in range(1, m + 1):
            out = out * B.geom(k, -rho)
        for k in range(1, n + 1):
            out = out * B.geom(k, -1 / rho if not B.exact else -Fraction(1) / rho)
        inv = (1 / rho) if not B.exact else Fraction(1) / rho
        out = out * _gamma_ratios(B, n, m, rho, inv)
        for j in range(n):
            out = out * B.G(1 - alpha * inv + j * inv) * B.G(1 - beta * inv + j * inv)
            out = out * B.RG(2 - 2 * m - (alpha + beta + n - 1 + j) * inv)
        second = 2 * alpha if as_printed else alpha + beta
        for j in range(m):
            out = out * B.G(1 - n + alpha + j * rho) * B.G(1 - n + beta + j * rho)
            out = out * B.RG(2 - n + second + (m - 1 + j) * rho)
        return out
    tag = "dotsenko-fateev" + ("-as-printed" if as_printed else "")
    return _evaluate(f, tag, {"n": n, "m": m, "alpha": alpha, "beta": beta, "rho": rho})


def deformed_a_phase(n: int, m: int, rho, as_printed: bool = False) -> complex:
    if as_printed:
        return (-1) ** m * cmath.exp(-1j * math.pi * (m * (m - 1) * rho + n * (n - 1) / (2 * rho)))
    return (-1) ** (m * n) * cmath.exp(-1j * math.pi * (m * (m - 1) * rho / 2 + n * (n - 1) / (2 * rho)))


def m_deformed_a(n: int, m: int, rho, as_printed: bool = False) -> ClosedFormValue:
    """Gaussian limit of the Dotsenko-Fateev integral for the deformed type-A system.

    ``M = eps prod_{i,j} (i - j rho)^{-1} prod_i Gamma(1-1/rho)/Gamma(1-i/rho)
    prod_j Gamma(1-rho)/Gamma(1-j rho)`` with the corrected phase
    ``eps = (-1)^{mn} exp(-pi i (m(m-1) rho/2 + n(n-1)/(2 rho)))``.
    """
    _check_nonneg_int(n, "n")
    _check_nonneg_int(m, "m")

    def f(B, n, m, rho):
        inv = (1 / rho) if not B.exact else Fraction(1) / rho
        if as_printed:
            eps = B.num((-1) ** m) * B.e_pi_i(-(m * (m - 1) * rho + n * (n - 1) * inv * _H))
        else:
            eps = B.num((-1) ** (m * n)) * B.e_pi_i(-(m * (m - 1) * rho * _H + n * (n - 1) * inv * _H))
        out = eps
        for j in range(1, m + 1):
            for i in range(1, n + 1):
                out = out / B.num(i - j * rho)
        for i in range(1, n + 1):
            out = out * B.G(1 - inv) / B.G(1 - i * inv)
        for j in range(1, m + 1):
            out = out * B.G(1 - rho) / B.G(1 - j * rho)
        return out
    tag = "deformed-A" + ("-as-printed" if as_printed else "")
    return _evaluate(f, tag, {"n": n, "m": m, "rho": rho})


def m_deformed_a_unreflected(n: int, m: int, rho) -> ClosedFormValue:
    """The same integral before the reflection formula is applied (phase ratios times gammas).

    Independent check on the phase: valid wherever no gamma argument is a pole.
    """
    def f(B, n, m, rho):
        inv = (1 / rho) if not B.exact else Fraction(1) / rho
        out = B.num(1)
        for k in range(1, m + 1):
            out = out * B.geom(k, -rho)
        for k in range(1, n + 1):
            out = out * B.geom(k, -inv)
        out = out * _gamma_ratios(B, n, m, rho, inv)
        return out
    return _evaluate(f, "deformed-A-unreflected", {"n": n, "m": m, "rho": rho})


def phi00_deformed_a(m: int, p: int) -> ClosedFormValue:
    """``phi(0,0)`` for ``A_m(p)``: ``(-1)^{m + p m(m-1)/2} prod_j Gamma(pj+2)/Gamma(p+1)``."""
    _check_pos_int(m, "m")
    _check_pos_int(p, "p")
    out = Fraction((-1) ** (m + p * m * (m - 1) // 2))
    for j in range(1, m + 1):
        out *= Fraction(math.factorial(p * j + 1), math.factorial(p))
    return ClosedFormValue(complex(out), _g.ExactValue(out), "deformed-A-phi00", {"m": m, "p": p})


def m1_deformed_b(n: int, m: int, alpha, rho) -> ClosedFormValue:
    """Value of the intermediate ray integral ``M_1`` of the type-B limit."""
    _check_nonneg_int(n, "n")
    _check_nonneg_int(m, "m")

    def f(B, n, m, alpha, rho):
        inv = (1 / rho) if not B.exact else Fraction(1) / rho
        out = B.num(1)
        if n * m:
            out = out * B.ipow(2 * n * m, rho)
        if n:
            out = out * B.pow_pos(-2 * rho, n * (1 - 2 * m - (alpha - n + 1) * inv))
        out = out * B.pow2(m * (1 + alpha + (m - 1) * rho))
        for k in range(1, m + 1):
            out = out * B.geom(k, -rho)
        for k in range(1, n + 1):
            out = out * B.geom(k, -inv)
        out = out * _gamma_ratios(B, n, m, rho, inv)
        for j in range(n):
            out = out * B.G(1 - (alpha - j) * inv)
        for j in range(m):
            out = out * B.G(1 - n + alpha + j * rho)
        return out
    return _evaluate(f, "deformed-B-ray", {"n": n, "m": m, "alpha": alpha, "rho": rho})


def m_deformed_bc(n: int, m: int, alpha, rho, as_printed: bool = False) -> ClosedFormValue:
    """Gaussian integral for the deformed type-BC system.

    Carries ``2^{-2mn - n alpha/rho + n(n-1)/rho + m alpha + m(m-1) rho}``; the
    printed constant has an extra ``2^{2(m+n)}`` (kept with ``as_printed``),
    which comes from multiplying instead of dividing by the Jacobian factor
    of the square-root substitution.
    """
    _check_nonneg_int(n, "n")
    _check_nonneg_int(m, "m")

    def f(B, n, m, alpha, rho):
        inv = (1 / rho) if not B.exact else Fraction(1) / rho
        e2 = -2 * m * n - n * alpha * inv + n * (n - 1) * inv + m * alpha + m * (m - 1) * rho
        if as_printed:
            e2 = e2 + 2 * (m + n)
        # (2 pi)^{(m+n)/2}
        out = B.pow2(Fraction(m + n, 2) if B.exact else (m + n) / 2) * B.pi_pow(Fraction(m + n, 2) if B.exact else (m + n) / 2)
        out = out * B.pow2(e2)
        out = out * B.e_pi_i((Fraction(m + n, 2) if B.exact else (m + n) / 2) + m * alpha - n * alpha * inv)
        for k in range(1, m + 1):
            den = B.num(1)
            for j in range(1, n + 1):
                den = den * B.num(k * rho - j)
            out = out / den
            if k > 1:
                out = out * B.G(1 - rho) / B.G(1 - k * rho)
        for k in range(2, n + 1):
            out = out * B.G(1 - inv) / B.G(1 - k * inv)
        for j in range(n):
            out = out * B.RG((alpha - j) * inv)
        for j in range(m):
            out = out * B.RG(-alpha - j * rho)
        for j in range(m):
            for k in range(n):
                out = out / B.num(alpha + j * rho - k)
        return out
    tag = "deformed-BC" + ("-as-printed" if as_printed else "")
    return _evaluate(f, tag, {"n": n, "m": m, "alpha": alpha, "rho": rho})


def phi00_deformed_c(m: int, r: int, s: int, as_printed: bool = False) -> ClosedFormValue:
    """``phi(0,0)`` for ``C_{m+1}(r, s)``, ``p = (2r+1)/(2s+1)``.

    ``(-1)^{mr+s} 2^{s - 3/2 + mp(s - 1/2 + m) + 2(m+1)} (2 pi)^{-(m+1)/2}
    Gamma(s + 1/2) prod_{j<m} Gamma(jp + r + 3/2) Gamma(jp + p + 2) / Gamma(p + 1)``;
    ``as_printed`` drops the ``2(m+1)`` (printed form).
    """
    from .errors import IntegralityViolation

    _check_pos_int(m, "m")
    _check_nonneg_int(r, "r")
    _check_nonneg_int(s, "s")
    if (2 * r + 1) % (2 * s + 1):
        raise IntegralityViolation(f"p = {2 * r + 1}/{2 * s + 1} is not an integer")
    p = (2 * r + 1) // (2 * s + 1)
    half = Fraction(1, 2)

    def f(B, m, r, s):
        e2 = s - 3 * half + m * p * (s - half + m)
        if not as_printed:
            e2 += 2 * (m + 1)
        out = B.num((-1) ** (m * r + s)) * B.pow2(e2 if B.exact else float(e2))
        out = out * B.pow2(-Fraction(m + 1, 2) if B.exact else -(m + 1) / 2)
        out = out * B.pi_pow(-Fraction(m + 1, 2) if B.exact else -(m + 1) / 2)
        out = out * B.G(s + half if B.exact else s + 0.5)
        for j in range(m):
            out = out * B.G(j * p + r + (3 * half if B.exact else 1.5)) * B.G(j * p + p + 2) / B.G(p + 1)
        return out
    tag = "deformed-C-phi00" + ("-as-printed" if as_printed else "")
    return _evaluate(f, tag, {"m": m, "r": r, "s": s})


# ---------------------------------------------------------------------------

def _check_pos_int(v, name):
    if isinstance(v, bool) or int(v) != v or v < 1:
        raise ValueError(f"{name} must be a positive integer, got {v!r}")


def _check_nonneg_int(v, name):
    if isinstance(v, bool) or int(v) != v or v < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {v!r}")
