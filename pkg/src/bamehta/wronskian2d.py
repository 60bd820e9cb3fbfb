"""Trigonometric Wronskians for the planar configurations A^q_{(m, mt, 1^l)}.

The cosine chain ``chi_j = cos(k_j phi)`` gives

    Q = Wr[chi_0..chi_m] / Wr[chi_0..chi_{m-1}]
      = A (sin q phi)^m (cos q phi)^mt prod_j sin(q phi - phi_j),

and the lines of the configuration sit at ``(phi_j + pi s)/q``.  Q is computed
exactly as a Laurent polynomial in ``z = e^{i phi}``; after dividing out the
sine and cosine powers, what is left is a polynomial of degree ``l`` in
``w = z^{2q}`` whose roots are ``e^{2 i phi_j}``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arrangements import Arrangement
from .closed_forms import a_coefficient, wronskian_frequencies
from .errors import FactorizationMismatch

# ---------------------------------------------------------------------------
# trigonometric polynomials


class TrigPoly:
    """``sum_k a_k cos(k phi) + b_k sin(k phi)`` with exact rational coefficients, ``k >= 0``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for k, (a, b) in (terms or {}).items():
            k = int(k)
            a, b = Fraction(a), Fraction(b)
            if k < 0:
                k, b = -k, -b
            if k == 0:
                b = Fraction(0)
            if k in clean:
                a0, b0 = clean[k]
                a, b = a + a0, b + b0
            if a or b:
                clean[k] = (a, b)
            else:
                clean.pop(k, None)
        self.terms = clean

    @classmethod
    def cos(cls, k: int, c=1) -> "TrigPoly":
        return cls({k: (c, 0)})

    @classmethod
    def sin(cls, k: int, c=1) -> "TrigPoly":
        return cls({k: (0, c)})

    @classmethod
    def constant(cls, c) -> "TrigPoly":
        return cls({0: (c, 0)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, TrigPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for k, (a, b) in other.terms.items():
            a0, b0 = out.get(k, (0, 0))
            out[k] = (a0 + a, b0 + b)
        return TrigPoly(out)

    def __neg__(self):
        return TrigPoly({k: (-a, -b) for k, (a, b) in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TrigPoly":
        c = Fraction(c)
        return TrigPoly({k: (a * c, b * c) for k, (a, b) in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TrigPoly):
            return self.scale(other)
        acc = {}

        def put(k, a, b):
            if k < 0:
                k, b = -k, -b
            a0, b0 = acc.get(k, (Fraction(0), Fraction(0)))
            acc[k] = (a0 + a, b0 + b)

        half = Fraction(1, 2)
        for j, (a1, b1) in self.terms.items():
            for k, (a2, b2) in other.terms.items():
                # product-to-sum identities
                if a1 and a2:
                    put(j + k, half * a1 * a2, 0)
                    put(j - k, half * a1 * a2, 0)
                if b1 and b2:
                    put(j - k, half * b1 * b2, 0)
                    put(j + k, -half * b1 * b2, 0)
                if a1 and b2:
                    put(j + k, 0, half * a1 * b2)
                    put(k - j, 0, half * a1 * b2)
                if b1 and a2:
                    put(j + k, 0, half * b1 * a2)
                    put(j - k, 0, half * b1 * a2)
        return TrigPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = TrigPoly.constant(1)
        for _ in range(int(e)):
            out = out * self
        return out

    def derivative(self) -> "TrigPoly":
        return TrigPoly({k: (k * b, -k * a) for k, (a, b) in self.terms.items()})

    def degree(self) -> int:
        return max(self.terms, default=-1)

    def __call__(self, phi):
        phi = np.asarray(phi, dtype=float)
        out = np.zeros_like(phi)
        for k, (a, b) in self.terms.items():
            out = out + float(a) * np.cos(k * phi) + float(b) * np.sin(k * phi)
        return out

    def __repr__(self):
        parts = []
        for k in sorted(self.terms):
            a, b = self.terms[k]
            if a:
                parts.append(f"{a}*cos({k}p)")
            if b:
                parts.append(f"{b}*sin({k}p)")
        return " + ".join(parts) or "0"

    # --- Laurent form in z = e^{i phi}: coefficients are (re, im) Fraction pairs

    def to_laurent(self) -> dict:
        out = {}

        def put(e, re, im):
            r0, i0 = out.get(e, (Fraction(0), Fraction(0)))
            out[e] = (r0 + re, i0 + im)

        half = Fraction(1, 2)
        for k, (a, b) in self.terms.items():
            if k == 0:
                put(0, a, Fraction(0))
                continue
            # a cos = a/2 (z^k + z^-k); b sin = -i b/2 (z^k - z^-k)
            put(k, half * a, -half * b)
            put(-k, half * a, half * b)
        return {e: c for e, c in out.items() if c[0] or c[1]}

    @classmethod
    def from_laurent(cls, coeffs: dict) -> "TrigPoly":
        terms = {}
        for e, (re, im) in coeffs.items():
            if e < 0:
                continue
            if e == 0:
                if im:
                    raise ValueError("Laurent polynomial is not real")
                terms[0] = (re, Fraction(0))
                continue
            re2, im2 = coeffs.get(-e, (Fraction(0), Fraction(0)))
            if re2 != re or im2 != -im:
                raise ValueError("Laurent polynomial is not real")
            # c z^e + conj(c) z^-e = 2 re cos - 2 im sin
            terms[e] = (2 * re, -2 * im)
        for e in coeffs:
            if e < 0 and -e not in coeffs:
                raise ValueError("Laurent polynomial is not real")
        return cls(terms)


def _cmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _cdiv(x, y):
    n = y[0] * y[0] + y[1] * y[1]
    return ((x[0] * y[0] + x[1] * y[1]) / n, (x[1] * y[0] - x[0] * y[1]) / n)


def laurent_divmod(num: dict, den: dict):
    """Long division of Laurent polynomials with Gaussian-rational coefficients."""
    if not den:
        raise ZeroDivisionError("division by the zero trigonometric polynomial")
    rem = dict(num)
    dtop = max(den)
    dlow = min(den)
    lead = den[dtop]
    quo = {}
    while rem and max(rem) - dtop >= min(rem) - dlow:
        top = max(rem)
        c = _cdiv(rem[top], lead)
        shift = top - dtop
        quo[shift] = c
        for e, d in den.items():
            r = rem.get(e + shift, (Fraction(0), Fraction(0)))
            p = _cmul(c, d)
            v = (r[0] - p[0], r[1] - p[1])
            if v[0] or v[1]:
                rem[e + shift] = v
            else:
                rem.pop(e + shift, None)
    return quo, rem


def exact_quotient(num: TrigPoly, den: TrigPoly) -> TrigPoly:
    quo, rem = laurent_divmod(num.to_laurent(), den.to_laurent())
    if rem:
        raise FactorizationMismatch(f"{num!r} is not divisible by {den!r}")
    return TrigPoly.from_laurent(quo)


def _det(rows):
    """Determinant of a small square matrix of TrigPoly by cofactor expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    out = TrigPoly()
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


def wronskian(frequencies, kind: str = "cos") -> TrigPoly:
    """``Wr[f(k_0 phi), ..., f(k_r phi)]`` for ``f = cos`` or ``sin``, exactly."""
    ks = [int(k) for k in frequencies]
    if any(k < 0 for k in ks):
        raise ValueError("frequencies must be non-negative")
    if len(set(ks)) != len(ks):
        raise ValueError(f"repeated frequencies {ks}: the Wronskian vanishes identically")
    if kind not in ("cos", "sin"):
        raise ValueError(f"kind must be 'cos' or 'sin', got {kind!r}")
    if not ks:
        return TrigPoly.constant(1)
    cols = [TrigPoly.cos(k) if kind == "cos" else TrigPoly.sin(k) for k in ks]
    rows = []
    cur = cols
    for _ in range(len(ks)):
        rows.append(cur)
        cur = [c.derivative() for c in cur]
    return _det(rows)


# ---------------------------------------------------------------------------
# factorization


@dataclass
class Factorization:
    m: int
    mt: int
    l: int
    q: int
    frequencies: tuple
    Q: TrigPoly
    A: Fraction
    angles: tuple
    residual: float
    collisions: tuple = ()

    @property
    def angle_sum(self) -> float:
        return float(sum(self.angles))


def _check_params(m, mt, l, q):
    for v, name in ((m, "m"), (mt, "mtilde"), (l, "l"), (q, "q")):
        if isinstance(v, bool) or int(v) != v or v < 0:
            raise ValueError(f"{name} must be a non-negative integer")
    if m < 1 or q < 1 or mt > m or l % 2:
        raise ValueError("need m >= mtilde, m, q >= 1 and l even")


def factorize_q(m: int, mt: int, l: int, q: int, tol: float = 1e-10, samples: int = 50) -> Factorization:
    """Exact Q for the cosine chain, its leading constant A and the angles phi_j.

    The sign of A is fixed by comparing Q with the reconstruction at the
    reference angle ``pi / (4 q (m + mt + l))``.
    """
    _check_params(m, mt, l, q)
    ks = wronskian_frequencies(m, mt, l, q)
    Q = exact_quotient(wronskian(ks), wronskian(ks[:-1]))
    s = TrigPoly.sin(q)
    c = TrigPoly.cos(q)
    R = exact_quotient(Q, s ** m * c ** mt)
    lr = R.to_laurent()
    # z^{q l} R is a polynomial of degree l in w = z^{2q}
    poly = {}
    for e, v in lr.items():
        shifted = e + q * l
        if shifted % (2 * q) or shifted < 0:
            raise FactorizationMismatch(f"remaining factor has unexpected frequency {e}")
        poly[shifted // (2 * q)] = v
    if max(poly) != l or min(poly) != 0 and l:
        raise FactorizationMismatch(f"remaining factor has degree {max(poly)} in w, expected {l}")
    lead = poly[l]
    if l:
        coeffs = [complex(float(poly.get(d, (0, 0))[0]), float(poly.get(d, (0, 0))[1])) for d in range(l, -1, -1)]
        roots = np.roots(coeffs)
        angles = np.sort(np.mod(np.angle(roots) / 2, np.pi))
        # A = lead (2i)^l e^{i sum phi_j}; the unit is exactly one of 1, i, -1, -i
        unit = np.exp(1j * angles.sum())
        k = int(round(np.angle(unit) / (np.pi / 2))) % 4
        if abs(unit - 1j ** k) > 1e-8:
            raise FactorizationMismatch("angle sum is not a multiple of pi/2")
        coef = _cmul(lead, [(1, 0), (0, 1), (-1, 0), (0, -1)][(k + l) % 4])
        coef = (coef[0] * 2 ** l, coef[1] * 2 ** l)
    else:
        angles = np.array([])
        coef = lead
    if coef[1]:
        raise FactorizationMismatch(f"leading constant {coef} is not real")
    A = Fraction(coef[0])

    def model(phi):
        out = float(A) * np.sin(q * phi) ** m * np.cos(q * phi) ** mt
        for a in angles:
            out = out * np.sin(q * phi - a)
        return out

    ref = math.pi / (4 * q * (m + mt + l))
    if np.sign(model(ref)) != np.sign(Q(ref)):
        raise FactorizationMismatch("sign of A disagrees with Q at the reference angle")
    rng = np.random.default_rng(12345)
    pts = rng.uniform(0, 2 * np.pi, samples)
    qv = Q(pts)
    scale = max(1.0, float(np.max(np.abs(qv))))
    residual = float(np.max(np.abs(qv - model(pts)))) / scale
    if residual > tol:
        raise FactorizationMismatch(f"reconstruction residual {residual:.3g} exceeds {tol:g}")
    if abs(A) != a_coefficient(m, mt, l, q):
        raise FactorizationMismatch(f"|A| = {abs(A)} differs from the closed form {a_coefficient(m, mt, l, q)}")
    collisions = tuple((i, j) for i, j in itertools.combinations(range(len(angles)), 2)
                       if abs(angles[i] - angles[j]) < 1e-7)
    return Factorization(m, mt, l, q, tuple(ks), Q, A, tuple(float(a) for a in angles), residual, collisions)


def emit_arrangement(m: int, mt: int, l: int, q: int, angles=None) -> Arrangement:
    """Lines ``sqrt2 (-sin phi_{j,s}, cos phi_{j,s})``, ``phi_{j,s} = (phi_j + pi s)/q``.

    ``phi_0 = 0`` carries multiplicity ``m``, ``phi_{l+1} = pi/2`` carries
    ``mt`` (dropped when zero) and the ``l`` inner angles carry 1.
    """
    _check_params(m, mt, l, q)
    if angles is None:
        angles = factorize_q(m, mt, l, q).angles
    angles = list(angles)
    if len(angles) != l:
        raise ValueError(f"expected {l} angles, got {len(angles)}")
    base = [(0.0, m)] + [(a, 1) for a in angles] + [(math.pi / 2, mt)]
    vecs = []
    for phi, mult in base:
        if not mult:
            continue
        for s in range(q):
            ang = (phi + math.pi * s) / q
            vecs.append(((-math.sqrt(2) * math.sin(ang), math.sqrt(2) * math.cos(ang)), mult))
    # orient every vector into a common half-plane
    ref = np.array([math.cos(0.1234), math.sin(0.1234)])
    oriented = []
    for v, mult in vecs:
        if np.dot(v, ref) < 0:
            v = (-v[0], -v[1])
        oriented.append((v, mult))
    return Arrangement(tuple(oriented), 2, None, name=f"A^{q}_({m},{mt},1^{l})", numeric_only=True)


def cartesian_q_polynomial(Q: TrigPoly, degree: int):
    """Evaluator of ``r^degree Q(phi)`` as a homogeneous polynomial in ``(x_1, x_2)``.

    Uses ``r^N cos(k phi) = (x_1^2 + x_2^2)^{(N-k)/2} Re (x_1 + i x_2)^k`` and
    the matching sine identity, continued analytically to complex points.
    """
    for k in Q.terms:
        if (degree - k) % 2 or k > degree:
            raise ValueError(f"frequency {k} incompatible with homogeneous degree {degree}")
    items = [(k, float(a), float(b)) for k, (a, b) in Q.terms.items()]

    def ev(x):
        x1, x2 = x[:, 0], x[:, 1]
        rr = x1 * x1 + x2 * x2
        out = np.zeros(x.shape[0], dtype=complex)
        for k, a, b in items:
            zp = (x1 + 1j * x2) ** k
            zm = (x1 - 1j * x2) ** k
            re = (zp + zm) / 2
            im = (zp - zm) / 2j
            out += rr ** ((degree - k) // 2) * (a * re + b * im)
        return out

    return ev
