"""Baker-Akhiezer functions for arrangements with multiplicities.

The function is built from Berest's formula

    phi = (2^{|m|} |m|!)^{-1} (L - lam^2)^{|m|} (A_m(x)^2 e^{(x, lam)}),

and checked against its defining properties: quasi-invariance on each
hyperplane, symmetry in ``x <-> lam``, the leading term
``A_m(x) A_m(lam)`` and the eigen-equation ``L phi = lam^2 phi``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import NonDivisible, TermBudgetExceeded
from .exact_algebra import ExpPoly, MultiPoly, apply_cm, apply_shifted_cm, dir_derivative, reduce_mod_linear
from .exact_algebra.poly import _align

DEFAULT_TERM_BUDGET = 5_000_000


def _check_exact(arrangement):
    if arrangement.field is None:
        raise TypeError(f"{arrangement.name or 'arrangement'} has floating coordinates; "
                        "symbolic construction needs an exact field")


def construct_berest(arrangement, term_budget: int = DEFAULT_TERM_BUDGET, progress=None) -> ExpPoly:
    """Baker-Akhiezer function of ``arrangement`` via Berest's formula.

    Raises :class:`NonDivisible` if some division by ``(alpha, x)`` fails,
    i.e. the arrangement does not admit the function, and
    :class:`TermBudgetExceeded` once an intermediate polynomial holds more
    than ``term_budget`` monomials.
    """
    _check_exact(arrangement)
    total = arrangement.total_multiplicity
    am = arrangement.A_m()
    f = ExpPoly(am * am)
    if len(f.poly) > term_budget:
        raise TermBudgetExceeded(len(f.poly), term_budget)
    for step in range(total):
        f = apply_shifted_cm(f, arrangement, term_budget=term_budget)
        if len(f.poly) > term_budget:
            raise TermBudgetExceeded(len(f.poly), term_budget)
        if progress is not None:
            progress(step + 1, total, len(f.poly))
    norm = Fraction(1, 2 ** total * math.factorial(total))
    return ExpPoly(f.poly.scale(norm))


@dataclass
class AxiomReport:
    quasi_invariance: bool
    symmetry: bool
    leading_term: bool
    eigen_equation: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.quasi_invariance and self.symmetry and self.leading_term and self.eigen_equation

    def as_dict(self) -> dict:
        return {"quasi_invariance": self.quasi_invariance, "symmetry": self.symmetry,
                "leading_term": self.leading_term, "eigen_equation": self.eigen_equation,
                "failures": list(self.failures)}


def normal_derivative_poly(P: MultiPoly, alpha, k: int) -> MultiPoly:
    """Polynomial part of ``d_alpha^k (P e^{(x,lam)})``.

    Equals ``sum_i C(k,i) (alpha, lam)^{k-i} d_alpha^i P``.
    """
    P, alpha = _align(P, alpha)
    lin = MultiPoly.linear_form(alpha, P.n, P.field, block="lam")
    out = MultiPoly.zero(P.n, P.field)
    deriv = P
    for i in range(k + 1):
        out = out + (deriv * lin ** (k - i)).scale(math.comb(k, i))
        deriv = dir_derivative(deriv, alpha)
    return out


def check_quasi_invariance(P: MultiPoly, arrangement) -> list:
    """Return ``[(alpha, k), ...]`` for every failed odd-order condition."""
    bad = []
    for alpha, m in arrangement.vectors:
        for k in range(1, 2 * m, 2):
            if reduce_mod_linear(normal_derivative_poly(P, alpha, k), alpha):
                bad.append((alpha, k))
    return bad


def check_axioms(phi: ExpPoly, arrangement) -> AxiomReport:
    _check_exact(arrangement)
    P = phi.poly
    failures = []
    bad = check_quasi_invariance(P, arrangement)
    qi = not bad
    for alpha, k in bad:
        failures.append(f"d_alpha^{k} phi does not vanish on the hyperplane of {[str(a) for a in alpha]}")
    sym = P.swap_blocks() == P
    if not sym:
        failures.append("P(x, lam) != P(lam, x)")
    am_x = arrangement.A_m()
    am_l = am_x.swap_blocks()
    top = P.homogeneous_part(arrangement.total_multiplicity, "x")
    lead = top.homogeneous_part(arrangement.total_multiplicity, "lam") == am_x * am_l and \
        P.degree() == 2 * arrangement.total_multiplicity
    if not lead:
        failures.append("leading term differs from A_m(x) A_m(lam)")
    try:
        eig = apply_shifted_cm(phi, arrangement).poly.is_zero()
    except NonDivisible:
        eig = False
    if not eig:
        failures.append("(L - lam^2) phi != 0")
    return AxiomReport(qi, sym, lead, eig, failures)


def value_at_origin(phi: ExpPoly):
    """``phi(0, 0)``, the constant term of the polynomial part.

    A zero value is not known to occur; it is reported with a warning
    rather than an error.
    """
    c = phi.poly.constant_term()
    if not c:
        warnings.warn("phi(0,0) = 0: integral representation of the value is unavailable", RuntimeWarning)
    return c


def exp_L(p: MultiPoly, arrangement, t=Fraction(1, 2)) -> MultiPoly:
    """``e^{tL} p = sum_k t^k L^k p / k!`` for an x-only quasi-invariant ``p``.

    The series is finite because ``L`` lowers the degree by two.
    Raises :class:`NonDivisible` when ``p`` is not quasi-invariant.
    """
    if not p.is_x_only():
        raise ValueError("exp_L acts on polynomials in x only")
    t = Fraction(t)
    out = p
    term = p
    k = 0
    while True:
        term = apply_cm(term, arrangement)
        if term.is_zero():
            break
        k += 1
        term = term.scale(t / k)
        out = out + term
    return out


def exp_half_L(p: MultiPoly, arrangement) -> MultiPoly:
    return exp_L(p, arrangement, Fraction(1, 2))


def is_harmonic(p: MultiPoly, arrangement) -> bool:
    return apply_cm(p, arrangement).is_zero()


def discriminant(arrangement) -> MultiPoly:
    """``w_m = prod (alpha, x)^{2 m_alpha + 1}``."""
    _check_exact(arrangement)
    p = MultiPoly.constant(1, arrangement.dim, arrangement.field)
    for v, m in arrangement.vectors:
        p = p * MultiPoly.linear_form(v, arrangement.dim, arrangement.field) ** (2 * m + 1)
    return p


def bilinear_form(p: MultiPoly, q: MultiPoly, arrangement, phi00, contour=None, quad=None):
    """``(p, q)`` on quasi-invariants via the Gaussian integral representation.

    ``phi00 * int (e^{L/2} p)(-ix) (e^{L/2} q)(ix) / A_m(x)^2 dgamma``; the
    exponential is skipped for harmonic inputs (where it is the identity).
    """
    from .arrangements import regular_shift
    from .quadrature import QuadConfig, integrand_from_callable, shifted_gaussian_integral

    ep = p if is_harmonic(p, arrangement) else exp_half_L(p, arrangement)
    eq = q if is_harmonic(q, arrangement) else exp_half_L(q, arrangement)
    am2 = arrangement.A_m() ** 2
    ep_x, eq_x, am_x = _xpoly_evaluator(ep), _xpoly_evaluator(eq), _xpoly_evaluator(am2)
    scale = complex(arrangement.field.to_float(phi00)) if not isinstance(phi00, (complex, float)) else complex(phi00)

    def fn(x):
        return scale * ep_x(-1j * x) * eq_x(1j * x) / am_x(x)

    spec = contour if contour is not None else regular_shift(arrangement)
    integrand = integrand_from_callable(fn, arrangement.dim, arrangement.float_vectors(),
                                        description="bilinear form")
    return shifted_gaussian_integral(integrand, spec, quad or QuadConfig())


def _xpoly_evaluator(p: MultiPoly):
    """Vectorised evaluator of an x-only polynomial on (N, n) complex points."""
    from .quadrature.kernels import eval_monomials

    exps, coeffs = p.to_arrays()
    exps = np.ascontiguousarray(exps[:, :p.n])

    def ev(x):
        return eval_monomials(np.ascontiguousarray(x, dtype=complex), exps, coeffs)

    return ev


# ---------------------------------------------------------------------------
# JSON export

def phi_to_json(phi: ExpPoly) -> dict:
    """Canonical JSON form (terms sorted lexicographically by exponent vector)."""
    P = phi.poly
    n = P.n
    terms = []
    for e, c in P.sorted_terms():
        terms.append({"x_exponents": list(e[:n]), "lambda_exponents": list(e[n:]),
                      "coeff": P.field.encode(c)})
    return {"n": n, "field": {"d": P.field.d}, "terms": terms}


def phi_from_json(doc: dict) -> ExpPoly:
    from .exact_algebra import Field

    F = Field(doc["field"]["d"])
    terms = {tuple(t["x_exponents"]) + tuple(t["lambda_exponents"]): F.decode(t["coeff"]) for t in doc["terms"]}
    return ExpPoly(MultiPoly(doc["n"], F, terms))
