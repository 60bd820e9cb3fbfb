"""Calogero-Moser operator acting on exponential-polynomial forms.

The arrangement argument only needs ``.vectors`` (a sequence of
``(coords, multiplicity)`` pairs) and ``.dim``; it is typed loosely so this
layer does not depend on :mod:`bamehta.arrangements`.
"""

from __future__ import annotations

from ..errors import ArityMismatch, TermBudgetExceeded
from .poly import ExpPoly, MultiPoly, dir_derivative, exact_div_linear, _align


def _laplacian(p: MultiPoly) -> MultiPoly:
    out = MultiPoly.zero(p.n, p.field)
    for i in range(p.n):
        out = out + p.partial(i).partial(i)
    return out


def _grad_dot_lambda(p: MultiPoly) -> MultiPoly:
    """``(lam, grad_x P)``."""
    n = p.n
    out = MultiPoly.zero(n, p.field)
    for i in range(n):
        d = p.partial(i)
        if d:
            # multiply by lam_i
            terms = {e[:n + i] + (e[n + i] + 1,) + e[n + i + 1:]: c for e, c in d.terms.items()}
            out = out + MultiPoly._wrap(n, p.field, terms)
    return out


def _vectors(arrangement):
    return [(list(v), int(m)) for v, m in arrangement.vectors]


def apply_shifted_cm(f: ExpPoly, arrangement, shift: bool = True, term_budget: int | None = None) -> ExpPoly:
    """``(L - lam^2) f`` for ``f = P e^{(x,lam)}``, or ``L f`` when ``shift`` is False.

    Uses (L - lam^2)(P e) = (Delta P + 2(lam, grad P)
    - sum_a 2 m_a (a,x)^{-1} (d_a P + (a,lam) P)) e, so the lam^2 terms are
    never formed.  Each division is exact on quasi-invariant input;
    otherwise :class:`NonDivisible` propagates.  With ``term_budget`` set,
    :class:`TermBudgetExceeded` is raised as soon as a partial sum grows
    past it rather than after the whole step.
    """
    P = f.poly if isinstance(f, ExpPoly) else f
    if P.n != arrangement.dim:
        raise ArityMismatch(f"polynomial arity {P.n} vs arrangement dimension {arrangement.dim}")
    out = _laplacian(P) + _grad_dot_lambda(P).scale(2)
    for alpha, m in _vectors(arrangement):
        P, alpha = _align(P, alpha)
        num = dir_derivative(P, alpha) + P.mul_linear(alpha, block="lam")
        out = out - exact_div_linear(num, alpha).scale(2 * m)
        if term_budget is not None and max(len(out), len(num)) > term_budget:
            raise TermBudgetExceeded(max(len(out), len(num)), term_budget)
    if not shift:
        lam2 = MultiPoly.zero(P.n, P.field)
        for i in range(P.n):
            lam2 = lam2 + MultiPoly.variable(i, P.n, P.field, block="lam") ** 2
        out = out + lam2 * P
    return ExpPoly(out)


def apply_cm(p: MultiPoly, arrangement) -> MultiPoly:
    """``L p = Delta p - sum 2 m_a (a,x)^{-1} d_a p`` on an x-only polynomial."""
    if p.n != arrangement.dim:
        raise ArityMismatch(f"polynomial arity {p.n} vs arrangement dimension {arrangement.dim}")
    out = _laplacian(p)
    for alpha, m in _vectors(arrangement):
        p, alpha = _align(p, alpha)
        d = dir_derivative(p, alpha)
        if d:
            out = out - exact_div_linear(d, alpha).scale(2 * m)
    return out
