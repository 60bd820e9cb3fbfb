from fractions import Fraction

import numpy as np
import pytest

from bamehta.errors import ArityMismatch, NonDivisible
from bamehta.exact_algebra import (
    QF,
    ExpPoly,
    Field,
    MultiPoly,
    apply_cm,
    apply_shifted_cm,
    dir_derivative,
    divmod_linear,
    exact_div_linear,
    reduce_mod_linear,
)

Q = Field(1)
R2 = Field(2)
S2 = R2.sqrt_d()


class Arr:
    """Minimal stand-in: the operator layer only reads ``vectors`` and ``dim``."""

    def __init__(self, vectors, dim):
        self.vectors = tuple(vectors)
        self.dim = dim


def x(i, n=1, F=Q):
    return MultiPoly.variable(i, n, F)


def lam(i, n=1, F=Q):
    return MultiPoly.variable(i, n, F, block="lam")


# --- quadratic field scalars ---------------------------------------------

def test_norm_in_q_sqrt2():
    one = R2.one()
    assert (one + S2) * (one - S2) == R2.coerce(-1)


def test_field_division_and_float():
    a = R2.coerce(3) + S2 * 2
    b = R2.coerce(1) - S2
    q = a / b
    assert q * b == a
    assert abs(R2.to_float(q) - (3 + 2 * 2 ** 0.5) / (1 - 2 ** 0.5)) < 1e-13


def test_field_encode_roundtrip():
    v = R2.coerce(Fraction(-3, 7)) + S2 * Fraction(5, 2)
    assert R2.decode(R2.encode(v)) == v


def test_mixed_radicals_rejected():
    with pytest.raises(Exception):
        Field(2).join(Field(3))


# --- polynomial arithmetic ----------------------------------------------

def test_monomial_product():
    assert x(0) * x(0) == x(0) ** 2


def test_additive_identity():
    p = x(0) ** 3 - lam(0) + MultiPoly.constant(5, 1)
    assert p + MultiPoly.zero(1) == p


def test_float_evaluation_matches_exact():
    n = 2
    p = (MultiPoly.linear_form([1, S2], n, R2) ** 3) * MultiPoly.variable(1, n, R2, block="lam") \
        - MultiPoly.constant(R2.coerce(2) - S2, n, R2)
    rng = np.random.default_rng(5)
    for _ in range(10):
        xv, lv = rng.normal(size=2), rng.normal(size=2)
        ref = (xv[0] + 2 ** 0.5 * xv[1]) ** 3 * lv[1] - (2 - 2 ** 0.5)
        assert abs(p(xv, lv) - ref) <= 1e-12 * max(1.0, abs(ref))


# --- directional derivatives ---------------------------------------------

def test_derivative_of_square():
    assert dir_derivative(x(0, 2) ** 2, [1, 0]) == x(0, 2).scale(2)


def test_derivative_chain_rule_with_sqrt2():
    # d_alpha (alpha,x)^3 = 3 (alpha,alpha) (alpha,x)^2 = 12 x^2 for alpha = sqrt2
    p = MultiPoly.linear_form([S2], 1, R2) ** 3
    assert dir_derivative(p, [S2]) == MultiPoly.variable(0, 1, R2) ** 2 * 12


def test_derivative_along_kernel():
    assert dir_derivative(x(0, 2) - x(1, 2), [1, 1]).is_zero()


def test_derivative_lambda_block():
    p = x(0) * lam(0) ** 2
    assert dir_derivative(p, [1], block="lam") == (x(0) * lam(0)).scale(2)


# --- division by linear forms --------------------------------------------

def test_difference_of_squares():
    p = x(0, 2) ** 2 - x(1, 2) ** 2
    assert exact_div_linear(p, [1, -1]) == x(0, 2) + x(1, 2)


def test_non_divisible_reports_remainder():
    with pytest.raises(NonDivisible):
        exact_div_linear(x(0, 2), [0, 1])
    q, r = divmod_linear(x(0, 2), [0, 1])
    assert q.is_zero() and r == x(0, 2)


def test_reduce_mod_linear_detects_vanishing():
    p = (x(0, 2) - x(1, 2)) * lam(1, 2)
    assert reduce_mod_linear(p, [1, -1]).is_zero()
    assert not reduce_mod_linear(p + lam(0, 2), [1, -1]).is_zero()


def test_division_arity_mismatch():
    with pytest.raises(ArityMismatch):
        exact_div_linear(x(0, 2), [1])


def test_division_by_zero_form():
    with pytest.raises(ZeroDivisionError):
        divmod_linear(x(0, 2), [0, 0])


# --- Calogero-Moser operator ---------------------------------------------

def test_shifted_cm_rank_one_step():
    arr = Arr([([S2], 1)], 1)
    f = ExpPoly(MultiPoly.variable(0, 1, R2) ** 2 * 2)
    out = apply_shifted_cm(f, arr).poly
    expected = (MultiPoly.variable(0, 1, R2) * MultiPoly.variable(0, 1, R2, block="lam")).scale(4) \
        - MultiPoly.constant(4, 1, R2)
    assert out == expected


def test_shifted_cm_constant_not_divisible():
    arr = Arr([([S2], 1)], 1)
    with pytest.raises(NonDivisible):
        apply_shifted_cm(ExpPoly(MultiPoly.constant(1, 1, R2)), arr)


def test_shifted_cm_empty_arrangement_is_free_laplacian():
    n = 2
    P = x(0, n) ** 3 * x(1, n) + lam(1, n) * x(1, n) ** 2
    out = apply_shifted_cm(ExpPoly(P), Arr([], n)).poly
    lap = x(0, n) * x(1, n) * 6 + lam(1, n) * 2
    grad_lam = (lam(0, n) * x(0, n) ** 2 * x(1, n)).scale(3) + lam(1, n) * (x(0, n) ** 3) \
        + (lam(1, n) ** 2 * x(1, n)).scale(2)
    assert out == lap + grad_lam.scale(2)


def test_unshifted_operator_adds_lambda_squared():
    arr = Arr([], 1)
    P = x(0)
    assert apply_shifted_cm(ExpPoly(P), arr, shift=False).poly == \
        apply_shifted_cm(ExpPoly(P), arr).poly + lam(0) ** 2 * P


def test_cm_on_invariant():
    arr = Arr([([S2], 1)], 1)
    X = MultiPoly.variable(0, 1, R2)
    # L x^2 = 2 - (2/x)(2x) = -2
    assert apply_cm(X ** 2, arr) == MultiPoly.constant(-2, 1, R2)


def x_degree(p):
    return max(sum(e[:p.n]) for e in p.terms)


@pytest.mark.parametrize("label, m", [("A1", 2), ("A2", 1), ("B2", 1)])
def test_x_degree_drops_by_one_per_application(label, m):
    from bamehta.arrangements import build_coxeter

    arr, _ = build_coxeter(label, m=m)
    am = arr.A_m()
    f = ExpPoly(am * am)
    deg = x_degree(f.poly)
    for _ in range(arr.total_multiplicity):
        f = apply_shifted_cm(f, arr)
        assert x_degree(f.poly) == deg - 1
        deg -= 1
    assert deg == arr.total_multiplicity


def test_qf_str():
    assert str(R2.coerce(-3)) == "-3"
    assert isinstance(S2, QF)
