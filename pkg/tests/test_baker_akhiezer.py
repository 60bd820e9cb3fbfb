import json
from fractions import Fraction
from pathlib import Path

import pytest

from bamehta.arrangements import Arrangement, build_coxeter, build_deformed_a, build_deformed_c
from bamehta.baker_akhiezer import (
    bilinear_form,
    check_axioms,
    construct_berest,
    discriminant,
    exp_L,
    exp_half_L,
    is_harmonic,
    phi_from_json,
    phi_to_json,
    value_at_origin,
)
from bamehta.closed_forms import contour_gaussian, phi00_deformed_c, wm_norm
from bamehta.errors import NonDivisible, TermBudgetExceeded
from bamehta.exact_algebra import ExpPoly, Field, MultiPoly

GOLDEN = Path(__file__).parent / "golden"
R2 = Field(2)
S2 = R2.sqrt_d()


def a1(m=1):
    return build_coxeter("A1", m=m)[0]


def test_rank_one_exact():
    phi = construct_berest(a1())
    X = MultiPoly.variable(0, 1, R2)
    L = MultiPoly.variable(0, 1, R2, block="lam")
    assert phi.poly == (X * L).scale(2) - MultiPoly.constant(2, 1, R2)


@pytest.mark.parametrize("m, value", [(1, -2), (2, 12), (3, -120)])
def test_rank_one_values(m, value):
    phi = construct_berest(a1(m))
    assert check_axioms(phi, a1(m)).ok
    assert value_at_origin(phi) == value


def test_perturbed_phi_fails_quasi_invariance():
    X = MultiPoly.variable(0, 1, R2)
    L = MultiPoly.variable(0, 1, R2, block="lam")
    bad = ExpPoly((X * L).scale(2) - MultiPoly.constant(1, 1, R2))
    rep = check_axioms(bad, a1())
    assert not rep.quasi_invariance and not rep.ok and rep.failures


@pytest.mark.parametrize("label, m", [("A2", 1), ("B2", 1), ("I2(4)", 1), ("A1", 2), ("G2", 1)])
def test_axioms_and_reciprocal(label, m):
    arr, datum = build_coxeter(label, m=m)
    phi = construct_berest(arr)
    rep = check_axioms(phi, arr)
    assert rep.ok, rep.failures
    v = value_at_origin(phi)
    cg = contour_gaussian(datum, m)
    assert abs(complex(arr.field.to_float(v)) * cg.value - 1) < 1e-12


def test_product_factorizes():
    F = R2
    arr = Arrangement((((S2, F.zero()), 1), ((F.zero(), S2), 1)), 2, F)
    phi = construct_berest(arr).poly
    x1, x2 = MultiPoly.variable(0, 2, F), MultiPoly.variable(1, 2, F)
    l1, l2 = MultiPoly.variable(0, 2, F, block="lam"), MultiPoly.variable(1, 2, F, block="lam")
    two = MultiPoly.constant(2, 2, F)
    assert phi == ((x1 * l1).scale(2) - two) * ((x2 * l2).scale(2) - two)
    assert value_at_origin(ExpPoly(phi)) == 4


def test_i2_2_value():
    arr, _ = build_coxeter("I2(2)")
    assert value_at_origin(construct_berest(arr)) == 4


@pytest.mark.parametrize("p", [1, 2, 3])
def test_deformed_rank_one(p):
    arr, _ = build_deformed_a(1, p)
    phi = construct_berest(arr)
    assert check_axioms(phi, arr).ok
    assert value_at_origin(phi) == -(p + 1)


def test_deformed_c_matches_closed_form():
    arr, _ = build_deformed_c(1, 1, 0)
    phi = construct_berest(arr)
    assert check_axioms(phi, arr).ok
    cf = phi00_deformed_c(1, 1, 0)
    assert cf.exact is not None
    assert Fraction(str(value_at_origin(phi))) == cf.exact.as_fraction()


def test_term_budget():
    arr, _ = build_coxeter("A2", m=2)
    with pytest.raises(TermBudgetExceeded):
        construct_berest(arr, term_budget=50)


def test_f4_budget_fails_fast():
    arr, _ = build_coxeter("F4", m=1)
    with pytest.raises(TermBudgetExceeded):
        construct_berest(arr, term_budget=1000)


def test_numeric_arrangement_rejected():
    arr, _ = build_coxeter("I2(5)")
    with pytest.raises(TypeError):
        construct_berest(arr)


# --- e^{L/2} ------------------------------------------------------------

def test_exp_half_L_constant():
    one = MultiPoly.constant(1, 1, R2)
    assert exp_half_L(one, a1()) == one


def test_exp_half_L_square():
    X = MultiPoly.variable(0, 1, R2)
    assert exp_half_L(X ** 2, a1()) == X ** 2 - MultiPoly.constant(1, 1, R2)


def test_exp_half_L_odd_not_quasi_invariant():
    with pytest.raises(NonDivisible):
        exp_half_L(MultiPoly.variable(0, 1, R2), a1())


def test_exp_L_inverse():
    arr, _ = build_coxeter("A2")
    x = [MultiPoly.variable(i, 3, arr.field) for i in range(3)]
    p = sum((xi ** 4 for xi in x), MultiPoly.zero(3, arr.field)) + (x[0] * x[1] * x[2]) ** 2
    fwd = exp_L(p, arr, Fraction(1, 2))
    assert exp_L(fwd, arr, Fraction(-1, 2)) == p
    assert fwd.degree() <= p.degree()


def test_discriminant_harmonic():
    assert is_harmonic(discriminant(a1()), a1())


# --- bilinear form ------------------------------------------------------

def test_bilinear_unit():
    arr = a1()
    one = MultiPoly.constant(1, 1, R2)
    est = bilinear_form(one, one, arr, value_at_origin(construct_berest(arr)))
    assert abs(est.value - 1) < 1e-9


def test_bilinear_discriminant_rank_one():
    arr = a1()
    w = discriminant(arr)
    est = bilinear_form(w, w, arr, -2)
    assert abs(est.value - (-24)) < 1e-7 * 24
    assert wm_norm(build_coxeter("A1")[1], 1).value == -24


def test_bilinear_square_against_direct():
    import numpy as np
    from scipy.special import roots_hermite

    arr = a1()
    X = MultiPoly.variable(0, 1, R2)
    est = bilinear_form(X ** 2, X ** 2, arr, -2)
    # e^{L/2} x^2 = x^2 - 1; integrate (-x^2 - 1)^2 / (2x^2) on the line i + R
    t, w = roots_hermite(200)
    u = t * np.sqrt(2)
    z = u + 1j
    vals = (-(z ** 2) - 1) * (-(z ** 2) - 1) / (2 * z ** 2)
    ref = -2 * np.sum(w / np.sqrt(np.pi) * np.exp(-((z ** 2) - u ** 2) / 2) * vals)
    assert abs(est.value - ref) < 1e-8 * abs(ref)


# --- JSON ----------------------------------------------------------------

def test_phi_json_roundtrip():
    arr, _ = build_coxeter("B2")
    phi = construct_berest(arr)
    doc = json.loads(json.dumps(phi_to_json(phi)))
    assert phi_from_json(doc).poly == phi.poly


@pytest.mark.parametrize("label", ["A1", "A2"])
def test_goldens(label):
    doc = json.loads((GOLDEN / f"construct_{label}_m1.json").read_text())
    phi = construct_berest(build_coxeter(label)[0])
    assert phi_to_json(phi) == doc["phi"]
