import cmath
import math
from fractions import Fraction

import mpmath as mp
import pytest

from bamehta.arrangements import build_coxeter
from bamehta.closed_forms import (
    a_coefficient,
    contour_factor_equal,
    contour_factor_two_param,
    contour_gaussian,
    contour_gaussian_two_param,
    dotsenko_fateev,
    gw_product,
    m1_deformed_b,
    m_deformed_a,
    m_deformed_bc,
    mm_2d,
    mm_coxeter,
    mm_two_param,
    phi00_deformed_a,
    phi00_deformed_c,
    phi00_dihedral_wronskian,
    wm_norm,
    wronskian_frequencies,
)
from bamehta.errors import GammaPole, IntegralityViolation

TABLE = ["A1", "A2", "A3", "B2", "B3", "D4", "G2", "F4", "H3", "I2(5)", "E6"]


def datum(label):
    return build_coxeter(label)[1]


def close(a, b, rel=1e-12):
    return abs(complex(a) - complex(b)) <= rel * max(abs(complex(b)), 1e-300)


# --- equal multiplicity -------------------------------------------------

def test_mm_examples():
    assert mm_coxeter(datum("A1"), 1).rational == 2
    assert mm_coxeter(datum("A2"), 1).rational == 12
    for label in TABLE:
        assert close(mm_coxeter(datum(label), 0).value, 1)


def test_mm_against_mpmath():
    d = datum("B3")
    k = 0.37 + 0.21j
    ref = mp.mpf(1)
    for dj in d.degrees:
        ref *= mp.gamma(1 + k * dj) / mp.gamma(1 + k)
    assert close(mm_coxeter(d, k).value, complex(ref), 1e-12)


def test_mm_pole():
    with pytest.raises(GammaPole):
        mm_coxeter(datum("A1"), -1)


def test_contour_factor_examples():
    assert abs(contour_factor_equal(datum("A1"), Fraction(1, 2)).value) < 1e-15
    assert contour_factor_equal(datum("A1"), 1).rational == 1
    e = cmath.exp
    ref = (1 / 6) * (1 - e(1j * math.pi)) / (1 - e(1j * math.pi / 2)) \
        * (1 - e(3j * math.pi / 2)) / (1 - e(1j * math.pi / 2))
    assert close(contour_factor_equal(datum("A2"), 0.25).value, ref)


def test_contour_gaussian_examples():
    assert contour_gaussian(datum("A1"), 1).rational == Fraction(-1, 2)
    assert contour_gaussian(datum("A2"), 1).rational == Fraction(-1, 12)
    assert contour_gaussian(datum("B2"), 1).rational == Fraction(1, 48)


def test_gw_examples():
    assert gw_product(datum("A1"), 1).rational == -1
    assert gw_product(datum("B2"), 1).rational == 1
    assert gw_product(datum("A2"), 2).rational == 1


@pytest.mark.parametrize("label", TABLE)
@pytest.mark.parametrize("m", [1, 2, 3])
def test_reflection_reciprocity(label, m):
    d = datum(label)
    assert close(gw_product(d, m).value, (-1) ** (m * d.n_positive))


def test_wm_norm():
    assert wm_norm(datum("A1"), 1).rational == -24
    assert wm_norm(datum("A1"), 0).rational == 2
    # (m+2)_{(m+1)(d-1)} (m+1)_{m(d-1)} over d = 2, 3 at m = 1
    ref = -(3 * 4) * 2 * (3 * 4 * 5 * 6) * (2 * 3)
    assert wm_norm(datum("A2"), 1).rational == ref


# --- two orbits ---------------------------------------------------------

def test_two_param_trivial():
    assert close(mm_two_param("B2", 0, 0).value, 1)
    assert close(mm_two_param("F4", 0, 0).value, 1)
    assert close(contour_factor_two_param("B2", 0, 0).value, 1)
    assert abs(contour_factor_two_param("B2", 0.5, 0.5).value) < 1e-15


@pytest.mark.parametrize("k", [1, 0.3, Fraction(3, 2)])
def test_two_param_reduces_to_equal(k):
    d = datum("B2")
    assert close(mm_two_param("B2", k, k).value * 2 ** (2 * float(k)), mm_coxeter(d, k).value)


def test_f4_factor_equal_multiplicity():
    assert close(contour_factor_two_param("F4", 0.25, 0.25).value, contour_factor_equal(datum("F4"), 0.25).value)


def test_two_param_bridges():
    v = contour_gaussian_two_param("B2", 1, 1)
    assert v.rational == Fraction(1, 12)
    assert v.rational / 4 == contour_gaussian(datum("B2"), 1).rational == Fraction(1, 48)
    for m in (1, 2):
        f4 = contour_gaussian_two_param("F4", m, m).rational
        assert f4 * Fraction(1, 2 ** (12 * m)) == contour_gaussian(datum("F4"), m).rational
        assert contour_gaussian_two_param("B3", m, m).rational * Fraction(1, 2 ** (3 * m)) == \
            contour_gaussian(datum("B3"), m).rational


# --- dihedral configurations ---------------------------------------------

def test_dihedral_phi00_examples():
    assert phi00_dihedral_wronskian(1, 1, 0, 1).rational == 4
    assert phi00_dihedral_wronskian(1, 0, 0, 1).rational == -2
    assert phi00_dihedral_wronskian(1, 1, 2, 1).rational == 48


def test_mm_2d_examples():
    assert mm_2d(1, 1, 0, 1).rational == Fraction(1, 16)
    # a single line with unit normal: twice the norm-2 rank-one value
    assert mm_2d(1, 0, 0, 1).rational == -1 == 2 * contour_gaussian(datum("A1"), 1).rational


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("q", [1, 2, 3])
def test_dihedral_bridge(m, q):
    d = datum(f"I2({2 * q})")
    assert phi00_dihedral_wronskian(m, m, 0, q).rational * contour_gaussian(d, m).rational == 1


@pytest.mark.parametrize("case", [(1, 0, 0, 1), (1, 1, 0, 1), (1, 1, 0, 2), (2, 1, 0, 1), (1, 1, 2, 1), (2, 0, 2, 1)])
def test_mm_2d_consistency(case):
    m, mt, l, q = case
    A = a_coefficient(*case)
    lhs = mm_2d(*case).rational
    rhs = 1 / (Fraction(A) ** 2 * Fraction(2) ** ((q - 2) * (m + mt + l)) * phi00_dihedral_wronskian(*case).rational)
    assert lhs == rhs


def test_frequencies():
    assert wronskian_frequencies(1, 1, 0, 1) == [0, 2]
    assert wronskian_frequencies(1, 0, 0, 1) == [0, 1]
    assert wronskian_frequencies(2, 0, 2, 1) == [0, 1, 4]


# --- deformed systems ----------------------------------------------------

BETA_POINTS = [(1, 1, -1.3), (0.5, 2.5, -2.0), (Fraction(1, 3), Fraction(2, 5), Fraction(-7, 3)),
               (0.2, 0.7, -0.9), (1.5, 0.25, -4.0)]


@pytest.mark.parametrize("a, b, rho", BETA_POINTS)
def test_df_beta(a, b, rho):
    a_, b_, r_ = (mp.mpf(float(v)) for v in (a, b, rho))
    ref = mp.gamma(1 + a_) * mp.gamma(1 + b_) / mp.gamma(2 + a_ + b_)
    assert close(dotsenko_fateev(0, 1, a, b, rho).value, complex(ref))
    ref = mp.gamma(1 - a_ / r_) * mp.gamma(1 - b_ / r_) / mp.gamma(2 - (a_ + b_) / r_)
    assert close(dotsenko_fateev(1, 0, a, b, rho).value, complex(ref))


def test_df_small_cases():
    assert dotsenko_fateev(0, 1, 1, 1, -2).rational == Fraction(1, 6)
    assert close(dotsenko_fateev(0, 0, 0.3, 0.4, -1.1).value, 1)


def test_df_printed_form_differs():
    a = dotsenko_fateev(0, 1, 1, 2, -1.5).value
    b = dotsenko_fateev(0, 1, 1, 2, -1.5, as_printed=True).value
    assert not close(a, b, 1e-6)
    # with alpha = beta the two denominators coincide
    assert close(dotsenko_fateev(0, 1, 1, 1, -1.5, as_printed=True).value, 1 / 6)


def test_deformed_a_values():
    assert m_deformed_a(1, 1, -1).rational == Fraction(-1, 2)
    assert close(m_deformed_a(1, 0, -1.7).value, 1)
    assert close(m_deformed_a(0, 1, -1.7).value, 1)


def test_deformed_a_phi00():
    assert phi00_deformed_a(1, 1).rational == -2
    for p in (2, 3, 5):
        assert phi00_deformed_a(1, p).rational == -(p + 1)
    assert phi00_deformed_a(2, 1).rational == -12


@pytest.mark.parametrize("m", [1, 2, 3])
def test_deformed_to_classical(m):
    assert phi00_deformed_a(m, 1).rational * contour_gaussian(datum(f"A{m}"), 1).rational == 1


def test_m1_deformed_b():
    assert close(m1_deformed_b(0, 0, 0.3, -1.2).value, 1)
    v = m1_deformed_b(1, 1, -0.4, -1.0).value
    assert math.isfinite(abs(v))
    # the integer-rho value is the limit of nearby values
    for eps in (1e-7, -1e-7):
        assert close(m1_deformed_b(1, 1, -0.4, -1.0 + eps).value, v, 1e-5)


def test_m1_deformed_b_rank_one_oracle():
    alpha, rho = -0.4, -1.7
    s_ = -alpha / rho
    oracle = mp.quad(lambda t: t ** s_ * mp.exp(t / (2 * rho)), [0, mp.inf])
    assert close(m1_deformed_b(1, 0, alpha, rho).value, complex(oracle), 1e-12)


def test_bc_trivial_and_reciprocal():
    assert close(m_deformed_bc(0, 0, 0.3, -1.2).value, 1)
    v = m_deformed_bc(1, 1, Fraction(-3, 2), -3)
    phi = phi00_deformed_c(1, 1, 0)
    assert close(v.value * phi.value, 1, 1e-12)
    assert v.exact is not None and v.rational == Fraction(-1, 24)


def test_bc_float_and_exact_paths_agree():
    a = m_deformed_bc(1, 1, Fraction(-3, 2), -3)
    b = m_deformed_bc(1, 1, -1.5, -3.0)
    assert close(a.value, b.value)


def test_bc_printed_constant():
    a = m_deformed_bc(1, 1, -1.5, -3).value
    b = m_deformed_bc(1, 1, -1.5, -3, as_printed=True).value
    assert close(b, a * 2 ** 4)
    c = phi00_deformed_c(1, 1, 0).value
    d = phi00_deformed_c(1, 1, 0, as_printed=True).value
    assert close(c, d * 2 ** 4)


def test_phi00_c_integrality():
    with pytest.raises(IntegralityViolation):
        phi00_deformed_c(1, 2, 1)


def test_exact_matches_float_everywhere():
    for cf in (contour_gaussian(datum("E6"), 2), mm_coxeter(datum("H3"), Fraction(1, 2)),
               phi00_deformed_c(2, 4, 1), contour_gaussian_two_param("F4", 1, 2)):
        if cf.exact is not None:
            assert close(complex(cf.exact), cf.value)
