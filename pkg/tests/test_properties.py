"""Property-based checks of the algebraic and numerical invariants."""

import math
from fractions import Fraction

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from bamehta.arrangements import Arrangement, build_coxeter, build_deformed_a
from bamehta.baker_akhiezer import exp_L
from bamehta.closed_forms import gw_product
from bamehta.errors import NonConvergent
from bamehta.exact_algebra import Field, MultiPoly, dir_derivative, exact_div_linear
from bamehta.quadrature import ContourSpec, build_integrand_d21, build_integrand_mm, shifted_gaussian_integral
from bamehta.wronskian2d import TrigPoly, wronskian

F = Field(2)
S2 = F.sqrt_d()
N = 2

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.builds(lambda a, b: F.coerce(a) + S2 * b, small, small)
exponents = st.tuples(*[st.integers(0, 3)] * (2 * N))


@st.composite
def polys(draw, max_terms=5):
    terms = draw(st.dictionaries(exponents, scalars, max_size=max_terms))
    return MultiPoly(N, F, {e: c for e, c in terms.items() if c})


vectors = st.lists(scalars, min_size=N, max_size=N).filter(lambda v: any(v))
SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@SETTINGS
@given(polys(), vectors)
def test_division_roundtrip(p, alpha):
    assert exact_div_linear(p * MultiPoly.linear_form(alpha, N, F), alpha) == p


@SETTINGS
@given(polys(), polys(), vectors, scalars)
def test_derivative_linear_and_leibniz(p, q, alpha, c):
    d = lambda f: dir_derivative(f, alpha)  # noqa: E731
    assert d(p + q.scale(c)) == d(p) + d(q).scale(c)
    assert d(p * q) == d(p) * q + p * d(q)


@SETTINGS
@given(polys(), polys(), st.integers(0, 2 ** 32 - 1))
def test_exact_arithmetic_matches_float(p, q, seed):
    rng = np.random.default_rng(seed)
    for _ in range(10):
        x, lam = rng.normal(size=N), rng.normal(size=N)
        ref = p(x, lam) * q(x, lam)
        assert abs((p * q)(x, lam) - ref) <= 1e-12 * max(1.0, abs(p(x, lam)) * abs(q(x, lam)))


@SETTINGS
@given(st.lists(small, min_size=1, max_size=4))
def test_exp_L_inverts_on_rank_one_invariants(coeffs):
    arr = build_coxeter("A1")[0]
    X = MultiPoly.variable(0, 1, arr.field)
    p = MultiPoly.zero(1, arr.field)
    for k, c in enumerate(coeffs):
        p = p + (X ** (2 * k)).scale(arr.field.coerce(c))
    assert exp_L(exp_L(p, arr, Fraction(1, 2)), arr, Fraction(-1, 2)) == p


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A1", "A2", "A3", "B2", "B3", "G2", "H3", "F4", "D4", "I2(7)"]), st.integers(1, 3))
def test_reflection_reciprocity(label, m):
    d = build_coxeter(label)[1]
    v = gw_product(d, m).value
    assert abs(v - (-1) ** (m * d.n_positive)) < 1e-10


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["A1", "A2", "A3", "B2", "B3", "G2", "D4", "I2(8)"]), st.integers(1, 4))
def test_arrangement_json_roundtrip(label, m):
    arr = build_coxeter(label, m=m)[0]
    back = Arrangement.from_json(arr.to_json())
    assert back.vectors == arr.vectors


@settings(max_examples=3, deadline=None)
@given(st.integers(1, 3))
def test_deformed_p1_gram(m):
    arr = build_deformed_a(m, 1)[0]
    ref = build_coxeter(f"A{m}")[0]
    g1, g2 = arr.gram(), ref.gram()
    # same multiset of Gram entries up to the order of the roots
    assert sorted(np.round(g1, 12).ravel()) == sorted(np.round(g2, 12).ravel())


@settings(max_examples=25, deadline=None)
@given(st.floats(1.0, 3.0), st.booleans())
def test_rank_one_contour_independence(size, negative):
    f = build_integrand_mm(build_coxeter("A1")[0])
    xi = -size if negative else size
    est = shifted_gaussian_integral(f, ContourSpec((xi,)))
    assert abs(est.value + 0.5) < 1e-9


@settings(max_examples=10, deadline=None)
@given(st.floats(0.05, 0.3))
def test_close_poles_are_flagged_not_misreported(size):
    f = build_integrand_mm(build_coxeter("A1")[0])
    try:
        est = shifted_gaussian_integral(f, ContourSpec((size,)))
    except NonConvergent:
        return
    assert abs(est.value + 0.5) < 1e-8 * 0.5 + est.error_est


@settings(max_examples=20, deadline=None)
@given(st.lists(st.floats(0.5, 3.0), min_size=3, max_size=3), st.permutations([0, 1, 2]))
def test_d21_permutation_covariance(lam, perm):
    f = build_integrand_d21(*lam)
    g = build_integrand_d21(*[lam[i] for i in perm])
    rng = np.random.default_rng(1)
    x = rng.normal(size=(6, 3)) + 1j * rng.uniform(0.3, 1.0, size=(6, 3))
    assert np.allclose(g(x[:, perm]), f(x), rtol=1e-12)


trig = st.dictionaries(st.integers(0, 5), st.tuples(small, small), max_size=4).map(TrigPoly)


@settings(max_examples=40, deadline=None)
@given(trig, trig, st.floats(0, 2 * math.pi))
def test_trigpoly_product_and_derivative(p, q, phi):
    assert abs((p * q)(phi) - p(phi) * q(phi)) < 1e-9 * max(1.0, abs(p(phi) * q(phi)))
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=4, unique=True), st.floats(0.1, 3.0))
def test_wronskian_matches_determinant(freqs, phi):
    W = wronskian(freqs)
    n = len(freqs)
    mat = [[k ** d * math.cos(k * phi + d * math.pi / 2) for k in freqs] for d in range(n)]
    ref = float(np.linalg.det(np.array(mat)))
    assert abs(W(phi) - ref) <= 1e-9 * max(1.0, abs(ref))
