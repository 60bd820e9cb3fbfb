import math

import numpy as np
import pytest

from bamehta.closed_forms import a_coefficient
from bamehta.wronskian2d import TrigPoly, emit_arrangement, factorize_q, wronskian

SUITE = [(1, 0, 0, 1), (1, 1, 0, 1), (1, 1, 0, 2), (2, 1, 0, 1), (1, 1, 2, 1)]


def numeric_wronskian(funcs, phi):
    n = len(funcs)
    mat = np.array([[f(phi, d) for f in funcs] for d in range(n)])
    return np.linalg.det(mat)


def sin_k(k):
    # d-th derivative of sin(k phi)
    return lambda phi, d: k ** d * math.sin(k * phi + d * math.pi / 2)


def test_single_constant():
    assert wronskian([0]) == TrigPoly.constant(1)


def test_constant_and_cosine():
    assert wronskian([0, 1]) == TrigPoly.sin(1, -1)


def test_sine_pair_numeric():
    W = wronskian([1, 2], kind="sin")
    rng = np.random.default_rng(3)
    for phi in rng.uniform(0, 2 * np.pi, 10):
        ref = numeric_wronskian([sin_k(1), sin_k(2)], phi)
        assert abs(W(phi) - ref) <= 1e-12 * max(1.0, abs(ref))
        assert abs(ref - (2 * math.sin(phi) * math.cos(2 * phi) - math.cos(phi) * math.sin(2 * phi))) < 1e-12


def test_trigpoly_algebra():
    c1 = TrigPoly.cos(1)
    s1 = TrigPoly.sin(1)
    assert c1 * c1 + s1 * s1 == TrigPoly.constant(1)
    assert (c1 * s1).derivative() == TrigPoly.cos(2)
    assert (c1 - c1).is_zero()


def test_rank_one_factorization():
    f = factorize_q(1, 0, 0, 1)
    assert abs(f.A) == 1 and f.angles == ()


def test_i2_2_factorization():
    f = factorize_q(1, 1, 0, 1)
    assert abs(f.A) == 4
    phi = np.linspace(0.1, 3.0, 7)
    assert np.allclose(f.Q(phi), float(f.A) * np.sin(phi) * np.cos(phi))


@pytest.mark.parametrize("case", SUITE + [(2, 0, 2, 1), (2, 2, 2, 1), (1, 0, 2, 2), (1, 1, 4, 1)])
def test_factorization_invariants(case):
    m, mt, l, q = case
    f = factorize_q(*case)
    assert f.residual <= 1e-10
    assert abs(f.A) == a_coefficient(*case)
    assert abs(f.angle_sum - math.pi * l / 2) <= 1e-10
    for a in f.angles:
        assert 0 < a < math.pi and abs(a - math.pi / 2) > 1e-9
    assert not f.collisions


def test_emit_counts():
    arr = emit_arrangement(1, 1, 0, 1)
    assert len(arr) == 2
    arr = emit_arrangement(1, 1, 0, 2)
    assert len(arr) == 4 and sorted(arr.multiplicities()) == [1, 1, 1, 1]
    arr = emit_arrangement(2, 1, 0, 2)
    assert sorted(arr.multiplicities()) == [1, 1, 2, 2]
    arr = emit_arrangement(1, 1, 2, 1)
    assert len(arr) == 4 and list(arr.multiplicities()).count(1) == 4


def test_emit_i2_4_angles():
    arr = emit_arrangement(1, 1, 0, 2)
    V = arr.float_vectors()
    angles = sorted(np.mod(np.degrees(np.arctan2(V[:, 1], V[:, 0])), 180))
    assert np.allclose(np.diff(angles), 45)
    assert np.allclose(np.sum(V ** 2, axis=1), 2)


def test_bad_parameters():
    with pytest.raises(ValueError):
        factorize_q(1, 2, 0, 1)
    with pytest.raises(ValueError):
        factorize_q(1, 0, 1, 1)
