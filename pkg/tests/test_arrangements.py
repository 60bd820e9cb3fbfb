import json
import math

import numpy as np
import pytest

from bamehta.arrangements import (
    Arrangement,
    build_coxeter,
    build_deformed_a,
    build_deformed_c,
    ordered_shift,
    regular_shift,
)
from bamehta.errors import IntegralityViolation, InvalidArrangement, NotRegular, UnsupportedGroup
from bamehta.exact_algebra import Field

EXACT_GROUPS = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "I2(4)", "I2(6)", "E6", "E7", "E8", "H3"]


def coords(arr):
    return sorted(tuple(round(float(arr.field.to_float(c) if arr.field else c), 12) for c in v)
                  for v, _ in arr.vectors)


def test_a1():
    arr, d = build_coxeter("A1")
    assert arr.dim == 1 and len(arr) == 1
    assert coords(arr) == [(round(math.sqrt(2), 12),)]
    assert d.degrees == (2,) and d.order == 2


def test_b2_norm2():
    arr, d = build_coxeter("B2")
    s = round(math.sqrt(2), 12)
    assert set(coords(arr)) == {(s, 0.0), (0.0, s), (1.0, 1.0), (1.0, -1.0)}
    assert d.degrees == (2, 4) and d.order == 8 and d.n_positive == 4


def test_f4_orbitwise():
    arr, d = build_coxeter("F4", normalization="orbitwise")
    short = [v for (v, _), o in zip(arr.vectors, arr.orbits) if o == "short"]
    assert len(short) == 12 and len(arr) == 24
    assert sum(1 for v in short if all(abs(float(c)) == 0.5 for c in v)) == 8
    assert d.degrees == (2, 6, 8, 12) and d.order == 2 ** 7 * 3 ** 2


def test_orbitwise_restricted():
    with pytest.raises(UnsupportedGroup):
        build_coxeter("A3", normalization="orbitwise")


@pytest.mark.parametrize("label", EXACT_GROUPS)
def test_coxeter_identities(label):
    arr, d = build_coxeter(label)
    assert math.prod(d.degrees) == d.order
    assert sum(k - 1 for k in d.degrees) == d.n_positive == len(arr)
    assert arr.positive_vector() is not None
    if arr.field is not None:
        for v, _ in arr.vectors:
            assert sum((c * c for c in v), arr.field.zero()) == 2
    else:
        assert np.allclose(np.sum(arr.float_vectors() ** 2, axis=1), 2)


def test_orbit_multiplicities():
    arr, _ = build_coxeter("B2", m={"short": 1, "long": 2})
    by_orbit = {o: m for (_, m), o in zip(arr.vectors, arr.orbits)}
    assert by_orbit == {"short": 1, "long": 2}
    assert arr.total_multiplicity == 6


def test_c_alias_swaps_orbits():
    b, _ = build_coxeter("B2", m={"short": 1, "long": 2})
    c, _ = build_coxeter("C2", m={"short": 2, "long": 1})
    assert coords(b) == coords(c)


def test_collinear_rejected():
    F = Field(1)
    with pytest.raises(InvalidArrangement):
        Arrangement(((( F.coerce(1), F.coerce(0)), 1), ((F.coerce(2), F.coerce(0)), 1)), 2, F)


def test_deformed_a_rank_one():
    arr, d = build_deformed_a(1, 3)
    assert len(arr) == 1
    (v, m), = arr.vectors
    assert m == 1 and v[0] == 1 and v[1] == -arr.field.sqrt_d()


def test_deformed_a_p1_is_a2():
    arr, _ = build_deformed_a(2, 1)
    a2, _ = build_coxeter("A2")
    assert np.allclose(arr.gram(), a2.gram())
    assert set(arr.multiplicities()) == {1}


def test_deformed_a_counts():
    arr, _ = build_deformed_a(2, 2)
    assert len(arr) == 3 and arr.total_multiplicity == 4 and arr.field.d == 2


def test_deformed_c_small():
    arr, d = build_deformed_c(1, 1, 0)
    assert d.p == 3 and len(arr) == 3
    assert sorted(arr.multiplicities()) == [1, 1, 1]


def test_deformed_c_integrality():
    with pytest.raises(IntegralityViolation):
        build_deformed_c(1, 2, 1)


def test_deformed_c_expansion():
    arr, d = build_deformed_c(2, 4, 1)
    assert d.p == 3
    mults = sorted(int(m) for m in arr.multiplicities())
    assert mults == [1, 1, 1, 1, 1, 3, 3, 4, 4]


@pytest.mark.parametrize("label", ["A1", "B2", "G2", "A3"])
def test_json_roundtrip(label):
    arr, _ = build_coxeter(label, m=2)
    doc = json.loads(arr.dumps())
    back = Arrangement.from_json(doc)
    assert back.vectors == arr.vectors and back.dim == arr.dim and back.field == arr.field


def test_regular_shift_given():
    arr, _ = build_coxeter("A1")
    assert regular_shift(arr, "given", xi=(1.0,)).certificate > 0
    with pytest.raises(NotRegular):
        regular_shift(arr, "given", xi=(0.0,))


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2", "I2(4)", "A3"])
def test_chamber_shifts_are_regular(label):
    arr, _ = build_coxeter(label)
    V = arr.float_vectors()
    neg = np.array(regular_shift(arr).xi)
    pos = np.array(regular_shift(arr, "positive_chamber").xi)
    assert np.all(V @ neg < 0) and np.all(V @ pos > 0)


def test_ordered_shift():
    spec = ordered_shift(2, 3)
    assert spec.xi == (4.0, 5.0, 1.0, 2.0, 3.0)
    vecs = np.array([[1.0, -1.0, 0.0], [1.0, 0.0, -1.0]])
    scaled = ordered_shift(2, 1, vectors=vecs, distance=1.5)
    assert abs(scaled.certificate - 1.5) < 1e-12
