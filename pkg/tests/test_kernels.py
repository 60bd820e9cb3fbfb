import numpy as np
import pytest

from bamehta.quadrature import _kernels_py as pure
from bamehta.quadrature import kernels

try:
    from bamehta.quadrature import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


def data(seed=0, npts=300, nvar=4, nterms=25):
    rng = np.random.default_rng(seed)
    pts = rng.normal(size=(npts, nvar)) + 1j * rng.normal(size=(npts, nvar))
    exps = rng.integers(0, 6, size=(nterms, nvar)).astype(np.int64)
    coeffs = rng.normal(size=nterms) + 1j * rng.normal(size=nterms)
    return np.ascontiguousarray(pts), np.ascontiguousarray(exps), np.ascontiguousarray(coeffs)


def test_backend_selected():
    assert kernels.BACKEND in ("compiled", "python")


def test_pure_monomials_direct():
    pts, exps, coeffs = data(1, npts=5, nvar=2, nterms=3)
    ref = sum(c * pts[:, 0] ** e[0] * pts[:, 1] ** e[1] for e, c in zip(exps, coeffs))
    assert np.allclose(pure.eval_monomials(pts, exps, coeffs), ref, rtol=1e-13)


@needs_compiled
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_monomials_agree(seed):
    pts, exps, coeffs = data(seed)
    a = compiled.eval_monomials(pts, exps, coeffs)
    b = pure.eval_monomials(pts, exps, coeffs)
    assert np.allclose(a, b, rtol=1e-12, atol=1e-12)


@needs_compiled
@pytest.mark.parametrize("principal", [False, True])
def test_power_products_agree(principal):
    rng = np.random.default_rng(4)
    pts = np.ascontiguousarray(rng.normal(size=(200, 3)) + 1j * (0.5 + rng.random((200, 3))))
    vecs = np.ascontiguousarray(rng.normal(size=(5, 3)))
    powers = np.array([0.25, -1.5, 2.0, 0.5 + 0.1j, -2.0]) if principal else np.array([1, -2, 3, 0, -1])
    powers = np.ascontiguousarray(powers.astype(complex))
    a = compiled.linear_power_product(pts, vecs, powers, principal)
    b = pure.linear_power_product(pts, vecs, powers, principal)
    assert np.allclose(a, b, rtol=1e-12)


def test_pure_python_switch(monkeypatch):
    import importlib

    monkeypatch.setenv("BAMEHTA_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("BAMEHTA_PURE_PYTHON")
        importlib.reload(kernels)
