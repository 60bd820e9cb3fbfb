"""Integrands for the Macdonald-Mehta type integrals.

Most integrands are products of powers of linear forms, ``prod (v_k, x)^{e_k}``.
Integer exponents are evaluated by repeated multiplication; otherwise every
factor uses the principal logarithm, which on a contour with
``Im (v_k, x)`` of fixed sign is the continuous branch.
"""

from __future__ import annotations

import math
from collections.abc import Mapping

import numpy as np
from scipy.special import gammaln, roots_jacobi

from .contour import PRINCIPAL_LOG, RATIONAL
from .integrate import Integrand
from .kernels import eval_monomials, linear_power_product


def _span_basis(vectors: np.ndarray, tol: float = 1e-12):
    """Orthonormal rows spanning the row space of ``vectors``."""
    _, s, vt = np.linalg.svd(vectors, full_matrices=False)
    rank = int(np.sum(s > tol * max(1.0, s[0]))) if len(s) else 0
    return vt[:rank]


def _is_integer(e) -> bool:
    e = complex(e)
    return e.imag == 0 and float(e.real).is_integer()


def power_product_integrand(vectors, powers, dim: int, variances=None, prefactor=1.0,
                            description: str = "", reduce: bool = True) -> Integrand:
    """``prod_k (vectors[k], x)^{powers[k]}`` as an Integrand.

    With ``reduce`` and isotropic variances the integrand is expressed in an
    orthonormal basis of the span of ``vectors``, which lowers the
    quadrature dimension (e.g. A_n in R^{n+1}).
    """
    V = np.atleast_2d(np.asarray(vectors, dtype=float)).reshape(-1, dim)
    powers = np.asarray(powers, dtype=complex)
    principal = not all(_is_integer(e) for e in powers)
    isotropic = variances is None or np.allclose(variances, variances[0])
    basis = None
    Vr = V
    if reduce and isotropic and len(V):
        Q = _span_basis(V)
        if Q.shape[0] < dim:
            basis = Q
            Vr = np.ascontiguousarray(V @ Q.T)
    ndim = basis.shape[0] if basis is not None else dim
    Vr = np.ascontiguousarray(Vr)
    pw = np.ascontiguousarray(powers)

    def fn(x):
        return linear_power_product(x, Vr, pw, principal)

    var = None if variances is None else (np.full(ndim, float(variances[0])) if basis is not None
                                          else np.asarray(variances, dtype=float))
    f = Integrand(fn, ndim, V, var, prefactor, description, basis)
    f.branch = PRINCIPAL_LOG if principal else RATIONAL
    return f


def _per_vector(arrangement, value, name):
    """Expand a scalar or an orbit mapping to one value per vector."""
    if isinstance(value, Mapping):
        if not arrangement.orbits:
            raise ValueError(f"{name} given per orbit but the arrangement has no orbit labels")
        return [value[o] for o in arrangement.orbits]
    if np.ndim(value) == 0:
        return [value] * len(arrangement.vectors)
    vals = list(value)
    if len(vals) != len(arrangement.vectors):
        raise ValueError(f"{name}: one value per vector expected")
    return vals


def build_integrand_mm(arrangement, k=None, multiplicities=None, variant: str = "shifted",
                       reduce: bool = True) -> Integrand:
    """Macdonald-Mehta integrand ``prod (alpha, x)^{2 k_alpha}`` against d gamma.

    ``k`` (scalar or per orbit) gives the power directly; ``multiplicities``
    gives ``k = -m`` (the contour-Gaussian integrand ``1 / prod (alpha,x)^{2m}``);
    if neither is given the arrangement's own multiplicities are used.
    ``variant="absolute"`` evaluates ``prod |(alpha, x)|^{2k}`` and is meant
    for the real contour only.
    """
    if k is None:
        m = arrangement.multiplicities() if multiplicities is None else _per_vector(arrangement, multiplicities, "m")
        ks = [-complex(v) for v in m]
    else:
        ks = [complex(v) for v in _per_vector(arrangement, k, "k")]
    V = arrangement.float_vectors()
    powers = [2 * v for v in ks]
    name = arrangement.name or "arrangement"
    if variant == "absolute":
        pw = np.real(np.asarray(powers))
        Q = _span_basis(V) if reduce else np.eye(arrangement.dim)
        Vr = V @ Q.T if reduce else V

        def fn(x):
            forms = np.abs(x @ Vr.T)
            return np.prod(forms ** pw, axis=1).astype(complex)

        basis = Q if reduce and Q.shape[0] < arrangement.dim else None
        if basis is None:
            Vr = V
        return Integrand(fn, Vr.shape[1], V, None, 1.0, f"|mm| {name}", basis)
    if variant != "shifted":
        raise ValueError(f"unknown variant {variant!r}")
    return power_product_integrand(V, powers, arrangement.dim, description=f"mm {name}", reduce=reduce)


def absolute_mm_integral(arrangement, k, nodes: int = 60) -> float:
    """``int_{R^n} prod |(alpha, x)|^{2 k_alpha} d gamma`` for arrangements of rank <= 2.

    Polar coordinates in the span of the vectors: the radial part is a
    Gamma function and the angular integral is split at the zeros of the
    forms, each sector taking a Gauss-Jacobi rule matched to the endpoint
    singularities.  Used as the real-contour reference for branch factors.
    """
    ks = np.real(np.asarray([complex(v) for v in _per_vector(arrangement, k, "k")]))
    V = arrangement.float_vectors()
    Q = _span_basis(V)
    Vr = V @ Q.T
    norms = np.linalg.norm(Vr, axis=1)
    K = float(np.sum(ks))
    const = float(np.prod(norms ** (2 * ks)))
    if Q.shape[0] == 1:
        # int |x|^{2K} d gamma = 2^K Gamma(K + 1/2) / sqrt(pi)
        return const * math.exp(K * math.log(2) + gammaln(K + 0.5) - 0.5 * math.log(math.pi))
    if Q.shape[0] != 2:
        raise ValueError("absolute reference integral is implemented for rank <= 2")
    theta_v = np.arctan2(Vr[:, 1], Vr[:, 0])
    # the form alpha_j vanishes at theta_j +- pi/2
    zeros = np.mod(np.concatenate([theta_v + np.pi / 2, theta_v - np.pi / 2]), 2 * np.pi)
    owner = np.concatenate([np.arange(len(ks)), np.arange(len(ks))])
    order = np.argsort(zeros)
    zeros, owner = zeros[order], owner[order]
    total = 0.0
    for i in range(len(zeros)):
        a = zeros[i]
        b = zeros[(i + 1) % len(zeros)] + (2 * np.pi if i + 1 == len(zeros) else 0.0)
        if b - a < 1e-15:
            continue
        ea = 2 * ks[owner[i]]
        eb = 2 * ks[owner[(i + 1) % len(zeros)]]
        # Jacobi weight (1-t)^eb (1+t)^ea on [-1, 1]
        t, w = roots_jacobi(nodes, eb, ea)
        half = 0.5 * (b - a)
        theta = a + half * (t + 1)
        vals = np.abs(np.cos(theta[:, None] - theta_v[None, :])) ** (2 * ks[None, :])
        dist_a = np.abs(np.sin(theta - a))
        dist_b = np.abs(np.sin(b - theta))
        # divide out the endpoint behaviour that the Jacobi weight supplies
        smooth = np.prod(vals, axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            smooth = smooth / (dist_a ** ea * dist_b ** eb)
            jac = (np.sin(half * (t + 1)) / (half * (t + 1))) ** ea * (np.sin(half * (1 - t)) / (half * (1 - t))) ** eb
        total += half ** (1 + ea + eb) * np.sum(w * smooth * jac)
    radial = math.exp(K * math.log(2) + gammaln(K + 1))
    return const * radial * total / (2 * np.pi)


def _xpoly_arrays(P, n):
    exps, coeffs = P.to_arrays()
    return np.ascontiguousarray(exps), np.ascontiguousarray(coeffs)


def build_integrand_identity(phi, lam, mu, arrangement) -> Integrand:
    """``phi(-ix, lam) phi(ix, mu) / A_m(x)^2`` against d gamma."""
    n = arrangement.dim
    lam = np.asarray(lam, dtype=complex).reshape(n)
    mu = np.asarray(mu, dtype=complex).reshape(n)
    exps, coeffs = _xpoly_arrays(phi.poly, n)
    am2 = arrangement.A_m() ** 2
    aexps, acoeffs = am2.to_arrays()
    aexps = np.ascontiguousarray(aexps[:, :n])
    dmu = mu - lam

    def fn(x):
        N = x.shape[0]
        left = np.ascontiguousarray(np.hstack([-1j * x, np.broadcast_to(lam, (N, n))]))
        right = np.ascontiguousarray(np.hstack([1j * x, np.broadcast_to(mu, (N, n))]))
        num = eval_monomials(left, exps, coeffs) * eval_monomials(right, exps, coeffs)
        # e^{(-ix, lam)} e^{(ix, mu)}
        num = num * np.exp(1j * (x @ dmu))
        return num / eval_monomials(x, aexps, acoeffs)

    return Integrand(fn, n, arrangement.float_vectors(), None, 1.0,
                     f"identity {arrangement.name or ''} lam={lam.tolist()} mu={mu.tolist()}")


def identity_rhs(phi, lam, mu) -> complex:
    """``e^{-(lam^2 + mu^2)/2} phi(lam, mu)``."""
    lam = np.asarray(lam, dtype=complex)
    mu = np.asarray(mu, dtype=complex)
    exps, coeffs = phi.poly.to_arrays()
    pt = np.ascontiguousarray(np.concatenate([lam, mu])[None, :])
    P = eval_monomials(pt, np.ascontiguousarray(exps), np.ascontiguousarray(coeffs))[0]
    return complex(np.exp(-(lam @ lam + mu @ mu) / 2 + lam @ mu) * P)


def build_integrand_deformed(kind: str, n: int, m: int, rho, alpha=None, reduce: bool = True) -> Integrand:
    """Integrands of the deformed Macdonald-Mehta integrals, variables ``(t_1..t_n, tau_1..tau_m)``.

    ``kind="A"``: ``prod_{i<j}(t_i - t_j)^{2/rho} prod_{i<j}(tau_i - tau_j)^{2 rho}
    / prod (sqrt(-rho) t_i - tau_j)^2``.

    ``kind="BC"``: ``prod t_i^{1 - 2 alpha/rho} prod tau_j^{2 alpha + 1}
    prod_{i<j}(t_i^2 - t_j^2)^{2/rho} prod_{i<j}(tau_i^2 - tau_j^2)^{2 rho}
    / prod (rho t_i^2 + tau_j^2)^2``, with every quadratic factor split into
    two linear forms.

    Both are integrated against the standard Gaussian, so the
    ``(2 pi)^{-(m+n)/2}`` normalisation is built in.
    """
    rho = float(rho)
    if rho >= 0:
        raise ValueError("the deformed integrals need rho < 0")
    dim = n + m
    vecs, pows = [], []

    def e(i):
        v = np.zeros(dim)
        v[i] = 1.0
        return v

    T = [e(i) for i in range(n)]
    S = [e(n + j) for j in range(m)]
    sq = math.sqrt(-rho)
    if kind == "A":
        for i in range(n):
            for j in range(i + 1, n):
                vecs.append(T[i] - T[j])
                pows.append(2 / rho)
        for i in range(m):
            for j in range(i + 1, m):
                vecs.append(S[i] - S[j])
                pows.append(2 * rho)
        for i in range(n):
            for j in range(m):
                vecs.append(sq * T[i] - S[j])
                pows.append(-2)
    elif kind == "BC":
        if alpha is None:
            raise ValueError("kind BC needs alpha")
        alpha = float(alpha)
        for i in range(n):
            vecs.append(T[i])
            pows.append(1 - 2 * alpha / rho)
        for j in range(m):
            vecs.append(S[j])
            pows.append(2 * alpha + 1)
        for i in range(n):
            for j in range(i + 1, n):
                vecs += [T[i] - T[j], T[i] + T[j]]
                pows += [2 / rho, 2 / rho]
        for i in range(m):
            for j in range(i + 1, m):
                vecs += [S[i] - S[j], S[i] + S[j]]
                pows += [2 * rho, 2 * rho]
        for i in range(n):
            for j in range(m):
                # rho t^2 + tau^2 = (tau - sqrt(-rho) t)(tau + sqrt(-rho) t)
                vecs += [S[j] - sq * T[i], S[j] + sq * T[i]]
                pows += [-2, -2]
    else:
        raise ValueError(f"unknown deformed kind {kind!r}")
    if not vecs:
        return Integrand(lambda x: np.ones(x.shape[0], dtype=complex), dim, None, None, 1.0,
                         f"deformed {kind}({n},{m}) Gaussian")
    return power_product_integrand(np.array(vecs), pows, dim,
                                   description=f"deformed {kind}({n},{m}) rho={rho}"
                                   + (f" alpha={alpha}" if kind == "BC" else ""),
                                   reduce=reduce and kind == "A")


def d21_multiplicities(lam):
    l1, l2, l3 = (float(v) for v in lam)
    return ((l2 + l3 - l1) / (2 * l1), (l3 + l1 - l2) / (2 * l2), (l1 + l2 - l3) / (2 * l3))


D21_VECTORS = np.array([[1, 0, 0], [0, 1, 0], [0, 0, 1],
                        [1, 1, 1], [1, -1, 1], [1, 1, -1], [1, -1, -1]], dtype=float)


def build_integrand_d21(l1, l2, l3) -> Integrand:
    """``x_1^{-2m_1} x_2^{-2m_2} x_3^{-2m_3} / prod (x_1 +- x_2 +- x_3)^2`` with weight ``e^{-sum x_i^2/l_i}``.

    ``m_i = (l_j + l_k - l_i) / (2 l_i)``.  The Gaussian has variances
    ``l_i / 2`` and total mass ``prod sqrt(pi l_i)`` (the prefactor), so the
    estimate is the integral itself, not a normalised expectation.
    """
    lam = np.array([l1, l2, l3], dtype=float)
    if np.any(lam <= 0):
        raise ValueError("D(2,1,lambda) integrand needs positive lambda_i")
    m = d21_multiplicities(lam)
    pows = [-2 * mi for mi in m] + [-2.0] * 4
    f = power_product_integrand(D21_VECTORS, pows, 3, variances=lam / 2,
                                prefactor=float(np.prod(np.sqrt(np.pi * lam))),
                                description=f"D(2,1;{lam.tolist()})", reduce=False)
    return f
