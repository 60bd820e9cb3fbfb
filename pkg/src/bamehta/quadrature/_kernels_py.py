"""Pure numpy versions of the quadrature hot loops.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built or ``BAMEHTA_PURE_PYTHON=1`` is set.
"""

import numpy as np


def eval_monomials(pts, exps, coeffs):
    """sum_t coeffs[t] * prod_v pts[:, v] ** exps[t, v] at every row of ``pts``."""
    pts = np.asarray(pts, dtype=complex)
    exps = np.asarray(exps, dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=complex)
    npts, nvar = pts.shape
    out = np.zeros(npts, dtype=complex)
    if exps.shape[0] == 0:
        return out
    maxe = int(exps.max()) if exps.size else 0
    # table[v, k, :] = pts[:, v] ** k
    table = np.ones((nvar, maxe + 1, npts), dtype=complex)
    for k in range(1, maxe + 1):
        table[:, k, :] = table[:, k - 1, :] * pts.T
    for t in range(exps.shape[0]):
        term = np.full(npts, coeffs[t], dtype=complex)
        for v in range(nvar):
            e = exps[t, v]
            if e:
                term *= table[v, e]
        out += term
    return out


def linear_power_product(pts, vecs, powers, principal):
    """prod_k (vecs[k] . x) ** powers[k].

    With ``principal`` the powers may be complex and the principal branch of
    the logarithm is used for every factor; otherwise ``powers`` must be
    integers and plain repeated multiplication is used.
    """
    pts = np.asarray(pts, dtype=complex)
    vecs = np.asarray(vecs, dtype=float)
    forms = pts @ vecs.T
    if principal:
        powers = np.asarray(powers, dtype=complex)
        return np.exp(np.log(forms) @ powers)
    out = np.ones(pts.shape[0], dtype=complex)
    for k, p in enumerate(np.asarray(powers).real.astype(np.int64)):
        out *= forms[:, k] ** int(p)
    return out
