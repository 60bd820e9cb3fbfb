# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled quadrature hot loops (see _kernels_py for the reference versions).

Complex numbers are carried as separate real and imaginary doubles so the
inner loops compile to plain floating-point code.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport atan2, cos, exp, log, sin

cnp.import_array()


DEF BLOCK = 256


def eval_monomials(pts, exps, coeffs):
    P = np.ascontiguousarray(pts, dtype=complex)
    E = np.ascontiguousarray(exps, dtype=np.int64)
    C = np.ascontiguousarray(coeffs, dtype=complex)
    cdef Py_ssize_t npts = P.shape[0], nvar = P.shape[1], nterm = E.shape[0]
    out = np.zeros(npts, dtype=complex)
    if nterm == 0 or npts == 0:
        return out
    cdef long long maxe = max(int(E.max()), 0)

    # sparse factor list per term: (variable, exponent) pairs in CSR layout
    nz = E != 0
    cdef long long[::1] start = np.concatenate([[0], np.cumsum(nz.sum(axis=1))]).astype(np.int64)
    tv, vv = np.nonzero(nz)
    cdef long long[::1] fvar = vv.astype(np.int64)
    cdef long long[::1] fexp = E[tv, vv].astype(np.int64)

    # points transposed so each block of a variable is contiguous
    cdef double[:, ::1] pr = np.ascontiguousarray(P.real.T)
    cdef double[:, ::1] pi = np.ascontiguousarray(P.imag.T)
    cdef double[::1] cr = np.ascontiguousarray(C.real)
    cdef double[::1] ci = np.ascontiguousarray(C.imag)
    # power tables, indexed [v, k, b] and flattened
    cdef double[::1] tr = np.empty(nvar * (maxe + 1) * BLOCK)
    cdef double[::1] ti = np.empty(nvar * (maxe + 1) * BLOCK)
    cdef double[::1] br = np.empty(BLOCK)
    cdef double[::1] bi = np.empty(BLOCK)
    cdef double[::1] ar = np.empty(BLOCK)
    cdef double[::1] ai = np.empty(BLOCK)
    cdef double[::1] outr = np.empty(npts)
    cdef double[::1] outi = np.empty(npts)
    cdef Py_ssize_t i0, nb, b, t, v, k, f, row, prev
    cdef double xr, xi, tmp, c0, c1
    with nogil:
        i0 = 0
        while i0 < npts:
            nb = npts - i0
            if nb > BLOCK:
                nb = BLOCK
            for v in range(nvar):
                row = (v * (maxe + 1)) * BLOCK
                for b in range(nb):
                    tr[row + b] = 1.0
                    ti[row + b] = 0.0
                for k in range(1, maxe + 1):
                    prev = row + (k - 1) * BLOCK
                    for b in range(nb):
                        xr = pr[v, i0 + b]
                        xi = pi[v, i0 + b]
                        tr[prev + BLOCK + b] = tr[prev + b] * xr - ti[prev + b] * xi
                        ti[prev + BLOCK + b] = tr[prev + b] * xi + ti[prev + b] * xr
            for b in range(nb):
                ar[b] = 0.0
                ai[b] = 0.0
            for t in range(nterm):
                c0 = cr[t]
                c1 = ci[t]
                for b in range(nb):
                    br[b] = c0
                    bi[b] = c1
                for f in range(start[t], start[t + 1]):
                    row = (fvar[f] * (maxe + 1) + fexp[f]) * BLOCK
                    for b in range(nb):
                        tmp = br[b] * tr[row + b] - bi[b] * ti[row + b]
                        bi[b] = br[b] * ti[row + b] + bi[b] * tr[row + b]
                        br[b] = tmp
                for b in range(nb):
                    ar[b] = ar[b] + br[b]
                    ai[b] = ai[b] + bi[b]
            for b in range(nb):
                outr[i0 + b] = ar[b]
                outi[i0 + b] = ai[b]
            i0 = i0 + nb
    out.real = np.asarray(outr)
    out.imag = np.asarray(outi)
    return out


def linear_power_product(pts, vecs, powers, bint principal):
    P = np.ascontiguousarray(pts, dtype=complex)
    W = np.ascontiguousarray(powers, dtype=complex)
    cdef double[:, ::1] V = np.ascontiguousarray(vecs, dtype=float)
    cdef double[:, ::1] pr = np.ascontiguousarray(P.real)
    cdef double[:, ::1] pi = np.ascontiguousarray(P.imag)
    cdef double[::1] wr = np.ascontiguousarray(W.real)
    cdef double[::1] wi = np.ascontiguousarray(W.imag)
    cdef Py_ssize_t npts = P.shape[0], n = P.shape[1], K = V.shape[0]
    cdef long long[::1] IP = np.zeros(K, dtype=np.int64)
    cdef double[::1] outr = np.empty(npts)
    cdef double[::1] outi = np.empty(npts)
    cdef Py_ssize_t i, k, j
    cdef long long e
    cdef double fr, fi, lr, li, ang, lmod, mag, br, bi, qr, qi, tmp, d
    if not principal:
        for k in range(K):
            IP[k] = <long long>wr[k]
    with nogil:
        for i in range(npts):
            if principal:
                lr = 0.0
                li = 0.0
                for k in range(K):
                    fr = 0.0
                    fi = 0.0
                    for j in range(n):
                        fr = fr + V[k, j] * pr[i, j]
                        fi = fi + V[k, j] * pi[i, j]
                    lmod = 0.5 * log(fr * fr + fi * fi)
                    ang = atan2(fi, fr)
                    # (wr + i wi)(lmod + i ang)
                    lr = lr + wr[k] * lmod - wi[k] * ang
                    li = li + wr[k] * ang + wi[k] * lmod
                mag = exp(lr)
                outr[i] = mag * cos(li)
                outi[i] = mag * sin(li)
            else:
                qr = 1.0
                qi = 0.0
                for k in range(K):
                    fr = 0.0
                    fi = 0.0
                    for j in range(n):
                        fr = fr + V[k, j] * pr[i, j]
                        fi = fi + V[k, j] * pi[i, j]
                    e = IP[k]
                    br = fr
                    bi = fi
                    if e < 0:
                        d = fr * fr + fi * fi
                        br = fr / d
                        bi = -fi / d
                        e = -e
                    while e:
                        if e & 1:
                            tmp = qr * br - qi * bi
                            qi = qr * bi + qi * br
                            qr = tmp
                        tmp = br * br - bi * bi
                        bi = 2.0 * br * bi
                        br = tmp
                        e >>= 1
                outr[i] = qr
                outi[i] = qi
    out = np.empty(npts, dtype=complex)
    out.real = np.asarray(outr)
    out.imag = np.asarray(outi)
    return out
