"""Compare the compiled quadrature kernels with the numpy fallback.

Run with ``python3 benchmarks/bench_kernels.py``.  Kernel timings call both
implementations directly; the end-to-end timing runs one acceptance-size
integral in a subprocess with and without ``BAMEHTA_PURE_PYTHON=1``.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from bamehta.quadrature import _kernels_py as pure

try:
    from bamehta.quadrature import _kernels as compiled
except ImportError:
    compiled = None

END_TO_END = """
import time
from bamehta.arrangements import build_coxeter
from bamehta.baker_akhiezer import construct_berest
from bamehta.quadrature import build_integrand_identity, shifted_gaussian_integral, BACKEND
from bamehta.arrangements import regular_shift
arr, _ = build_coxeter("A2", m=1)
phi = construct_berest(arr)
f = build_integrand_identity(phi, [0.3, -0.1, -0.2], [0.1, 0.2, -0.3], arr)
t0 = time.perf_counter()
shifted_gaussian_integral(f, regular_shift(arr))
print(BACKEND, time.perf_counter() - t0)
"""


def monomial_case(npts, nterms, nvar, seed=0):
    rng = np.random.default_rng(seed)
    pts = np.ascontiguousarray(rng.normal(size=(npts, nvar)) + 1j * rng.normal(size=(npts, nvar)))
    exps = np.ascontiguousarray(rng.integers(0, 5, size=(nterms, nvar)).astype(np.int64))
    coeffs = np.ascontiguousarray(rng.normal(size=nterms) + 0j)
    return pts, exps, coeffs


def power_case(npts, nvec, dim, seed=0):
    rng = np.random.default_rng(seed)
    pts = np.ascontiguousarray(rng.normal(size=(npts, dim)) + 1j * (0.5 + rng.random((npts, dim))))
    vecs = np.ascontiguousarray(rng.normal(size=(nvec, dim)))
    powers = np.ascontiguousarray(np.full(nvec, -2.0 + 0j))
    return pts, vecs, powers


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled kernels are not built; only the fallback can be timed")
    print(f"{'kernel':<34}{'python (ms)':>12}{'compiled (ms)':>15}{'speedup':>9}")
    cases = [
        ("eval_monomials 16k pts x 120 terms", pure.eval_monomials, "eval_monomials", monomial_case(1 << 14, 120, 6)),
        ("eval_monomials 64k pts x 30 terms", pure.eval_monomials, "eval_monomials", monomial_case(1 << 16, 30, 4)),
        ("power product 64k pts x 12 forms", pure.linear_power_product, "linear_power_product",
         power_case(1 << 16, 12, 3) + (False,)),
        ("power product 64k pts, log branch", pure.linear_power_product, "linear_power_product",
         power_case(1 << 16, 12, 3) + (True,)),
    ]
    for name, pfn, cname, data in cases:
        tp = best(lambda: pfn(*data), args.repeat) * 1e3
        if compiled is not None:
            cfn = getattr(compiled, cname)
            assert np.allclose(cfn(*data), pfn(*data), rtol=1e-10)
            tc = best(lambda: cfn(*data), args.repeat) * 1e3
            print(f"{name:<34}{tp:>12.2f}{tc:>15.2f}{tp / tc:>8.1f}x")
        else:
            print(f"{name:<34}{tp:>12.2f}{'-':>15}{'-':>9}")
    if not args.skip_end_to_end:
        print("\nend to end: A2 identity integral at default orders")
        for flag in ("1", "0"):
            env = dict(os.environ, BAMEHTA_PURE_PYTHON=flag)
            out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True,
                                 check=True).stdout.split()
            print(f"  {out[0]:<10}{float(out[1]) * 1e3:>10.1f} ms")


if __name__ == "__main__":
    main()
