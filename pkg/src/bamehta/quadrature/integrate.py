"""Gaussian integrals over shifted planes ``i xi + R^n``.

With ``x = u + i xi`` the Gaussian weight of variance ``s^2`` becomes

    exp(-u^2 / 2s^2) * exp((xi^2 - 2 i u xi) / 2s^2),

so the integral is a real Gaussian expectation of ``f(u + i xi)`` times that
phase-amplitude factor.  Tensor Gauss-Hermite handles ``n <= 3`` and
Monte Carlo with Gaussian importance sampling handles larger ``n``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np
from scipy.special import roots_hermite

from ..errors import NonConvergent
from .contour import ContourSpec, certify

TENSOR = "tensor-hermite"
MONTE_CARLO = "monte-carlo"
DEFAULT_ORDERS = {1: 64, 2: 96, 3: 64}
DEFAULT_SAMPLES = 10_000_000
_CHUNK = 1 << 16
_MC_BLOCK = 1 << 18


@dataclass(frozen=True)
class QuadConfig:
    """Integration settings; ``None`` fields take dimension-dependent defaults."""

    method: str = "auto"
    order: int | None = None
    samples: int | None = None
    seed: int = 0
    max_refinements: int = 2
    tol_rel: float | None = None
    tol_abs: float = 1e-15

    def resolved_method(self, dim: int) -> str:
        if self.method == "auto":
            return TENSOR if dim <= 3 else MONTE_CARLO
        if self.method not in (TENSOR, MONTE_CARLO):
            raise ValueError(f"unknown quadrature method {self.method!r}")
        return self.method

    def resolved_tol_rel(self, method: str) -> float:
        if self.tol_rel is not None:
            return float(self.tol_rel)
        return 1e-8 if method == TENSOR else 5e-2

    def to_json(self) -> dict:
        return {"method": self.method, "order": self.order, "samples": self.samples, "seed": self.seed,
                "max_refinements": self.max_refinements, "tol_rel": self.tol_rel, "tol_abs": self.tol_abs}

    @classmethod
    def from_json(cls, doc: dict) -> "QuadConfig":
        keys = ("method", "order", "samples", "seed", "max_refinements", "tol_rel", "tol_abs")
        return cls(**{k: doc[k] for k in keys if k in doc})


@dataclass
class QuadratureEstimate:
    value: complex
    error_est: float
    method: str
    seed: int | None = None
    wall_time: float = 0.0
    history: list = field(default_factory=list)

    @property
    def errors(self) -> list:
        """Successive differences between refinement levels."""
        vals = [v for _, v in self.history]
        return [abs(b - a) for a, b in zip(vals, vals[1:])]

    def as_dict(self) -> dict:
        return {"re": self.value.real, "im": self.value.imag, "error_est": self.error_est,
                "method": self.method, "seed": self.seed}


@dataclass
class Integrand:
    """``f`` integrated against ``prefactor * prod_i N(0, variances[i])``.

    ``fn`` maps an ``(N, dim)`` complex array to ``N`` complex values.  When
    ``basis`` is set the integrand only depends on ``basis @ x`` (orthonormal
    rows) and ``fn`` takes those reduced coordinates; the Gaussian in the
    orthogonal complement integrates to one.
    """

    fn: object
    dim: int
    vectors: np.ndarray | None = None
    variances: np.ndarray | None = None
    prefactor: complex = 1.0
    description: str = ""
    basis: np.ndarray | None = None

    def __post_init__(self):
        if self.variances is None:
            self.variances = np.ones(self.dim)
        self.variances = np.asarray(self.variances, dtype=float)
        if self.variances.shape != (self.dim,):
            raise ValueError("one variance per coordinate expected")

    def reduced_shift(self, xi) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        return self.basis @ xi if self.basis is not None else xi

    def __call__(self, x):
        return self.fn(np.atleast_2d(np.asarray(x, dtype=complex)))


def integrand_from_callable(fn, dim, vectors=None, variances=None, prefactor=1.0, description="") -> Integrand:
    vecs = None if vectors is None else np.atleast_2d(np.asarray(vectors, dtype=float))
    return Integrand(fn, dim, vecs, variances, prefactor, description)


def _check_shift(f: Integrand, spec: ContourSpec) -> np.ndarray:
    full_dim = f.basis.shape[1] if f.basis is not None else f.dim
    if spec.dim != full_dim:
        raise ValueError(f"shift of dimension {spec.dim} for an integrand in dimension {full_dim}")
    if f.vectors is not None and len(f.vectors):
        certify(spec.xi, f.vectors)
    return f.reduced_shift(spec.xi)


def _hermite(order: int):
    # scipy switches to an asymptotic scheme at high order where hermgauss overflows
    t, w = roots_hermite(order)
    return t * np.sqrt(2.0), w / np.sqrt(np.pi)


def _tensor_value(f: Integrand, xi, order: int) -> complex:
    dim = f.dim
    sig = np.sqrt(f.variances)
    nodes, weights = _hermite(order)
    # the constant part of the shifted weight, exp(xi^2 / 2 s^2)
    amp = np.exp(np.sum(xi * xi / (2 * f.variances)))
    total = 0j
    grids = np.indices((order,) * dim).reshape(dim, -1).T
    partials = []
    for start in range(0, grids.shape[0], _CHUNK):
        idx = grids[start:start + _CHUNK]
        u = nodes[idx] * sig
        w = np.prod(weights[idx], axis=1)
        x = u + 1j * xi
        phase = np.exp(-1j * (u @ (xi / f.variances)))
        vals = f.fn(np.ascontiguousarray(x))
        partials.append(np.sum(w * phase * vals))
    # fixed-order reduction over chunks
    for p in partials:
        total += p
    return complex(f.prefactor) * amp * total


def _mc_block(f: Integrand, xi, seed: int, block: int, count: int):
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, block])))
    sig = np.sqrt(f.variances)
    z = rng.standard_normal((count, f.dim))
    out = []
    for s in (1.0, -1.0):  # antithetic pairs
        u = s * z * sig
        x = u + 1j * xi
        phase = np.exp(-1j * (u @ (xi / f.variances)))
        out.append(phase * f.fn(np.ascontiguousarray(x)))
    vals = 0.5 * (out[0] + out[1])
    return vals.sum(), (np.abs(vals) ** 2).sum(), count


def _mc_value(f: Integrand, xi, samples: int, seed: int):
    """Mean over ``samples`` antithetic pairs and its standard error."""
    amp = np.exp(np.sum(xi * xi / (2 * f.variances)))
    nblocks = max(1, -(-samples // _MC_BLOCK))
    s1 = 0j
    s2 = 0.0
    n = 0
    half = None
    for b in range(nblocks):
        count = min(_MC_BLOCK, samples - b * _MC_BLOCK)
        a, q, c = _mc_block(f, xi, seed, b, count)
        s1 += a
        s2 += q
        n += c
        if half is None and n * 2 >= samples:
            half = s1 / n
    mean = s1 / n
    var = max(s2 / n - abs(mean) ** 2, 0.0)
    scale = complex(f.prefactor) * amp
    return scale * mean, abs(scale) * np.sqrt(var / n), scale * half


def shifted_gaussian_integral(f: Integrand, spec: ContourSpec, cfg: QuadConfig | None = None) -> QuadratureEstimate:
    """``prefactor * int_{i xi + R^n} f(x) prod N(x_i; 0, s_i^2) dx``.

    Tensor rule: the value at order N is reported and ``error_est`` is
    ``|I(N) - I(N/2)|`` (a conservative bound for the order-N value);
    the order doubles up to ``max_refinements`` times until the tolerance
    is met.  Monte Carlo: ``error_est`` is the larger of the standard
    error and the difference between the half-sample and full-sample means.
    """
    cfg = cfg or QuadConfig()
    xi = _check_shift(f, spec)
    method = cfg.resolved_method(f.dim)
    tol_rel = cfg.resolved_tol_rel(method)
    t0 = time.perf_counter()
    history = []
    if method == TENSOR:
        order = int(cfg.order or DEFAULT_ORDERS.get(f.dim, 32))
        for lvl in (order // 4, order // 2):
            if lvl >= 2:
                history.append((lvl, _tensor_value(f, xi, lvl)))
        for attempt in range(cfg.max_refinements + 1):
            history.append((order, _tensor_value(f, xi, order)))
            value = history[-1][1]
            err = abs(value - history[-2][1]) if len(history) > 1 else float("inf")
            if err <= max(cfg.tol_abs, tol_rel * abs(value)) or attempt == cfg.max_refinements:
                break
            order *= 2
        desc = f"{TENSOR}({order})"
        seed = None
    else:
        samples = int(cfg.samples or DEFAULT_SAMPLES)
        for attempt in range(cfg.max_refinements + 1):
            value, stderr, half = _mc_value(f, xi, samples, cfg.seed)
            history.append((samples, value))
            err = max(stderr, abs(value - half))
            if err <= max(cfg.tol_abs, tol_rel * abs(value)) or attempt == cfg.max_refinements:
                break
            samples *= 2
        desc = f"{MONTE_CARLO}({samples}, seed={cfg.seed})"
        seed = cfg.seed
    est = QuadratureEstimate(complex(value), float(err), desc, seed, time.perf_counter() - t0, history)
    if err > max(cfg.tol_abs, tol_rel * abs(value)):
        raise NonConvergent(f"{f.description or 'integral'}: error estimate {err:.3g} above tolerance "
                            f"after {cfg.max_refinements} refinements", est)
    return est


@dataclass
class IndependenceReport:
    first: QuadratureEstimate
    second: QuadratureEstimate
    difference: float
    allowed: float

    @property
    def ok(self) -> bool:
        return self.difference <= self.allowed


def contour_independence_check(f: Integrand, spec1: ContourSpec, spec2: ContourSpec,
                               cfg: QuadConfig | None = None, slack: float = 10.0,
                               floor: float = 1e-12) -> IndependenceReport:
    """Integrate over two shifts and compare within the combined error estimates."""
    a = shifted_gaussian_integral(f, spec1, cfg)
    b = shifted_gaussian_integral(f, spec2, cfg)
    diff = abs(a.value - b.value)
    allowed = slack * (a.error_est + b.error_est) + floor * max(1.0, abs(a.value))
    return IndependenceReport(a, b, diff, allowed)
