"""Shifted integration contours ``i*xi + R^n``."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import NotRegular

RATIONAL = "rational"
PRINCIPAL_LOG = "principal-log"


@dataclass(frozen=True)
class ContourSpec:
    """Shift vector plus the branch convention used for non-integer powers.

    ``certificate`` is the smallest ``|(alpha, xi)| / |alpha|`` over the
    arrangement the shift was checked against (distance from the real
    contour to the nearest pole); ``None`` when no arrangement was given.
    """

    xi: tuple
    branch: str = RATIONAL
    certificate: float | None = None
    note: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(float(v) for v in self.xi))
        if self.branch not in (RATIONAL, PRINCIPAL_LOG):
            raise ValueError(f"unknown branch convention {self.branch!r}")

    @property
    def dim(self) -> int:
        return len(self.xi)

    def as_array(self) -> np.ndarray:
        return np.array(self.xi, dtype=float)

    def with_branch(self, branch: str) -> "ContourSpec":
        return ContourSpec(self.xi, branch, self.certificate, self.note)


def certify(xi, vectors, tol: float = 1e-12) -> float:
    """Minimal pole distance ``min |(a, xi)|/|a|``; raise NotRegular if ~0."""
    xi = np.asarray(xi, dtype=float)
    vecs = np.atleast_2d(np.asarray(vectors, dtype=float))
    if vecs.size == 0:
        return float("inf")
    if vecs.shape[1] != xi.shape[0]:
        raise ValueError(f"shift of dimension {xi.shape[0]} for vectors of dimension {vecs.shape[1]}")
    dots = np.abs(vecs @ xi) / np.linalg.norm(vecs, axis=1)
    worst = float(dots.min())
    if worst <= tol:
        bad = int(np.argmin(dots))
        raise NotRegular(f"(alpha, xi) = 0 for alpha = {vecs[bad].tolist()}, xi = {xi.tolist()}")
    return worst
