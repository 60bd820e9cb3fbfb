"""Hyperplane arrangements with multiplicities.

Covers the finite Coxeter root systems (with degree data), the deformed
families ``A_m(p)`` and ``C_{m+1}(r, s)``, and numeric two-dimensional
configurations produced by :mod:`bamehta.wronskian2d`.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np
from scipy.optimize import linprog

from .errors import IntegralityViolation, InvalidArrangement, NotRegular, UnsupportedGroup
from .exact_algebra import Field, MultiPoly, QF
from .quadrature.contour import PRINCIPAL_LOG, RATIONAL, ContourSpec, certify


# ---------------------------------------------------------------------------
# Coxeter degree data

@dataclass(frozen=True)
class CoxeterDatum:
    label: str
    rank: int
    degrees: tuple
    order: int
    n_positive: int
    orbits: tuple = ()

    def __post_init__(self):
        if math.prod(self.degrees) != self.order:
            raise InvalidArrangement(f"{self.label}: product of degrees {self.degrees} != |W| = {self.order}")
        if sum(d - 1 for d in self.degrees) != self.n_positive:
            raise InvalidArrangement(f"{self.label}: sum(d_j - 1) != |R+| = {self.n_positive}")
        if len(self.degrees) != self.rank:
            raise InvalidArrangement(f"{self.label}: {len(self.degrees)} degrees for rank {self.rank}")


def _datum(label: str, rank: int | None) -> CoxeterDatum:
    L = label.upper()
    if L == "A":
        n = rank
        return CoxeterDatum(f"A{n}", n, tuple(range(2, n + 2)), math.factorial(n + 1), n * (n + 1) // 2)
    if L in ("B", "C"):
        n = rank
        return CoxeterDatum(f"{L}{n}", n, tuple(range(2, 2 * n + 1, 2)), 2 ** n * math.factorial(n), n * n,
                            ("short", "long"))
    if L == "D":
        n = rank
        if n < 2:
            raise UnsupportedGroup("D_n needs n >= 2")
        degs = tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
        return CoxeterDatum(f"D{n}", n, degs, 2 ** (n - 1) * math.factorial(n), n * (n - 1))
    fixed = {
        "E6": ((2, 5, 6, 8, 9, 12), 51840, 36, ()),
        "E7": ((2, 6, 8, 10, 12, 14, 18), 2903040, 63, ()),
        "E8": ((2, 8, 12, 14, 18, 20, 24, 30), 696729600, 120, ()),
        "F4": ((2, 6, 8, 12), 2 ** 7 * 3 ** 2, 24, ("short", "long")),
        "G2": ((2, 6), 12, 6, ("short", "long")),
        "H3": ((2, 6, 10), 120, 15, ()),
        "H4": ((2, 12, 20, 30), 14400, 60, ()),
    }
    key = L if rank is None or L in fixed else f"{L}{rank}"
    if key in fixed:
        degs, order, npos, orbits = fixed[key]
        return CoxeterDatum(key, len(degs), degs, order, npos, orbits)
    if L in ("I", "I2"):
        q = rank
        if q is None or q < 2:
            raise UnsupportedGroup("I2(q) needs q >= 2")
        orbits = ("a", "b") if q % 2 == 0 else ()
        return CoxeterDatum(f"I2({q})", 2, (2, q), 2 * q, q, orbits)
    raise UnsupportedGroup(f"unknown Coxeter label {label!r}")


def parse_group(text: str) -> tuple[str, int | None]:
    """``"A2" -> ("A", 2)``, ``"I2(5)" -> ("I2", 5)``, ``"F4" -> ("F4", None)``."""
    t = text.strip().upper().replace(" ", "")
    if t.startswith("I2(") and t.endswith(")"):
        return "I2", int(t[3:-1])
    if t[:2] in ("E6", "E7", "E8", "F4", "G2", "H3", "H4") and len(t) == 2:
        return t, None
    if t and t[0] in "ABCD" and t[1:].isdigit():
        return t[0], int(t[1:])
    raise UnsupportedGroup(f"cannot parse group label {text!r}")


# validate a representative slice of the table at import time
for _lab, _r in [("A", 1), ("A", 2), ("A", 5), ("B", 2), ("B", 4), ("D", 4), ("D", 6),
                 ("E6", None), ("E7", None), ("E8", None), ("F4", None), ("G2", None),
                 ("H3", None), ("H4", None), ("I2", 5), ("I2", 8)]:
    _datum(_lab, _r)


@dataclass(frozen=True)
class DeformedDatum:
    family: str
    m: int
    p: int
    r: int | None = None
    s: int | None = None


# ---------------------------------------------------------------------------
# Arrangement

@dataclass(frozen=True)
class Arrangement:
    """Vectors with positive integer multiplicities.

    ``field`` is a :class:`Field` for exact coordinates or ``None`` for the
    numeric (floating) variant.  ``orbits`` labels each vector (e.g.
    ``"short"``/``"long"``) when that is meaningful.
    """

    vectors: tuple
    dim: int
    field: Field | None = Field(1)
    orbits: tuple = ()
    coxeter: CoxeterDatum | None = None
    deformed: DeformedDatum | None = None
    numeric_only: bool = False
    name: str = ""

    def __post_init__(self):
        vecs = []
        for v, m in self.vectors:
            if len(v) != self.dim:
                raise InvalidArrangement(f"vector {v} has length {len(v)}, expected {self.dim}")
            m = int(m)
            if m < 1:
                raise InvalidArrangement(f"multiplicity {m} < 1")
            if self.field is None:
                vecs.append((tuple(float(c) for c in v), m))
            else:
                vecs.append((tuple(self.field.coerce(c) for c in v), m))
        object.__setattr__(self, "vectors", tuple(vecs))
        if self.orbits and len(self.orbits) != len(vecs):
            raise InvalidArrangement("orbit labels do not match the vectors")
        self._check_noncollinear()
        self._check_halfspace()

    # --- validation ---------------------------------------------------
    def _check_noncollinear(self):
        vs = [v for v, _ in self.vectors]
        for i, j in itertools.combinations(range(len(vs)), 2):
            a, b = vs[i], vs[j]
            if self.field is None:
                A = np.array([a, b])
                if np.linalg.matrix_rank(A, tol=1e-10 * max(1.0, np.abs(A).max())) < 2:
                    raise InvalidArrangement(f"vectors {i} and {j} are collinear")
            else:
                if all(a[k] * b[l] - a[l] * b[k] == 0 for k in range(self.dim) for l in range(k + 1, self.dim)):
                    raise InvalidArrangement(f"vectors {i} and {j} are collinear")
            if not any(a) or not any(b):
                raise InvalidArrangement("zero vector in arrangement")

    def _check_halfspace(self):
        v = self.positive_vector()
        if v is None:
            raise InvalidArrangement("no v with (alpha, v) > 0 for every alpha")

    def positive_vector(self):
        """Unit vector maximising ``min (alpha, v)/|alpha|``, or None if infeasible."""
        if not self.vectors:
            return np.eye(self.dim)[0] if self.dim else np.zeros(0)
        V = self.float_vectors()
        V = V / np.linalg.norm(V, axis=1)[:, None]
        n = self.dim
        # maximise t s.t. (alpha, v) >= t, -1 <= v_i <= 1
        c = np.zeros(n + 1)
        c[-1] = -1.0
        A_ub = np.hstack([-V, np.ones((V.shape[0], 1))])
        b_ub = np.zeros(V.shape[0])
        bounds = [(-1, 1)] * n + [(None, 1)]
        res = linprog(c, A_ub=A_ub, b_ub=b_ub, bounds=bounds, method="highs")
        if not res.success or res.x[-1] <= 1e-9:
            return None
        v = res.x[:n]
        return v / np.linalg.norm(v)

    # --- accessors ----------------------------------------------------
    def float_vectors(self) -> np.ndarray:
        if self.field is None:
            return np.array([v for v, _ in self.vectors], dtype=float).reshape(-1, self.dim)
        return np.array([[self.field.to_float(c) for c in v] for v, _ in self.vectors],
                        dtype=float).reshape(-1, self.dim)

    def multiplicities(self) -> np.ndarray:
        return np.array([m for _, m in self.vectors], dtype=np.int64)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.vectors)

    def __len__(self):
        return len(self.vectors)

    def with_multiplicities(self, m) -> "Arrangement":
        """Reassign multiplicities: int for all, mapping by orbit label, or a sequence."""
        if isinstance(m, Mapping):
            if not self.orbits:
                raise InvalidArrangement("arrangement has no orbit labels")
            mults = [int(m[o]) for o in self.orbits]
        elif isinstance(m, int):
            mults = [m] * len(self.vectors)
        else:
            mults = [int(x) for x in m]
        pairs = [(v, k) for (v, _), k in zip(self.vectors, mults)]
        orbits = self.orbits
        if any(k == 0 for k in mults):
            keep = [i for i, k in enumerate(mults) if k]
            pairs = [pairs[i] for i in keep]
            orbits = tuple(self.orbits[i] for i in keep) if self.orbits else ()
        return Arrangement(tuple(pairs), self.dim, self.field, orbits, self.coxeter, self.deformed,
                           self.numeric_only, self.name)

    def A_m(self) -> MultiPoly:
        """``prod (alpha, x)^{m_alpha}`` as an exact polynomial."""
        if self.field is None:
            raise TypeError("A_m is only available for exact arrangements")
        p = MultiPoly.constant(1, self.dim, self.field)
        for v, m in self.vectors:
            form = MultiPoly.linear_form(v, self.dim, self.field)
            p = p * form ** m
        return p

    def gram(self) -> np.ndarray:
        V = self.float_vectors()
        return V @ V.T

    # --- serialisation ----------------------------------------------
    def to_json(self) -> dict:
        if self.field is None:
            vectors = [{"coords": list(v), "multiplicity": m} for v, m in self.vectors]
            fld = None
        else:
            vectors = []
            for v, m in self.vectors:
                coords = []
                for c in v:
                    a, b = self.field.parts(c)
                    coords.append([[a.numerator, a.denominator], [b.numerator, b.denominator]])
                vectors.append({"coords": coords, "multiplicity": m})
            fld = {"d": self.field.d}
        doc = {"dimension": self.dim, "field": fld, "vectors": vectors}
        if self.orbits:
            doc["orbits"] = list(self.orbits)
        if self.name:
            doc["name"] = self.name
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, doc) -> "Arrangement":
        if isinstance(doc, str):
            doc = json.loads(doc)
        fld = doc.get("field")
        if fld is None:
            field_ = None
            pairs = [(tuple(v["coords"]), v["multiplicity"]) for v in doc["vectors"]]
        else:
            field_ = Field(fld["d"])
            pairs = [(tuple(field_.decode(c) for c in v["coords"]), v["multiplicity"]) for v in doc["vectors"]]
        return cls(tuple(pairs), int(doc["dimension"]), field_, tuple(doc.get("orbits", ())), name=doc.get("name", ""))


# ---------------------------------------------------------------------------
# constructors

def _e(i, n, field, scale=1):
    v = [field.zero()] * n
    v[i] = field.coerce(scale) if not isinstance(scale, QF) else scale
    return tuple(v)


def _positive(roots, field):
    """Pick one of each +/- pair: the one positive on a generic rational vector."""
    n = len(roots[0])
    gen = [Fraction(1, 1), Fraction(1, 3), Fraction(1, 7), Fraction(1, 19), Fraction(1, 47),
           Fraction(1, 103), Fraction(1, 211), Fraction(1, 433)]
    v = [gen[i] * (n - i) for i in range(n)]
    out = []
    seen = set()
    for r in roots:
        dot = sum((c * w for c, w in zip(r, v)), field.zero())
        s = field.sign(dot)
        if s == 0:
            raise InvalidArrangement("generic vector is not regular")
        pos = r if s > 0 else tuple(-c for c in r)
        key = tuple(pos)
        if key not in seen:
            seen.add(key)
            out.append(pos)
    return out


def _e8_roots():
    F = Field(1)
    half = Fraction(1, 2)
    roots = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            roots.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(half * s for s in signs))
    return F, roots


def _dot(a, b):
    return sum((x * y for x, y in zip(a, b)), 0)


def build_coxeter(label: str, rank: int | None = None, normalization: str = "norm2", m=1):
    """Positive roots of a finite Coxeter group as an Arrangement.

    ``normalization="norm2"`` scales every root to ``(alpha, alpha) = 2``;
    ``"orbitwise"`` (B_n, C_n, F4 only) keeps the unnormalised short roots.
    ``m`` is an int or a mapping from orbit label to multiplicity.
    Returns ``(arrangement, datum)``.
    """
    if rank is None and label[:1].upper() in "ABCD" and label[1:].isdigit():
        label, rank = label[0], int(label[1:])
    if label.upper().startswith("I2(") and rank is None:
        label, rank = parse_group(label)
    datum = _datum(label, rank)
    L = datum.label
    if normalization not in ("norm2", "orbitwise"):
        raise ValueError(f"unknown normalization {normalization!r}")
    if normalization == "orbitwise" and not (L.startswith("B") or L.startswith("C") or L == "F4" or L == "A1"):
        raise UnsupportedGroup("orbitwise normalization is only defined for B_n, C_n and F4")
    numeric_only = False
    orbits: list = []

    if L == "A1":
        # rank one: sqrt2 e_1 on the line rather than e_1 - e_2 in the plane
        F = Field(2) if normalization == "norm2" else Field(1)
        dim = 1
        vecs = [(F.sqrt_d(),)]
    elif L.startswith("A"):
        n = datum.rank
        F = Field(1)
        dim = n + 1
        vecs = []
        for i, j in itertools.combinations(range(dim), 2):
            v = [Fraction(0)] * dim
            v[i], v[j] = Fraction(1), Fraction(-1)
            vecs.append(tuple(v))
    elif L[0] in "BC":
        n = datum.rank
        dim = n
        F = Field(2) if normalization == "norm2" else Field(1)
        scale = F.sqrt_d() if normalization == "norm2" else F.one()
        vecs = []
        axis_label, diag_label = ("short", "long") if L[0] == "B" else ("long", "short")
        for i in range(n):
            vecs.append(_e(i, n, F, scale))
            orbits.append(axis_label)
        for i, j in itertools.combinations(range(n), 2):
            for s in (1, -1):
                v = [F.zero()] * n
                v[i], v[j] = F.one(), F(s)
                vecs.append(tuple(v))
                orbits.append(diag_label)
        if n == 1:
            orbits = []
    elif L.startswith("D"):
        n = datum.rank
        dim = n
        F = Field(1)
        vecs = []
        for i, j in itertools.combinations(range(n), 2):
            for s in (1, -1):
                v = [Fraction(0)] * n
                v[i], v[j] = Fraction(1), Fraction(s)
                vecs.append(tuple(v))
    elif L in ("E6", "E7", "E8"):
        F, roots = _e8_roots()
        dim = 8
        if L == "E7":
            theta = tuple(Fraction(1, 2) for _ in range(8))
            roots = [r for r in roots if _dot(r, theta) == 0]
        elif L == "E6":
            t1 = tuple(Fraction(1, 2) for _ in range(8))
            t2 = tuple([Fraction(0)] * 6 + [Fraction(-1), Fraction(-1)])
            roots = [r for r in roots if _dot(r, t1) == 0 and _dot(r, t2) == 0]
        vecs = _positive(roots, F)
    elif L == "F4":
        dim = 4
        F = Field(2) if normalization == "norm2" else Field(1)
        scale = F.sqrt_d() if normalization == "norm2" else F.one()
        vecs = []
        for i in range(4):
            vecs.append(_e(i, 4, F, scale))
            orbits.append("short")
        for signs in itertools.product((1, -1), repeat=3):
            v = (F.one(),) + tuple(F(s) for s in signs)
            vecs.append(tuple(c * scale * Fraction(1, 2) for c in v))
            orbits.append("short")
        for i, j in itertools.combinations(range(4), 2):
            for s in (1, -1):
                v = [F.zero()] * 4
                v[i], v[j] = F.one(), F(s)
                vecs.append(tuple(v))
                orbits.append("long")
    elif L == "G2":
        dim = 3
        F = Field(3)
        inv_sqrt3 = F(0, Fraction(1, 3))
        vecs = []
        for i, j in itertools.combinations(range(3), 2):
            v = [F.zero()] * 3
            v[i], v[j] = F.one(), F(-1)
            vecs.append(tuple(v))
            orbits.append("short")
        for i in range(3):
            v = [F(-1)] * 3
            v[i] = F(2)
            vecs.append(tuple(c * inv_sqrt3 for c in v))
            orbits.append("long")
        vecs = [tuple(c for c in v) for v in vecs]
        # orient: positive on a generic vector, keeping the orbit labels aligned
        gen = (F(3), F(1), F(0))
        fixed = []
        for v in vecs:
            s = F.sign(sum((a * b for a, b in zip(v, gen)), F.zero()))
            fixed.append(v if s > 0 else tuple(-c for c in v))
        vecs = fixed
    elif L in ("H3", "H4"):
        numeric_only = True
        F = None
        phi = (1 + math.sqrt(5)) / 2
        n = 3 if L == "H3" else 4
        dim = n
        roots = []
        for i in range(n):
            for s in (1, -1):
                v = [0.0] * n
                v[i] = float(s)
                roots.append(tuple(v))
        if n == 3:
            base = (phi, 1.0, 1.0 / phi)
            perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
            for p in perms:
                for signs in itertools.product((1, -1), repeat=3):
                    v = [0.0] * 3
                    for k in range(3):
                        v[p[k]] = signs[k] * base[k] / 2
                    roots.append(tuple(v))
        else:
            for signs in itertools.product((1, -1), repeat=4):
                roots.append(tuple(s / 2 for s in signs))
            base = (phi, 1.0, 1.0 / phi, 0.0)
            even = [p for p in itertools.permutations(range(4)) if _perm_sign(p) == 1]
            for p in even:
                for signs in itertools.product((1, -1), repeat=3):
                    v = [0.0] * 4
                    vals = [signs[0] * base[0], signs[1] * base[1], signs[2] * base[2], 0.0]
                    for k in range(4):
                        v[p[k]] = vals[k] / 2
                    roots.append(tuple(v))
        g = np.array([1.0, 0.31, 0.057, 0.0113][:n])
        pos = []
        seen = set()
        for r in roots:
            s = float(np.dot(r, g))
            v = r if s > 0 else tuple(-c for c in r)
            key = tuple(round(c, 12) for c in v)
            if key not in seen:
                seen.add(key)
                pos.append(tuple(math.sqrt(2) * c for c in v))
        vecs = pos
    elif L.startswith("I2("):
        q = datum.degrees[1]
        dim = 2
        vecs, F = _dihedral_vectors(q)
        numeric_only = F is None
        if q % 2 == 0:
            orbits = ["a" if j % 2 == 0 else "b" for j in range(q)]
    else:
        raise UnsupportedGroup(L)

    if len(vecs) != datum.n_positive:
        raise InvalidArrangement(f"{L}: built {len(vecs)} positive roots, expected {datum.n_positive}")
    if isinstance(m, Mapping):
        mults = [int(m[o]) for o in orbits]
    else:
        mults = [int(m)] * len(vecs)
    arr = Arrangement(tuple(zip(vecs, mults)), dim, F, tuple(orbits), datum, None, numeric_only, L)
    if normalization == "norm2":
        for v, _ in arr.vectors:
            nn = sum((c * c for c in v), F.zero()) if F is not None else sum(c * c for c in v)
            if F is not None and nn != 2:
                raise InvalidArrangement(f"{L}: root {v} has norm^2 {nn}")
            if F is None and abs(nn - 2) > 1e-12:
                raise InvalidArrangement(f"{L}: root {v} has norm^2 {nn}")
    if any(k == 0 for k in mults):
        arr = arr.with_multiplicities(mults)
    return arr, datum


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def _dihedral_vectors(q: int):
    """``sqrt2 (cos psi_j, sin psi_j)``, ``psi_j = pi/4 + pi j/q``.

    The pi/4 rotation puts q = 2 in Q, q = 4 in Q(sqrt 2) and q = 3, 6 in
    Q(sqrt 3); other q fall back to floating coordinates.
    """
    half = Fraction(1, 2)
    if q == 2:
        F = Field(1)
        return [(F(1), F(1)), (F(-1), F(1))], F
    if q == 4:
        F = Field(2)
        s = F.sqrt_d()
        return [(F(1), F(1)), (F(0), s), (F(-1), F(1)), (-s, F(0))], F
    if q in (3, 6):
        F = Field(3)
        table = {
            45: (F(1), F(1)),
            75: (F(-half, half), F(half, half)),
            105: (F(half, -half), F(half, half)),
            135: (F(-1), F(1)),
            165: (F(-half, -half), F(-half, half)),
            195: (F(-half, -half), F(half, -half)),
        }
        step = 180 // q
        return [table[45 + step * j] for j in range(q)], F
    out = []
    for j in range(q):
        psi = math.pi / 4 + math.pi * j / q
        out.append((math.sqrt(2) * math.cos(psi), math.sqrt(2) * math.sin(psi)))
    return out, None


def build_deformed_a(m: int, p: int):
    """``A_m(p)`` in R^{m+1}: ``e_i - e_j`` (mult p) and ``e_i - sqrt(p) e_{m+1}`` (mult 1)."""
    if m < 1 or p < 1:
        raise ValueError("need m >= 1 and p >= 1")
    F, sp = _sqrt_field(p)
    dim = m + 1
    pairs = []
    for i, j in itertools.combinations(range(m), 2):
        v = [F.zero()] * dim
        v[i], v[j] = F.one(), F(-1)
        pairs.append((tuple(v), p))
    for i in range(m):
        v = [F.zero()] * dim
        v[i] = F.one()
        v[m] = -sp
        pairs.append((tuple(v), 1))
    datum = DeformedDatum("A", m, p)
    return Arrangement(tuple(pairs), dim, F, (), None, datum, False, f"A_{m}({p})"), datum


def build_deformed_c(m: int, r: int, s: int):
    """``C_{m+1}(r, s)`` with ``p = (2r+1)/(2s+1)``; zero-multiplicity vectors are dropped."""
    if m < 1 or r < 0 or s < 0:
        raise ValueError("need m >= 1 and r, s >= 0")
    if (2 * r + 1) % (2 * s + 1):
        raise IntegralityViolation(f"p = {2 * r + 1}/{2 * s + 1} is not an integer")
    p = (2 * r + 1) // (2 * s + 1)
    F, sp = _sqrt_field(p)
    dim = m + 1
    pairs = []
    for i, j in itertools.combinations(range(m), 2):
        for sg in (1, -1):
            v = [F.zero()] * dim
            v[i], v[j] = F.one(), F(sg)
            pairs.append((tuple(v), p))
    if r:
        for i in range(m):
            pairs.append((_e(i, dim, F), r))
    if s:
        pairs.append((_e(m, dim, F), s))
    for i in range(m):
        for sg in (1, -1):
            v = [F.zero()] * dim
            v[i] = F.one()
            v[m] = sp * sg
            pairs.append((tuple(v), 1))
    datum = DeformedDatum("C", m, p, r, s)
    return Arrangement(tuple(pairs), dim, F, (), None, datum, False, f"C_{m + 1}({r},{s})"), datum


def _sqrt_field(p: int):
    """Field containing sqrt(p) and that square root as an element."""
    root = math.isqrt(p)
    if root * root == p:
        F = Field(1)
        return F, F(root)
    # p = k^2 * d with d square-free
    d, k = p, 1
    f = 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            k *= f
        f += 1
    F = Field(d)
    return F, F(0, k)


# ---------------------------------------------------------------------------
# shifts

def regular_shift(arrangement: Arrangement, strategy="negative_chamber", xi=None,
                  distance: float | None = None, branch: str = RATIONAL) -> ContourSpec:
    """Certified regular shift vector for ``i xi + R^n``.

    ``strategy="negative_chamber"`` solves the strict feasibility problem
    ``(alpha, xi) < 0`` and scales the max-margin direction so the nearest
    pole sits ``distance`` away from the real contour (default from
    :func:`default_pole_distance`).  ``strategy="given"`` only certifies
    ``xi``.
    """
    if strategy == "given" or xi is not None and strategy != "negative_chamber":
        if xi is None:
            raise ValueError("strategy 'given' needs xi")
        cert = certify(xi, arrangement.float_vectors(), tol=1e-12) if len(arrangement) else float("inf")
        return ContourSpec(tuple(xi), branch, cert, "given")
    if strategy not in ("negative_chamber", "positive_chamber"):
        raise ValueError(f"unknown strategy {strategy!r}")
    v = arrangement.positive_vector()
    if v is None:
        raise NotRegular("arrangement has no open chamber on which all forms are positive")
    V = arrangement.float_vectors()
    margin = float(np.min(V @ v / np.linalg.norm(V, axis=1))) if len(V) else 1.0
    target = default_pole_distance(arrangement) if distance is None else float(distance)
    sign = -1.0 if strategy == "negative_chamber" else 1.0
    xi_vec = sign * v * (target / margin)
    cert = certify(xi_vec, V) if len(V) else float("inf")
    return ContourSpec(tuple(xi_vec), branch, cert, strategy)


def default_pole_distance(arrangement: Arrangement) -> float:
    """Pole distance used for default shifts.

    Gauss-Hermite error falls roughly like exp(-2 delta sqrt(2N)) in the
    pole distance delta, while the shifted weight amplifies by
    exp(|xi|^2 / 2); keep |xi| modest as the chamber narrows.
    """
    v = arrangement.positive_vector()
    if v is None or not len(arrangement):
        return 2.5
    V = arrangement.float_vectors()
    margin = float(np.min(V @ v / np.linalg.norm(V, axis=1)))
    # |xi| = delta / margin; capping delta at 8 margin keeps |xi| <= 8, so the
    # amplification exp(|xi|^2/2) stays well inside double range
    return float(min(2.5, 8.0 * margin))


def ordered_shift(n: int, m: int, step: float = 1.0, vectors=None, branch: str = PRINCIPAL_LOG,
                  distance: float | None = None) -> ContourSpec:
    """Shift ``(xi, eta)`` for the deformed integrals in variables ``(t_1..t_n, tau_1..tau_m)``.

    Realises ``xi_n > ... > xi_1 > eta_m > ... > eta_1 > 0`` with equal
    spacing ``step``: ``eta_j = j step`` and ``xi_i = (m + i) step``.
    ``vectors``, if given, are certified against the shift.  With
    ``distance`` (and ``vectors``) the step is rescaled so that the nearest
    pole sits that far from the real contour.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    if distance is not None:
        if vectors is None or not len(vectors):
            raise ValueError("distance needs the vectors of the integrand")
        unit = ordered_shift(n, m, 1.0, vectors, branch)
        step = float(distance) / unit.certificate
    eta = [step * (j + 1) for j in range(m)]
    xi = [step * (m + i + 1) for i in range(n)]
    vec = tuple(xi + eta)
    cert = certify(vec, vectors) if vectors is not None and len(vectors) else None
    return ContourSpec(vec, branch, cert, "ordered")
