"""Sparse multivariate polynomials in two blocks of variables.

A :class:`MultiPoly` of arity ``n`` has ``2n`` variables: ``x_1..x_n``
followed by ``lam_1..lam_n``.  Terms are stored as ``{exponent tuple: coeff}``
with no explicit zeros.  Coefficients belong to a single :class:`Field`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from ..errors import ArityMismatch, FieldMismatch, NonDivisible
from .scalar import QF, Field

X_BLOCK = "x"
LAM_BLOCK = "lam"


def _block_offset(n: int, block: str) -> int:
    if block in (X_BLOCK, "x"):
        return 0
    if block in (LAM_BLOCK, "lam", "lambda", "λ"):
        return n
    raise ValueError(f"unknown variable block {block!r}")


class MultiPoly:
    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: Field | None = None, terms: Mapping | None = None):
        self.n = int(n)
        self.field = field if field is not None else Field(1)
        clean = {}
        if terms:
            width = 2 * self.n
            for exps, c in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != width:
                    raise ArityMismatch(f"exponent {exps} has length {len(exps)}, expected {width}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                c = self.field.coerce(c)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    @classmethod
    def _wrap(cls, n, field, terms):
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.n = n
        p.field = field
        p.terms = terms
        return p

    # --- constructors -------------------------------------------------
    @classmethod
    def zero(cls, n, field=None):
        return cls._wrap(n, field or Field(1), {})

    @classmethod
    def constant(cls, c, n, field=None):
        field = field or Field(1)
        c = field.coerce(c)
        return cls._wrap(n, field, {(0,) * (2 * n): c} if c else {})

    @classmethod
    def variable(cls, i, n, field=None, block=X_BLOCK):
        field = field or Field(1)
        e = [0] * (2 * n)
        e[_block_offset(n, block) + i] = 1
        return cls._wrap(n, field, {tuple(e): field.one()})

    @classmethod
    def linear_form(cls, alpha: Sequence, n=None, field=None, block=X_BLOCK):
        """``(alpha, v)`` where ``v`` is the x- or lambda-block."""
        n = len(alpha) if n is None else n
        if len(alpha) != n:
            raise ArityMismatch(f"vector of length {len(alpha)} for arity {n}")
        field = field or Field(1)
        off = _block_offset(n, block)
        terms = {}
        for i, a in enumerate(alpha):
            a = field.coerce(a)
            if a:
                e = [0] * (2 * n)
                e[off + i] = 1
                terms[tuple(e)] = a
        return cls._wrap(n, field, terms)

    # --- basic protocol ----------------------------------------------
    def copy(self):
        return MultiPoly._wrap(self.n, self.field, dict(self.terms))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.n == other.n and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other: "MultiPoly"):
        if self.n != other.n:
            raise ArityMismatch(f"arity {self.n} vs {other.n}")
        if self.field != other.field:
            # a rational polynomial may be promoted into a quadratic field
            joined = self.field.join(other.field)
            return joined
        return self.field

    def promote(self, field: Field) -> "MultiPoly":
        if field == self.field:
            return self
        if not self.field.is_rational and self.field != field:
            raise FieldMismatch(f"cannot move {self.field} coefficients into {field}")
        return MultiPoly._wrap(self.n, field, {e: field.coerce(c) for e, c in self.terms.items()})

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            f = self._check(other)
            return self.promote(f), other.promote(f)
        return self, MultiPoly.constant(self.field.coerce(other), self.n, self.field)

    # --- ring operations ---------------------------------------------
    def __add__(self, other):
        a, b = self._lift(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            v = terms.get(e)
            if v is None:
                terms[e] = c
            else:
                v = v + c
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return MultiPoly._wrap(a.n, a.field, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._wrap(self.n, self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._lift(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "MultiPoly":
        if isinstance(s, QF) and self.field.is_rational:
            return self.promote(Field(s.d)).scale(s)
        s = self.field.coerce(s)
        if not s:
            return MultiPoly.zero(self.n, self.field)
        return MultiPoly._wrap(self.n, self.field, {e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        a, b = self._lift(other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        terms: dict = {}
        get = terms.get
        for e2, c2 in b.terms.items():
            for e1, c1 in a.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = get(e)
                terms[e] = c1 * c2 if v is None else v + c1 * c2
        terms = {e: c for e, c in terms.items() if c}
        return MultiPoly._wrap(a.n, a.field, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MultiPoly.constant(1, self.n, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # --- structure ----------------------------------------------------
    def degree(self, block: str | None = None) -> int:
        """Total degree, or degree in one block; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if block is None:
            return max(sum(e) for e in self.terms)
        off = _block_offset(self.n, block)
        return max(sum(e[off:off + self.n]) for e in self.terms)

    def homogeneous_part(self, deg: int, block: str = X_BLOCK) -> "MultiPoly":
        off = _block_offset(self.n, block)
        return MultiPoly._wrap(
            self.n, self.field,
            {e: c for e, c in self.terms.items() if sum(e[off:off + self.n]) == deg})

    def constant_term(self):
        return self.terms.get((0,) * (2 * self.n), self.field.zero())

    def swap_blocks(self) -> "MultiPoly":
        n = self.n
        return MultiPoly._wrap(n, self.field, {e[n:] + e[:n]: c for e, c in self.terms.items()})

    def is_x_only(self) -> bool:
        n = self.n
        return all(not any(e[n:]) for e in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    # --- calculus ------------------------------------------------------
    def partial(self, var: int) -> "MultiPoly":
        """Derivative with respect to variable index ``var`` in ``0..2n-1``."""
        terms = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                ne = e[:var] + (k - 1,) + e[var + 1:]
                terms[ne] = c * k
        return MultiPoly._wrap(self.n, self.field, terms)

    def mul_linear(self, alpha: Sequence, block: str = X_BLOCK) -> "MultiPoly":
        """Multiply by ``(alpha, v)`` without building the linear form first."""
        n = self.n
        off = _block_offset(n, block)
        p, alpha = _align(self, alpha)
        coeffs = [(off + i, a) for i, a in enumerate(alpha) if a]
        terms: dict = {}
        get = terms.get
        for e, c in p.terms.items():
            for i, a in coeffs:
                ne = e[:i] + (e[i] + 1,) + e[i + 1:]
                v = get(ne)
                terms[ne] = c * a if v is None else v + c * a
        return MultiPoly._wrap(n, p.field, {e: c for e, c in terms.items() if c})

    # --- numeric evaluation --------------------------------------------
    def to_arrays(self):
        """Exponent matrix (T, 2n) and complex coefficient vector (T,)."""
        items = self.sorted_terms()
        if not items:
            return np.zeros((0, 2 * self.n), dtype=np.int64), np.zeros(0, dtype=complex)
        exps = np.array([e for e, _ in items], dtype=np.int64)
        coeffs = np.array([self.field.to_float(c) for _, c in items], dtype=complex)
        return exps, coeffs

    def __call__(self, x, lam=None):
        """Evaluate at complex point(s); ``x`` and ``lam`` have trailing size n."""
        from ..quadrature.kernels import eval_monomials

        x = np.asarray(x, dtype=complex)
        single = x.ndim == 1
        x = np.atleast_2d(x)
        if lam is None:
            lam = np.zeros_like(x)
        lam = np.broadcast_to(np.asarray(lam, dtype=complex), x.shape)
        pts = np.ascontiguousarray(np.concatenate([x, lam], axis=1))
        exps, coeffs = self.to_arrays()
        out = eval_monomials(pts, exps, coeffs)
        return out[0] if single else out

    # --- display --------------------------------------------------------
    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        names = [f"x{i + 1}" for i in range(self.n)] + [f"l{i + 1}" for i in range(self.n)]
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(names, e) if k)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def _align(p: MultiPoly, vec: Sequence):
    """Promote ``p`` if ``vec`` needs a quadratic field; coerce ``vec`` into it."""
    field = p.field
    for a in vec:
        if isinstance(a, QF) and a.b and field.is_rational:
            field = Field(a.d)
            break
    p = p.promote(field)
    return p, [field.coerce(a) for a in vec]


def dir_derivative(p: MultiPoly, alpha: Sequence, block: str = X_BLOCK) -> MultiPoly:
    """``sum_i alpha_i dp/dv_i`` over the chosen block."""
    if len(alpha) != p.n:
        raise ArityMismatch(f"direction of length {len(alpha)} for arity {p.n}")
    p, alpha = _align(p, alpha)
    off = _block_offset(p.n, block)
    terms: dict = {}
    get = terms.get
    for i, a in enumerate(alpha):
        if not a:
            continue
        v = off + i
        for e, c in p.terms.items():
            k = e[v]
            if k:
                ne = e[:v] + (k - 1,) + e[v + 1:]
                val = c * a * k
                old = get(ne)
                terms[ne] = val if old is None else old + val
    return MultiPoly._wrap(p.n, p.field, {e: c for e, c in terms.items() if c})


def divmod_linear(p: MultiPoly, alpha: Sequence, block: str = X_BLOCK):
    """Divide ``p`` by the linear form ``(alpha, v)``.

    Returns ``(q, r)`` with ``p = (alpha, v) q + r`` and ``r`` free of the
    pivot variable (the first coordinate where ``alpha`` is nonzero).  The
    pivot substitution is the same as changing variables so that the form
    becomes a coordinate, followed by univariate division in it.
    """
    if len(alpha) != p.n:
        raise ArityMismatch(f"divisor of length {len(alpha)} for arity {p.n}")
    p, alpha = _align(p, alpha)
    field = p.field
    off = _block_offset(p.n, block)
    nz = [(off + i, a) for i, a in enumerate(alpha) if a]
    if not nz:
        raise ZeroDivisionError("division by the zero linear form")
    j, aj = nz[0]
    inv = 1 / aj
    others = nz[1:]

    # bucket terms by the exponent of the pivot variable, then peel levels
    # from the top; each step cancels the pivot term exactly and pushes the
    # remaining part of the divisor one level down
    levels: dict[int, dict] = {}
    for e, c in p.terms.items():
        levels.setdefault(e[j], {})[e] = c
    quotient: dict = {}
    top = max(levels) if levels else 0
    for k in range(top, 0, -1):
        bucket = levels.pop(k, None)
        if not bucket:
            continue
        lower = levels.setdefault(k - 1, {})
        for e, c in bucket.items():
            if not c:
                continue
            qe = e[:j] + (k - 1,) + e[j + 1:]
            qc = c * inv
            quotient[qe] = qc
            for i, a in others:
                ne = qe[:i] + (qe[i] + 1,) + qe[i + 1:]
                v = lower.get(ne)
                lower[ne] = -(qc * a) if v is None else v - qc * a
    rem = {e: c for e, c in levels.get(0, {}).items() if c}
    q = MultiPoly._wrap(p.n, field, {e: c for e, c in quotient.items() if c})
    r = MultiPoly._wrap(p.n, field, rem)
    return q, r


def exact_div_linear(p: MultiPoly, alpha: Sequence, block: str = X_BLOCK) -> MultiPoly:
    """Quotient of ``p`` by ``(alpha, v)``; raises NonDivisible otherwise."""
    q, r = divmod_linear(p, alpha, block)
    if r:
        raise NonDivisible(r)
    return q


def reduce_mod_linear(p: MultiPoly, alpha: Sequence, block: str = X_BLOCK) -> MultiPoly:
    """Remainder of ``p`` modulo ``(alpha, v)`` (zero iff ``p`` vanishes on the hyperplane)."""
    return divmod_linear(p, alpha, block)[1]


class ExpPoly:
    """``P(x, lam) * exp((x, lam))``; only the polynomial part is stored."""

    __slots__ = ("poly",)

    def __init__(self, poly: MultiPoly):
        self.poly = poly

    @property
    def n(self):
        return self.poly.n

    @property
    def field(self):
        return self.poly.field

    def __eq__(self, other):
        return isinstance(other, ExpPoly) and self.poly == other.poly

    def __hash__(self):
        return hash(("ExpPoly", self.poly))

    def __add__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return ExpPoly(self.poly + other.poly)

    def __sub__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return ExpPoly(self.poly - other.poly)

    def __neg__(self):
        return ExpPoly(-self.poly)

    def __mul__(self, other):
        # product of two ExpPolys would double the exponent; only allow scalars
        # and polynomials as multipliers
        if isinstance(other, ExpPoly):
            raise TypeError("product of two ExpPoly values leaves the e^{(x,lam)} class")
        return ExpPoly(self.poly * other)

    __rmul__ = __mul__

    def swap(self) -> "ExpPoly":
        return ExpPoly(self.poly.swap_blocks())

    def __call__(self, x, lam):
        x = np.asarray(x, dtype=complex)
        lam = np.asarray(lam, dtype=complex)
        return self.poly(x, lam) * np.exp(np.sum(np.broadcast_to(x, np.broadcast_shapes(x.shape, lam.shape)) * lam, axis=-1))

    def __repr__(self):
        return f"ExpPoly[{self.poly!r}] * exp((x,lam))"
