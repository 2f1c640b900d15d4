"""Exact sparse linear algebra over the rationals.

Vectors are dicts mapping a column key to a nonzero Fraction.  A
:class:`RowSpace` keeps a fully reduced echelon basis so membership tests
and span comparisons are exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exact import sort_key


def _clean(v) -> dict:
    out = {}
    for k, c in (v.items() if hasattr(v, "items") else v):
        c = Fraction(c)
        if c:
            out[k] = out.get(k, 0) + c
            if not out[k]:
                del out[k]
    return out


def _axpy(y: dict, a: Fraction, x: dict) -> None:
    """y += a * x in place."""
    for k, c in x.items():
        s = y.get(k, 0) + a * c
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class RowSpace:
    """Span of sparse vectors, kept in reduced row echelon form.

    ``order`` fixes the column order (pivot = smallest column present);
    without it keys are ordered by :func:`exact.sort_key`.
    """

    def __init__(self, vectors: Iterable = (), order: Optional[Sequence] = None):
        self._pos = {k: i for i, k in enumerate(order)} if order is not None else None
        self.rows: dict = {}  # pivot column -> row (pivot coefficient 1)
        for v in vectors:
            self.add(v)

    def _key(self, k):
        return self._pos[k] if self._pos is not None else sort_key(k)

    def _pivot(self, v: dict):
        return min(v, key=self._key)

    def reduce(self, v) -> dict:
        """Remainder of v modulo the span (zero dict iff v is in the span)."""
        r = _clean(v)
        changed = True
        while changed and r:
            changed = False
            for p in [k for k in r if k in self.rows]:
                c = r.get(p)
                if c:
                    _axpy(r, -c, self.rows[p])
                    changed = True
        return r

    def add(self, v) -> bool:
        """Insert v; return True iff the rank increased."""
        r = self.reduce(v)
        if not r:
            return False
        p = self._pivot(r)
        inv = 1 / r[p]
        r = {k: c * inv for k, c in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                _axpy(row, -c, r)
        self.rows[p] = r
        return True

    def contains(self, v) -> bool:
        return not self.reduce(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis(self) -> list:
        return [dict(self.rows[p]) for p in sorted(self.rows, key=self._key)]

    def __le__(self, other: "RowSpace") -> bool:
        return all(other.contains(r) for r in self.rows.values())

    def same_span(self, other: "RowSpace") -> bool:
        return self.rank == other.rank and self <= other


def rank(vectors: Iterable, order: Optional[Sequence] = None) -> int:
    return RowSpace(vectors, order).rank


def null_space(vectors: Sequence, columns: Sequence) -> list:
    """Basis of {x : <v, x> = 0 for every v}, as dicts over ``columns``."""
    rs = RowSpace(vectors, order=columns)
    pivots = set(rs.rows)
    out = []
    for free in columns:
        if free in pivots:
            continue
        x = {free: Fraction(1)}
        for p, row in rs.rows.items():
            c = row.get(free)
            if c:
                x[p] = -c
        out.append(x)
    return out


def dependence(vectors: Sequence) -> Optional[dict]:
    """A nonzero coefficient map i -> c with sum c_i v_i = 0, or None."""
    # tag each vector with an identity column so reduction records the combination
    tagged = []
    for i, v in enumerate(vectors):
        w = {("v", k): c for k, c in _clean(v).items()}
        w[("tag", i)] = Fraction(1)
        tagged.append(w)
    order_v = []
    seen = set()
    for v in vectors:
        for k in sorted(_clean(v), key=sort_key):
            if k not in seen:
                seen.add(k)
                order_v.append(("v", k))
    order = order_v + [("tag", i) for i in range(len(vectors))]
    rs = RowSpace(order=order)
    for w in tagged:
        r = rs.reduce(w)
        if r and all(k[0] == "tag" for k in r):
            return {k[1]: c for k, c in r.items()}
        rs.add(w)
    return None


def dot(u: dict, v: dict) -> Fraction:
    if len(u) > len(v):
        u, v = v, u
    return sum((c * v[k] for k, c in u.items() if k in v), Fraction(0))
