"""Collapsing an Omega-tridendriform algebra A to a classical one on kOmega (x) A.

    (a (x) x) < (b (x) y) = (a <- b) (x) x <_{a<|b} y
    (a (x) x) > (b (x) y) = (a -> b) (x) x >_{a|>b} y
    (a (x) x) o (b (x) y) = (a . b)  (x) x o_{a*b} y

The probes compare, degree by degree, the subalgebra generated by the
elements w (x) (x-corolla) inside kOmega (x) k(trees) with the full space and
with the free classical algebra on Omega x X.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .axioms import TridendImpl
from .exact import LinComb
from .free import FreeTridend, evaluate
from .linalg import RowSpace, dependence
from .omega import OmegaTable, builtin
from .trees import ResourceLimit, count, corolla, enumerate_trees, render, schroeder

PHI_MAPS = {
    "left": ("left_arrow", "ltri"),
    "right": ("right_arrow", "rtri"),
    "star": ("dot", "star"),
}


def phi(t: OmegaTable, which: str, a: int, b: int) -> tuple:
    first, second = PHI_MAPS[which]
    return (getattr(t, first)[a][b], getattr(t, second)[a][b])


@dataclass
class PhiReport:
    surjective: bool
    injective: bool
    image_size: int
    missing: Optional[tuple] = None  # a pair outside the image
    collision: Optional[tuple] = None  # two pairs with the same image

    def to_json(self) -> dict:
        return {"surjective": self.surjective, "injective": self.injective, "image_size": self.image_size,
                "missing": self.missing, "collision": self.collision}


def phi_properties(t: OmegaTable) -> dict:
    out = {}
    pairs = list(itertools.product(range(t.size), repeat=2))
    for which in PHI_MAPS:
        fibres: dict = {}
        for p in pairs:
            fibres.setdefault(phi(t, which, *p), []).append(p)
        missing = next((p for p in pairs if p not in fibres), None)
        collision = next((tuple(v[:2]) for v in fibres.values() if len(v) > 1), None)
        out[which] = PhiReport(missing is None, collision is None, len(fibres), missing, collision)
    return out


def all_surjective(t: OmegaTable) -> bool:
    return all(r.surjective for r in phi_properties(t).values())


def all_injective(t: OmegaTable) -> bool:
    return all(r.injective for r in phi_properties(t).values())


class CollapsedAlgebra(TridendImpl):
    """kOmega (x) A as a classical tridendriform algebra (one-element index set).

    Elements are LinComb over pairs (w, key) with ``key`` a basis key of
    ``impl``, whose elements must be LinComb as well.
    """

    def __init__(self, t: OmegaTable, impl: TridendImpl):
        if impl.table != t:
            raise ValueError("implementation is defined over a different Omega table")
        self.omega = t
        self.impl = impl
        self.table = builtin("trivial", 1)
        self._memo: dict = {}

    def _basis(self, op, p, q) -> LinComb:
        key = (op, p, q)
        hit = self._memo.get(key)
        if hit is None:
            (a, x), (b, y) = p, q
            first, second = {"prec": PHI_MAPS["left"], "succ": PHI_MAPS["right"], "circ": PHI_MAPS["star"]}[op]
            w = getattr(self.omega, first)[a][b]
            idx = getattr(self.omega, second)[a][b]
            inner = self.impl.product(op, idx, LinComb.basis(x), LinComb.basis(y))
            hit = self._memo[key] = LinComb._wrap({(w, k): c for k, c in inner.items()})
        return hit

    def product(self, op, w, u, v):
        from .exact import extend_bilinear

        return extend_bilinear(lambda p, q: self._basis(op, p, q), u, v)

    def prec(self, w, u, v):
        return self.product("prec", w, u, v)

    def succ(self, w, u, v):
        return self.product("succ", w, u, v)

    def circ(self, w, u, v):
        return self.product("circ", w, u, v)

    def zero(self):
        return LinComb.zero

    def equal(self, a, b) -> bool:
        return a == b

    def render(self, a) -> str:
        def fmt(k):
            w, key = k
            return f"{w}@{render(key) if hasattr(key, 'children') else key}"
        return a.render(fmt)

    def element(self, w: int, key) -> LinComb:
        return LinComb.basis((w, key))


def collapsed_product(op: str, t: OmegaTable, impl: TridendImpl, x: LinComb, y: LinComb) -> LinComb:
    return CollapsedAlgebra(t, impl).product(op, 0, x, y)


# ---------------------------------------------------------------------------
# probes

MAX_PROBE_DEGREE = 5


@dataclass
class ProbeReport:
    verdict: bool
    n_max: int
    dims: dict = field(default_factory=dict)  # degree -> (span dim, expected dim)
    first_failure: Optional[int] = None
    witness: Optional[object] = None

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "n_max": self.n_max,
                "dims": {str(k): list(v) for k, v in self.dims.items()},
                "first_failure": self.first_failure, "witness": self.witness}


def _guard(n_max: int, limit: int):
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if n_max > limit:
        raise ResourceLimit(f"degree {n_max} exceeds the probe limit {limit}")


def generation_probe(t: OmegaTable, X: Sequence = ("x",), n_max: int = 3,
                     max_degree: int = MAX_PROBE_DEGREE) -> ProbeReport:
    """Span of classical-product words in w (x) x-corolla, degree by degree."""
    _guard(n_max, max_degree)
    C = CollapsedAlgebra(t, FreeTridend(t))
    bases = {1: RowSpace(C.element(w, corolla(x)) for w in range(t.size) for x in X)}
    report = ProbeReport(True, n_max)
    for n in range(1, n_max + 1):
        if n > 1:
            span = RowSpace()
            for i in range(1, n):
                for u in bases[i].basis():
                    for v in bases[n - i].basis():
                        for op in ("prec", "succ", "circ"):
                            span.add(C.product(op, 0, LinComb(u), LinComb(v)))
            bases[n] = span
        expected = t.size * count(n, len(X), t.size)
        report.dims[n] = (bases[n].rank, expected)
        if bases[n].rank != expected and report.verdict:
            report.verdict = False
            report.first_failure = n
            full = [(w, T) for w in range(t.size) for T in enumerate_trees(n, X, t)]
            miss = next(k for k in full if not bases[n].contains({k: 1}))
            report.witness = f"{miss[0]}@{render(miss[1])} is not in the span"
    return report


def freeness_probe(t: OmegaTable, X: Sequence = ("x",), n_max: int = 3,
                   max_degree: int = MAX_PROBE_DEGREE) -> ProbeReport:
    """Evaluate the free classical algebra on Omega x X into kOmega (x) trees and
    compare ranks with S_n (|Omega||X|)^n."""
    _guard(n_max, max_degree)
    C = CollapsedAlgebra(t, FreeTridend(t))
    labels = [f"{w}_{x}" for w in range(t.size) for x in X]
    gen = {f"{w}_{x}": C.element(w, corolla(x)) for w in range(t.size) for x in X}
    trivial = builtin("trivial", 1)
    report = ProbeReport(True, n_max)
    for n in range(1, n_max + 1):
        free_trees = enumerate_trees(n, labels, trivial)
        images = [evaluate(T, C, gen) for T in free_trees]
        r = RowSpace(images).rank
        expected = schroeder(n) * len(labels) ** n
        report.dims[n] = (r, expected)
        if r != expected and report.verdict:
            report.verdict = False
            report.first_failure = n
            dep = dependence(images)
            report.witness = " + ".join(
                f"{c}*{render(free_trees[i])}" for i, c in sorted(dep.items())
            ) + " = 0"
    return report
