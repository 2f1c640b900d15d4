"""Generic interface for Omega-tridendriform algebras and axiom checkers.

Any implementation exposing ``prec``, ``succ`` and ``circ`` indexed by an
Omega element, plus the linear structure (``zero``, ``add``, ``scale``,
``equal``), can be checked here: trees, typed words, Rota-Baxter induced
products and tensor-collapsed products all use the same code path.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .exact import LinComb, extend_bilinear
from .omega import AxiomReport, OmegaTable, Violation, check_ets

OPS = ("prec", "succ", "circ")


class TridendImpl:
    """Abstract Omega-tridendriform algebra over ``table``."""

    table: OmegaTable

    def prec(self, w: int, a, b):
        raise NotImplementedError

    def succ(self, w: int, a, b):
        raise NotImplementedError

    def circ(self, w: int, a, b):
        raise NotImplementedError

    def product(self, op: str, w: int, a, b):
        if op not in OPS:
            raise ValueError(f"unknown product {op!r}")
        return getattr(self, op)(w, a, b)

    # linear structure
    def zero(self):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def scale(self, c, a):
        return c * a

    def equal(self, a, b) -> bool:
        return self.render(a) == self.render(b)

    def render(self, a) -> str:
        return str(a)


class LinearTridend(TridendImpl):
    """Elements are :class:`LinComb` over a basis; subclasses give basis products."""

    def __init__(self, table: OmegaTable):
        self.table = table
        self._memo: dict = {}

    def basis_product(self, op: str, w: int, x, y) -> LinComb:
        raise NotImplementedError

    def _cached(self, op, w, x, y) -> LinComb:
        key = (op, w, x, y)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = self.basis_product(op, w, x, y)
        return hit

    def _bilinear(self, op, w, a, b) -> LinComb:
        return extend_bilinear(lambda x, y: self._cached(op, w, x, y), a, b)

    def prec(self, w, a, b):
        return self._bilinear("prec", w, a, b)

    def succ(self, w, a, b):
        return self._bilinear("succ", w, a, b)

    def circ(self, w, a, b):
        return self._bilinear("circ", w, a, b)

    def zero(self):
        return LinComb.zero

    def equal(self, a, b) -> bool:
        return a == b

    def render_key(self, key) -> str:
        return str(key)

    def render(self, a) -> str:
        return a.render(self.render_key)


# ---------------------------------------------------------------------------
# triple sources

@dataclass
class TripleSource:
    """Exhaustive (size-bounded) or seeded-random triples of elements.

    ``groups`` maps a size (leaf count, word length, ...) to elements of that
    size.  Exhaustive mode yields every triple with total size <= ``bound``;
    sampled mode draws ``samples`` triples from the pooled elements.
    """

    groups: dict
    bound: Optional[int] = None
    samples: Optional[int] = None
    seed: int = 0

    @classmethod
    def exhaustive(cls, groups: dict, bound: int) -> "TripleSource":
        return cls(dict(groups), bound=bound)

    @classmethod
    def sampled(cls, pool: Sequence, samples: int = 512, seed: int = 0) -> "TripleSource":
        return cls({0: list(pool)}, samples=samples, seed=seed)

    def pairs(self) -> Iterator[tuple]:
        if self.samples is not None:
            rng = random.Random(self.seed)
            pool = [e for g in self.groups.values() for e in g]
            for _ in range(self.samples):
                yield rng.choice(pool), rng.choice(pool)
            return
        sizes = sorted(self.groups)
        for s1, s2 in itertools.product(sizes, repeat=2):
            if s1 + s2 <= self.bound:
                for a in self.groups[s1]:
                    for b in self.groups[s2]:
                        yield a, b

    def __iter__(self) -> Iterator[tuple]:
        if self.samples is not None:
            rng = random.Random(self.seed)
            pool = [e for g in self.groups.values() for e in g]
            for _ in range(self.samples):
                yield rng.choice(pool), rng.choice(pool), rng.choice(pool)
            return
        sizes = sorted(self.groups)
        for s1, s2, s3 in itertools.product(sizes, repeat=3):
            if s1 + s2 + s3 <= self.bound:
                yield from itertools.product(self.groups[s1], self.groups[s2], self.groups[s3])


# ---------------------------------------------------------------------------
# the seven axioms

def _sum3(A: TridendImpl, x, y, z):
    return A.add(A.add(x, y), z)


def _tri1(A, t, al, be, a, b, c):
    lhs = A.prec(be, A.prec(al, a, b), c)
    rhs = _sum3(
        A,
        A.prec(t.right_arrow[al][be], a, A.succ(t.rtri[al][be], b, c)),
        A.prec(t.left_arrow[al][be], a, A.prec(t.ltri[al][be], b, c)),
        A.prec(t.dot[al][be], a, A.circ(t.star[al][be], b, c)),
    )
    return lhs, rhs


def _tri2(A, t, al, be, a, b, c):
    return A.prec(be, A.succ(al, a, b), c), A.succ(al, a, A.prec(be, b, c))


def _tri3(A, t, al, be, a, b, c):
    lhs = A.succ(al, a, A.succ(be, b, c))
    rhs = _sum3(
        A,
        A.succ(t.right_arrow[al][be], A.succ(t.rtri[al][be], a, b), c),
        A.succ(t.left_arrow[al][be], A.prec(t.ltri[al][be], a, b), c),
        A.succ(t.dot[al][be], A.circ(t.star[al][be], a, b), c),
    )
    return lhs, rhs


def _tri4(A, t, al, be, a, b, c):
    return A.circ(be, A.succ(al, a, b), c), A.succ(al, a, A.circ(be, b, c))


def _tri5(A, t, al, be, a, b, c):
    return A.circ(be, A.prec(al, a, b), c), A.circ(be, a, A.succ(al, b, c))


def _tri6(A, t, al, be, a, b, c):
    return A.prec(be, A.circ(al, a, b), c), A.circ(al, a, A.prec(be, b, c))


def _tri7(A, t, al, be, a, b, c):
    return A.circ(be, A.circ(al, a, b), c), A.circ(al, a, A.circ(be, b, c))


TRIDEND_AXIOMS = (
    ("tri1", "(a <_al b) <_be c = a <_{al->be}(b >_{al|>be} c) + a <_{al<-be}(b <_{al<|be} c) + a <_{al.be}(b o_{al*be} c)", _tri1),
    ("tri2", "(a >_al b) <_be c = a >_al (b <_be c)", _tri2),
    ("tri3", "a >_al (b >_be c) = (a >_{al|>be} b) >_{al->be} c + (a <_{al<|be} b) >_{al<-be} c + (a o_{al*be} b) >_{al.be} c", _tri3),
    ("tri4", "(a >_al b) o_be c = a >_al (b o_be c)", _tri4),
    ("tri5", "(a <_al b) o_be c = a o_be (b >_al c)", _tri5),
    ("tri6", "(a o_al b) <_be c = a o_al (b <_be c)", _tri6),
    ("tri7", "(a o_al b) o_be c = a o_al (b o_be c)", _tri7),
)


def check_axioms(
    impl: TridendImpl,
    src: Iterable,
    axioms: Optional[Sequence[str]] = None,
    max_violations: Optional[int] = None,
) -> AxiomReport:
    """Evaluate the seven axioms on every triple and every (alpha, beta)."""
    t = impl.table
    chosen = [ax for ax in TRIDEND_AXIOMS if axioms is None or ax[0] in axioms]
    report = AxiomReport(checked=tuple(ax[0] for ax in chosen))
    omegas = list(itertools.product(range(t.size), repeat=2))
    for a, b, c in src:
        for label, text, fn in chosen:
            for al, be in omegas:
                lhs, rhs = fn(impl, t, al, be, a, b, c)
                if not impl.equal(lhs, rhs):
                    report.violations.append(Violation(
                        label,
                        (impl.render(a), impl.render(b), impl.render(c), al, be),
                        impl.render(lhs), impl.render(rhs), text,
                    ))
                    if max_violations is not None and len(report.violations) >= max_violations:
                        return report
    return report


def check_commutative(impl: TridendImpl, src, max_violations: Optional[int] = None) -> AxiomReport:
    """a <_w b = b >_w a and a o_w b = b o_w a on all pairs from ``src``."""
    report = AxiomReport(checked=("comm_prec_succ", "comm_circ"))
    pairs = src.pairs() if isinstance(src, TripleSource) else src
    for a, b in pairs:
        for w in range(impl.table.size):
            for label, lhs, rhs in (
                ("comm_prec_succ", impl.prec(w, a, b), impl.succ(w, b, a)),
                ("comm_circ", impl.circ(w, a, b), impl.circ(w, b, a)),
            ):
                if not impl.equal(lhs, rhs):
                    report.violations.append(Violation(
                        label, (impl.render(a), impl.render(b), w), impl.render(lhs), impl.render(rhs)
                    ))
                    if max_violations is not None and len(report.violations) >= max_violations:
                        return report
    return report


@dataclass(frozen=True)
class ProbeResult:
    ets_ok: bool
    axioms_ok: bool
    leaf_bound: int
    ets_witness: Optional[Violation] = None
    axiom_witness: Optional[Violation] = None

    @property
    def agree(self) -> bool:
        return self.ets_ok == self.axioms_ok


def tree_triples(t: OmegaTable, leaf_bound: int, X: Sequence = ("x",)) -> TripleSource:
    from .trees import enumerate_trees

    # each factor has at least two leaves
    groups = {k: [LinComb.basis(T) for T in enumerate_trees(k - 1, X, t, max_degree=leaf_bound)]
              for k in range(2, leaf_bound - 3)}
    return TripleSource.exhaustive(groups, leaf_bound)


def ets_equivalence_probe(t: OmegaTable, leaf_bound: int = 6, X: Sequence = ("x",)) -> ProbeResult:
    """Compare the ETS verdict with the tree-axiom scan up to ``leaf_bound`` total leaves."""
    if leaf_bound < 6:
        raise ValueError("leaf_bound must be at least 6")
    from .free import FreeTridend

    ets = check_ets(t, max_witnesses=1)
    rep = check_axioms(FreeTridend(t), tree_triples(t, leaf_bound, X), max_violations=1)
    return ProbeResult(
        ets.passed, rep.passed, leaf_bound,
        ets.violations[0] if ets.violations else None,
        rep.violations[0] if rep.violations else None,
    )
