"""Weight-2 computations in the nonsymmetric operad of Omega-tridendriform algebras.

The generators are ``(op, w)`` with op in prec, circ, succ.  A weight-2
basis element ``(slot, g, h)`` stands for g o (h, I) when slot = 1 and for
g o (I, h) when slot = 2.  Relations are stored as sparse vectors
LHS - RHS over that basis.

The dual side uses the generators dashv, perp, vdash, identified with
prec, circ, succ respectively, and the pairing

    <g o_1 h, g' o_1 h'> = +[g = g', h = h']
    <g o_2 h, g' o_2 h'> = -[g = g', h = h']

with mixed slots pairing to zero.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .exact import as_rational, format_rational
from .linalg import RowSpace, dot, null_space
from .omega import AxiomReport, OmegaTable, Violation

PRIMAL = ("prec", "circ", "succ")
DUAL = ("dashv", "perp", "vdash")
DUAL_OF = dict(zip(PRIMAL, DUAL))
SYMBOL = {"prec": "<", "circ": "o", "succ": ">", "dashv": "-|", "perp": "_|_", "vdash": "|-"}


def generators(t: OmegaTable, names: Sequence[str] = PRIMAL) -> list:
    return [(op, w) for op in names for w in range(t.size)]


def weight2_basis(t: OmegaTable, names: Sequence[str] = PRIMAL) -> list:
    """Deterministic basis of the weight-2 component: 2 (3|Omega|)^2 elements."""
    G = generators(t, names)
    return [(slot, g, h) for slot in (1, 2) for g in G for h in G]


def render_monomial(m) -> str:
    slot, (g, a), (h, b) = m
    inner = f"{SYMBOL[h]}{b}"
    args = f"({inner}, I)" if slot == 1 else f"(I, {inner})"
    return f"{SYMBOL[g]}{a} o {args}"


def render_relation(v: dict) -> str:
    if not v:
        return "0"
    parts = []
    for m, c in sorted(v.items(), key=lambda kv: (kv[0][0], str(kv[0]))):
        parts.append(f"{format_rational(c)}*[{render_monomial(m)}]")
    return " + ".join(parts)


@dataclass
class RelationSpace:
    """Sparse relation vectors over a weight-2 basis, with their row space."""

    basis: list
    relations: list
    labels: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.space = RowSpace(self.relations, order=self.basis)

    @property
    def rank(self) -> int:
        return self.space.rank

    @property
    def dim(self) -> int:
        return self.space.rank

    def contains(self, v: dict) -> bool:
        return self.space.contains(v)

    def same_span(self, other: "RelationSpace") -> bool:
        return self.space.same_span(other.space)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "count": len(self.relations),
            "relations": [{"label": lab, "text": render_relation(r)} for lab, r in zip(self.labels, self.relations)],
            **({"meta": self.meta} if self.meta else {}),
        }


def _vec(*terms) -> dict:
    out: dict = {}
    for c, m in terms:
        out[m] = out.get(m, 0) + Fraction(c)
        if not out[m]:
            del out[m]
    return out


def _relations(t: OmegaTable) -> tuple:
    rels, labels = [], []
    P = lambda w: ("prec", w)  # noqa: E731
    S = lambda w: ("succ", w)  # noqa: E731
    C = lambda w: ("circ", w)  # noqa: E731
    for al, be in itertools.product(range(t.size), repeat=2):
        ra, la, lt, rt = t.right_arrow[al][be], t.left_arrow[al][be], t.ltri[al][be], t.rtri[al][be]
        d, s = t.dot[al][be], t.star[al][be]
        fams = [
            _vec((1, (1, P(be), P(al))), (-1, (2, P(ra), S(rt))), (-1, (2, P(la), P(lt))), (-1, (2, P(d), C(s)))),
            _vec((1, (1, P(be), S(al))), (-1, (2, S(al), P(be)))),
            _vec((1, (2, S(al), S(be))), (-1, (1, S(ra), S(rt))), (-1, (1, S(la), P(lt))), (-1, (1, S(d), C(s)))),
            _vec((1, (1, C(be), S(al))), (-1, (2, S(al), C(be)))),
            _vec((1, (1, C(be), P(al))), (-1, (2, C(be), S(al)))),
            _vec((1, (1, P(be), C(al))), (-1, (2, C(al), P(be)))),
            _vec((1, (1, C(be), C(al))), (-1, (2, C(al), C(be)))),
        ]
        for i, v in enumerate(fams, start=1):
            rels.append(v)
            labels.append(f"R{i}({al},{be})")
    return rels, labels


def relation_space(t: OmegaTable) -> RelationSpace:
    """The 7 |Omega|^2 quadratic relations of the operad."""
    rels, labels = _relations(t)
    return RelationSpace(weight2_basis(t), rels, labels)


# ---------------------------------------------------------------------------
# Koszul dual

@dataclass(frozen=True)
class Convention:
    """Pairing sign on slot 1 (slot 2 gets the opposite) and the generator identification."""

    slot1_sign: int = 1
    identification: tuple = DUAL  # images of (prec, circ, succ)

    def translate(self, m) -> tuple:
        slot, (g, a), (h, b) = m
        ident = dict(zip(PRIMAL, self.identification))
        return (slot, (ident[g], a), (ident[h], b))

    def sign(self, slot: int) -> int:
        return self.slot1_sign if slot == 1 else -self.slot1_sign


DEFAULT_CONVENTION = Convention()


def pairing(r: dict, s: dict, conv: Convention = DEFAULT_CONVENTION) -> Fraction:
    """<r, s> for r over primal monomials and s over dual monomials."""
    total = Fraction(0)
    for m, c in r.items():
        d = conv.translate(m)
        if d in s:
            total += conv.sign(m[0]) * c * s[d]
    return total


def koszul_dual(t: OmegaTable, conv: Optional[Convention] = None) -> RelationSpace:
    """Annihilator of the relation space under the pairing.

    Without an explicit convention the default is validated against the
    displayed dual presentation at |Omega| = 1 and the opposite sign is used
    if it fails; the choice is recorded in ``meta``.
    """
    chosen = conv or validated_convention()
    R = relation_space(t)
    dual_basis = weight2_basis(t, DUAL)
    # express each relation in dual coordinates, weighted by the pairing sign
    weighted = [{chosen.translate(m): chosen.sign(m[0]) * c for m, c in r.items()} for r in R.relations]
    ns = null_space(weighted, dual_basis)
    return RelationSpace(dual_basis, ns, [f"K{i}" for i in range(len(ns))],
                         meta={"slot1_sign": chosen.slot1_sign, "identification": list(chosen.identification)})


def prop43_relations(t: OmegaTable, as_printed: bool = True) -> RelationSpace:
    """The eleven displayed families of dual relations.

    With ``as_printed=False`` the three vdash families with a fibre sum use
    vdash_alpha o (x_beta, I) on the left, which is the form that pairs to
    zero with the relation space for every ETS.
    """
    rels, labels = [], []
    D = lambda w: ("dashv", w)  # noqa: E731
    V = lambda w: ("vdash", w)  # noqa: E731
    T = lambda w: ("perp", w)  # noqa: E731
    n = t.size
    fibres = {"left": {}, "right": {}, "star": {}}
    for g, d in itertools.product(range(n), repeat=2):
        fibres["left"].setdefault((t.left_arrow[g][d], t.ltri[g][d]), []).append((g, d))
        fibres["right"].setdefault((t.right_arrow[g][d], t.rtri[g][d]), []).append((g, d))
        fibres["star"].setdefault((t.dot[g][d], t.star[g][d]), []).append((g, d))
    for al, be in itertools.product(range(n), repeat=2):
        fam = []
        for which, inner in (("left", D), ("right", V), ("star", T)):
            terms = [(1, (2, D(al), inner(be)))]
            terms += [(-1, (1, D(d), D(g))) for g, d in fibres[which].get((al, be), [])]
            fam.append(_vec(*terms))
        for which, inner in (("right", V), ("left", D), ("star", T)):
            outer, arg = (be, al) if as_printed else (al, be)
            terms = [(1, (1, V(outer), inner(arg)))]
            terms += [(-1, (2, V(g), V(d))) for g, d in fibres[which].get((al, be), [])]
            fam.append(_vec(*terms))
        fam += [
            _vec((1, (1, D(be), V(al))), (-1, (2, V(al), D(be)))),
            _vec((1, (1, T(be), V(al))), (-1, (2, V(al), T(be)))),
            _vec((1, (1, T(be), D(al))), (-1, (2, T(be), V(al)))),
            _vec((1, (1, D(be), T(al))), (-1, (2, T(al), D(be)))),
            _vec((1, (1, T(be), T(al))), (-1, (2, T(al), T(be)))),
        ]
        for i, v in enumerate(fam, start=1):
            rels.append(v)
            labels.append(f"K{i}({al},{be})")
    return RelationSpace(weight2_basis(t, DUAL), rels, labels, meta={"as_printed": as_printed})


def _trivial_table() -> OmegaTable:
    from .omega import builtin

    return builtin("trivial", 1)


_VALIDATED: dict = {}


def validated_convention() -> Convention:
    """Default pairing, or its opposite sign, whichever reproduces the displayed
    dual presentation at |Omega| = 1."""
    if "conv" not in _VALIDATED:
        t1 = _trivial_table()
        target = prop43_relations(t1)
        chosen = None
        for sign in (1, -1):
            conv = Convention(sign)
            if koszul_dual(t1, conv).same_span(target):
                chosen = conv
                break
        if chosen is None:
            raise RuntimeError("no pairing sign reproduces the dual presentation at |Omega| = 1")
        _VALIDATED["conv"] = chosen
    return _VALIDATED["conv"]


def annihilates(R: RelationSpace, S: RelationSpace, conv: Optional[Convention] = None) -> bool:
    conv = conv or validated_convention()
    return all(pairing(r, s, conv) == 0 for r in R.relations for s in S.relations)


# ---------------------------------------------------------------------------
# associativity of a single combination

@dataclass
class CoefficientTriple:
    a: dict
    b: dict
    c: dict

    @classmethod
    def from_lists(cls, a: Sequence, b: Sequence, c: Sequence) -> "CoefficientTriple":
        if not len(a) == len(b) == len(c):
            raise ValueError("a, b, c must have one entry per Omega element")
        conv = lambda xs: {i: as_rational(x) for i, x in enumerate(xs)}  # noqa: E731
        return cls(conv(a), conv(b), conv(c))

    @classmethod
    def random(cls, n: int, rng: random.Random, span: int = 2) -> "CoefficientTriple":
        """Sparse small rationals; biased towards the structured solutions."""
        def vec():
            return [Fraction(rng.randint(-span, span), rng.randint(1, 2)) if rng.random() < 0.6 else Fraction(0)
                    for _ in range(n)]
        a, b, c = vec(), vec(), vec()
        mode = rng.randrange(4)
        if mode == 1:
            c = list(a)
        elif mode == 2:
            b = [Fraction(0)] * n
        elif mode == 3:
            a = [Fraction(0)] * n
            c = [Fraction(0)] * n
        return cls.from_lists(a, b, c)

    def get(self, which: str, w: int) -> Fraction:
        return getattr(self, which).get(w, Fraction(0))

    def as_lists(self, n: int) -> tuple:
        return tuple([self.get(k, w) for w in range(n)] for k in "abc")


def _fibre_sum(t, which, x: dict, y: dict, al, be) -> Fraction:
    from .tensor import phi

    return sum((x.get(g, 0) * y.get(d, 0) for g, d in itertools.product(range(t.size), repeat=2)
                if phi(t, which, g, d) == (al, be)), Fraction(0))


ASSOC_FAMILIES = (
    "a_al a_be = sum_{phi_<-(al',be')=(al,be)} a_al' a_be'",
    "a_al b_be = sum_{phi_*(al',be')=(al,be)} a_al' a_be'",
    "a_al c_be = sum_{phi_->(al',be')=(al,be)} a_al' a_be'",
    "b_al c_be = b_al a_be",
    "c_al a_be = sum_{phi_<-(al',be')=(al,be)} c_al' c_be'",
    "c_al b_be = sum_{phi_*(al',be')=(al,be)} c_al' c_be'",
    "c_al c_be = sum_{phi_->(al',be')=(al,be)} c_al' c_be'",
)


def assoc_conditions(t: OmegaTable, k: CoefficientTriple) -> AxiomReport:
    """The seven scalar families for all (alpha, beta)."""
    report = AxiomReport(checked=tuple(f"A{i}" for i in range(1, 8)))
    a, b, c = k.a, k.b, k.c
    g = lambda v, w: v.get(w, Fraction(0))  # noqa: E731
    for al, be in itertools.product(range(t.size), repeat=2):
        eqs = [
            (g(a, al) * g(a, be), _fibre_sum(t, "left", a, a, al, be)),
            (g(a, al) * g(b, be), _fibre_sum(t, "star", a, a, al, be)),
            (g(a, al) * g(c, be), _fibre_sum(t, "right", a, a, al, be)),
            (g(b, al) * g(c, be), g(b, al) * g(a, be)),
            (g(c, al) * g(a, be), _fibre_sum(t, "left", c, c, al, be)),
            (g(c, al) * g(b, be), _fibre_sum(t, "star", c, c, al, be)),
            (g(c, al) * g(c, be), _fibre_sum(t, "right", c, c, al, be)),
        ]
        for i, (lhs, rhs) in enumerate(eqs, start=1):
            if lhs != rhs:
                report.violations.append(
                    Violation(f"A{i}", (al, be), format_rational(lhs), format_rational(rhs), ASSOC_FAMILIES[i - 1])
                )
    return report


def _phi_tensor(t, which, x: dict, y: dict) -> dict:
    """phi extended linearly to kOmega (x) kOmega, applied to x (x) y."""
    from .tensor import phi

    out: dict = {}
    for g, d in itertools.product(range(t.size), repeat=2):
        v = x.get(g, 0) * y.get(d, 0)
        if v:
            key = phi(t, which, g, d)
            out[key] = out.get(key, 0) + v
    return {k: v for k, v in out.items() if v}


def _tensor(x: dict, y: dict) -> dict:
    return {(g, d): x[g] * y[d] for g in x for d in y if x[g] * y[d]}


def _nz(v: dict) -> dict:
    return {k: Fraction(c) for k, c in v.items() if c}


def remark_conditions(t: OmegaTable, k: CoefficientTriple) -> bool:
    """The reformulation as two alternative systems of tensor identities."""
    a, b, c = _nz(k.a), _nz(k.b), _nz(k.c)
    aa, cc = _tensor(a, a), _tensor(c, c)
    first = (
        not b
        and _phi_tensor(t, "left", a, a) == aa
        and _phi_tensor(t, "right", a, a) == _tensor(a, c)
        and not _phi_tensor(t, "star", a, a)
        and _phi_tensor(t, "left", c, c) == _tensor(c, a)
        and _phi_tensor(t, "right", c, c) == cc
        and not _phi_tensor(t, "star", c, c)
    )
    second = (
        c == a
        and _phi_tensor(t, "left", a, a) == aa
        and _phi_tensor(t, "right", a, a) == aa
        and _phi_tensor(t, "star", a, a) == _tensor(a, b)
    )
    return first or second


def remark_first_form(t: OmegaTable, k: CoefficientTriple) -> bool:
    """The first (non-disjunctive) list of tensor identities in the reformulation."""
    a, b, c = _nz(k.a), _nz(k.b), _nz(k.c)
    return (
        _phi_tensor(t, "left", a, a) == _tensor(a, a)
        and _phi_tensor(t, "star", a, a) == _tensor(a, b)
        and _phi_tensor(t, "right", a, a) == _tensor(a, c)
        and (not b or a == c)
        and _phi_tensor(t, "left", c, c) == _tensor(c, a)
        and _phi_tensor(t, "star", c, c) == _tensor(c, b)
        and _phi_tensor(t, "right", c, c) == _tensor(c, c)
    )


def assoc_remark_equivalence(t: OmegaTable, k: CoefficientTriple) -> bool:
    """True iff the reformulated conditions give the same verdict as :func:`assoc_conditions`."""
    return remark_conditions(t, k) == assoc_conditions(t, k).passed


def combination_vector(t: OmegaTable, k: CoefficientTriple) -> dict:
    """m o (m, I) - m o (I, m) in the weight-2 basis."""
    m = {}
    for which, op in (("a", "prec"), ("b", "circ"), ("c", "succ")):
        for w, v in getattr(k, which).items():
            if v:
                m[(op, w)] = Fraction(v)
    out: dict = {}
    for g, cg in m.items():
        for h, ch in m.items():
            for slot, sign in ((1, 1), (2, -1)):
                key = (slot, g, h)
                out[key] = out.get(key, 0) + sign * cg * ch
    return {k_: v for k_, v in out.items() if v}


def is_associative_in_operad(t: OmegaTable, k: CoefficientTriple, R: Optional[RelationSpace] = None) -> bool:
    """m is associative iff m o_1 m - m o_2 m lies in the relation space."""
    R = R or relation_space(t)
    return R.contains(combination_vector(t, k))


def combo_associativity_witness(t: OmegaTable, k: CoefficientTriple, leaf_bound: int = 6,
                                X: Sequence = ("x",)) -> Optional[tuple]:
    """First tree triple (L, M, R) on which m(m(L, M), R) != m(L, m(M, R)), or None.

    m is the combination of the free tree products given by ``k``.
    """
    from .axioms import tree_triples
    from .free import combo_product

    def m(u, v):
        return combo_product(k.a, k.b, k.c, t, u, v)

    for L, M, R in tree_triples(t, leaf_bound, X):
        if m(m(L, M), R) != m(L, m(M, R)):
            return (L, M, R)
    return None
