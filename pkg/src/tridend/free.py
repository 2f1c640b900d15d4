"""The three product families on decorated Schröder trees.

Products are defined on basis trees by recursion on the total number of
leaves and extended bilinearly.  Retyping of a boundary leaf (the ``^w T``
and ``T^w`` notation) is applied after the inner product: every term of a
product keeps the leftmost leaf of its left factor and the rightmost leaf of
its right factor, so the two readings agree.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

from .axioms import TridendImpl
from .exact import LinComb, accumulate, extend_bilinear, scale
from .omega import OmegaTable
from .trees import (
    LEAF,
    Leaf,
    Vertex,
    corolla,
    render,
    left_type,
    right_type,
    set_leftmost_type,
    set_rightmost_type,
    strip_left,
    strip_right,
)

OPS = ("prec", "succ", "circ")


class _Unit:
    """The adjoined tree ``|``; never stored inside a combination."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNIT"


UNIT = _Unit()


def _graft_last(T: Vertex, comb: LinComb) -> LinComb:
    head = T.children[:-1]
    return LinComb._wrap({Vertex(head + (S,), T.angles): c for S, c in comb.items()})


def _graft_first(U: Vertex, comb: LinComb) -> LinComb:
    tail = U.children[1:]
    return LinComb._wrap({Vertex((S,) + tail, U.angles): c for S, c in comb.items()})


class TreeProducts:
    """Memoized basis-level products for one table."""

    def __init__(self, t: OmegaTable):
        self.t = t
        self._memo: dict = {}

    def product(self, op: str, w: int, T, U) -> LinComb:
        if T is UNIT or U is UNIT:
            return self._unit_product(op, T, U)
        key = (op, w, T, U)
        hit = self._memo.get(key)
        if hit is None:
            hit = getattr(self, "_" + op)(w, T, U)
            self._memo[key] = hit
        return hit

    @staticmethod
    def _unit_product(op, T, U) -> LinComb:
        if T is UNIT and U is UNIT:
            raise ValueError("| op | is undefined")
        if op == "succ" and T is UNIT:
            return LinComb.basis(U)
        if op == "prec" and U is UNIT:
            return LinComb.basis(T)
        return LinComb.zero

    def _three(self, a: int, w: int, left, right, order: str) -> list:
        """The (succ, prec, circ) expansion with types (a->w | a<-w | a.w).

        ``order == "left"`` reads ``a`` as the left type index, so the
        product indices are a|>w, a<|w, a*w; ``"right"`` reads w op a.
        """
        t = self.t
        if order == "left":
            x, y = a, w
        else:
            x, y = w, a
        return [
            (t.right_arrow[x][y], self.product("succ", t.rtri[x][y], left, right)),
            (t.left_arrow[x][y], self.product("prec", t.ltri[x][y], left, right)),
            (t.dot[x][y], self.product("circ", t.star[x][y], left, right)),
        ]

    def _prec(self, w, T: Vertex, U: Vertex) -> LinComb:
        last = T.children[-1]
        if isinstance(last, Leaf):
            # Case 1
            return LinComb.basis(Vertex(T.children[:-1] + (set_leftmost_type(U, w),), T.angles))
        # Case 2
        a = left_type(last)
        inner = strip_left(last)
        pieces = []
        for ty, comb in self._three(a, w, inner, U, "left"):
            pieces.append((1, comb.map_keys(lambda S, ty=ty: set_leftmost_type(S, ty))))
        return _graft_last(T, accumulate(pieces))

    def _succ(self, w, T: Vertex, U: Vertex) -> LinComb:
        first = U.children[0]
        if isinstance(first, Leaf):
            # Case 3
            return LinComb.basis(Vertex((set_rightmost_type(T, w),) + U.children[1:], U.angles))
        # Case 4
        b = right_type(first)
        inner = strip_right(first)
        pieces = []
        for ty, comb in self._three(b, w, T, inner, "right"):
            pieces.append((1, comb.map_keys(lambda S, ty=ty: set_rightmost_type(S, ty))))
        return _graft_first(U, accumulate(pieces))

    def _circ(self, w, T: Vertex, U: Vertex) -> LinComb:
        first = T.children[0]
        if isinstance(first, Leaf):
            if len(T.children) == 2:
                second = T.children[1]
                if isinstance(second, Leaf):
                    # Case 5
                    u1 = U.children[0]
                    u1 = Leaf(w) if isinstance(u1, Leaf) else set_leftmost_type(u1, w)
                    return LinComb.basis(
                        Vertex((LEAF, u1) + U.children[1:], T.angles + U.angles)
                    )
                # Case 6
                a = left_type(second)
                x = corolla(T.angles[0])
                inner = self.product("succ", a, strip_left(second), U)
                return accumulate((c, self.product("circ", w, x, S)) for S, c in inner.items())
            # Case 7
            second = T.children[1]
            a = left_type(second)
            x = corolla(T.angles[0])
            rest = Vertex((strip_left(second),) + T.children[2:], T.angles[1:])
            inner = self.product("circ", w, rest, U)
            return accumulate((c, self.product("circ", a, x, S)) for S, c in inner.items())
        # Case 8
        a = right_type(first)
        head = strip_right(first)
        rest = Vertex((LEAF,) + T.children[1:], T.angles)
        inner = self.product("circ", w, rest, U)
        return accumulate((c, self.product("succ", a, head, S)) for S, c in inner.items())


_PRODUCTS: dict = {}


def products_for(t: OmegaTable) -> TreeProducts:
    p = _PRODUCTS.get(t)
    if p is None:
        p = _PRODUCTS[t] = TreeProducts(t)
    return p


def _check_op(op: str, w: int, t: OmegaTable):
    if op not in OPS:
        raise ValueError(f"unknown product {op!r}; choose from prec, succ, circ")
    if not (isinstance(w, int) and 0 <= w < t.size):
        raise ValueError(f"Omega index {w!r} out of range 0..{t.size - 1}")


def _as_comb(x) -> LinComb:
    if isinstance(x, LinComb):
        return x
    if isinstance(x, Vertex):
        return LinComb.basis(x)
    raise TypeError(f"expected a tree or a combination of trees, got {type(x).__name__}")


def tree_product(op: str, w: int, t: OmegaTable, L, R) -> LinComb:
    """``L op_w R`` for trees or tree combinations; either side may be :data:`UNIT`."""
    _check_op(op, w, t)
    P = products_for(t)
    if L is UNIT and R is UNIT:
        raise ValueError("| op | is undefined")
    if L is UNIT or R is UNIT:
        return _unit_side(P, op, w, L, R)
    return extend_bilinear(lambda T, U: P.product(op, w, T, U), _as_comb(L), _as_comb(R))


def _unit_side(P, op, w, L, R) -> LinComb:
    if L is UNIT:
        return accumulate((c, P.product(op, w, UNIT, U)) for U, c in _as_comb(R).items())
    return accumulate((c, P.product(op, w, T, UNIT)) for T, c in _as_comb(L).items())


def combo_product(a: Mapping, b: Mapping, c: Mapping, t: OmegaTable, L, R) -> LinComb:
    """sum_w a_w (L prec_w R) + b_w (L circ_w R) + c_w (L succ_w R)."""
    pieces = []
    for coeffs, op in ((a, "prec"), (b, "circ"), (c, "succ")):
        for w, v in coeffs.items():
            v = Fraction(v)
            if v:
                pieces.append((v, tree_product(op, w, t, L, R)))
    return accumulate(pieces)


def evaluate(T: Vertex, target, f: Callable | Mapping):
    """The morphism from trees into ``target`` extending ``x -> f(x)`` on corollas.

    ``target`` provides ``prec/succ/circ(w, a, b)`` and ``table``.
    """
    get = f.__getitem__ if isinstance(f, Mapping) else f
    memo: dict = {}

    def ev(S: Vertex):
        hit = memo.get(S)
        if hit is not None:
            return hit
        first = S.children[0]
        if isinstance(first, Leaf):
            if len(S.children) == 2:
                second = S.children[1]
                if isinstance(second, Leaf):
                    out = get(S.angles[0])
                else:
                    out = target.prec(left_type(second), get(S.angles[0]), ev(strip_left(second)))
            else:
                second = S.children[1]
                rest = Vertex((strip_left(second),) + S.children[2:], S.angles[1:])
                out = target.circ(left_type(second), get(S.angles[0]), ev(rest))
        else:
            rest = Vertex((LEAF,) + S.children[1:], S.angles)
            out = target.succ(right_type(first), ev(strip_right(first)), ev(rest))
        memo[S] = out
        return out

    return ev(T)


def evaluate_comb(comb: LinComb, target, f):
    """Linear extension of :func:`evaluate`."""
    out = target.zero()
    for T, c in comb.sorted_items():
        out = target.add(out, target.scale(c, evaluate(T, target, f)))
    return out



class FreeTridend(TridendImpl):
    """Trees as an Omega-tridendriform algebra; elements are tree combinations."""

    def __init__(self, t: OmegaTable):
        self.table = t
        self._P = products_for(t)

    def _bilinear(self, op, w, a, b) -> LinComb:
        return extend_bilinear(lambda T, U: self._P.product(op, w, T, U), a, b)

    def prec(self, w, a, b):
        return self._bilinear("prec", w, a, b)

    def succ(self, w, a, b):
        return self._bilinear("succ", w, a, b)

    def circ(self, w, a, b):
        return self._bilinear("circ", w, a, b)

    def zero(self):
        return LinComb.zero

    def scale(self, c, a):
        return scale(c, a)

    def equal(self, a, b) -> bool:
        return a == b

    def render(self, a) -> str:
        return a.render(render) if isinstance(a, LinComb) else render(a)

    def generator(self, x) -> LinComb:
        return LinComb.basis(corolla(x))
