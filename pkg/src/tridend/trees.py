"""Planar Schröder trees with angle labels and typed internal leaves.

A tree is a :class:`Vertex` whose ``children`` are leaves or vertices and
whose ``angles`` label the gaps between consecutive children.  Every leaf
except the globally leftmost and rightmost one carries a type; the two
extreme leaves carry ``None``.

Text grammar::

    node  := "(" item {" " item} ")"     items alternate child, angle, child
    child := "|" | "|:" IDENT | node
    angle := IDENT

so the 3-leaf corolla with angles x, y and middle type a is ``(| x |:a y |)``.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional, Sequence, Union


class Leaf(NamedTuple):
    type: object = None

    def sort_key(self):
        return render(self)


class Vertex(NamedTuple):
    children: tuple
    angles: tuple

    def sort_key(self):
        return render(self)


Tree = Union[Leaf, Vertex]
LEAF = Leaf(None)


class TreeError(ValueError):
    """Invalid tree data or text; ``problems`` lists every issue found."""

    def __init__(self, problems, position: Optional[int] = None):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        self.position = position
        msg = "; ".join(self.problems)
        if position is not None:
            msg = f"at position {position}: {msg}"
        super().__init__(msg)


class TreeStats(NamedTuple):
    leaves: int
    internal_leaves: int
    angles: int


def corolla(*angles, types: Sequence = ()) -> Vertex:
    """Single vertex with the given angle labels; ``types`` types the middle leaves."""
    if not angles:
        raise TreeError("a corolla needs at least one angle")
    types = list(types) or [None] * (len(angles) - 1)
    if len(types) != len(angles) - 1:
        raise TreeError("a corolla with k angles has k-1 internal leaves")
    children = (LEAF,) + tuple(Leaf(w) for w in types) + (LEAF,)
    return Vertex(children, tuple(angles))


# ---------------------------------------------------------------------------
# structural queries

def leaves(T: Tree) -> list:
    """Leaf edges in planar order."""
    if isinstance(T, Leaf):
        return [T]
    out = []
    for c in T.children:
        out.extend(leaves(c))
    return out


def angle_labels(T: Tree) -> list:
    """Angle labels in planar (in-order) traversal."""
    if isinstance(T, Leaf):
        return []
    out = []
    for i, c in enumerate(T.children):
        out.extend(angle_labels(c))
        if i < len(T.angles):
            out.append(T.angles[i])
    return out


@lru_cache(maxsize=None)
def leaf_count(T: Tree) -> int:
    if isinstance(T, Leaf):
        return 1
    return sum(leaf_count(c) for c in T.children)


def stats(T: Tree) -> TreeStats:
    n = leaf_count(T)
    return TreeStats(n, sum(1 for lf in leaves(T)[1:-1] if lf.type is not None), len(angle_labels(T)))


def degree(T: Tree) -> int:
    return leaf_count(T) - 1


def left_type(T: Tree):
    """l(T): the type of the leftmost leaf edge."""
    while isinstance(T, Vertex):
        T = T.children[0]
    return T.type


def right_type(T: Tree):
    """r(T): the type of the rightmost leaf edge."""
    while isinstance(T, Vertex):
        T = T.children[-1]
    return T.type


def set_leftmost_type(T: Tree, w) -> Tree:
    if isinstance(T, Leaf):
        return Leaf(w)
    return Vertex((set_leftmost_type(T.children[0], w),) + T.children[1:], T.angles)


def set_rightmost_type(T: Tree, w) -> Tree:
    if isinstance(T, Leaf):
        return Leaf(w)
    return Vertex(T.children[:-1] + (set_rightmost_type(T.children[-1], w),), T.angles)


def strip_left(T: Tree) -> Tree:
    return set_leftmost_type(T, None)


def strip_right(T: Tree) -> Tree:
    return set_rightmost_type(T, None)


# ---------------------------------------------------------------------------
# validation

def _problems(T, omega_size: Optional[int]) -> list:
    problems = []

    def walk(node, path):
        if isinstance(node, Leaf):
            return
        if not isinstance(node, Vertex):
            problems.append(f"{path}: not a tree node: {node!r}")
            return
        if len(node.children) < 2:
            problems.append(f"{path}: vertex has {len(node.children)} child(ren), needs at least 2")
        if len(node.angles) != len(node.children) - 1:
            problems.append(
                f"{path}: {len(node.children)} children need {len(node.children) - 1} angles, got {len(node.angles)}"
            )
        for i, c in enumerate(node.children):
            walk(c, f"{path}.{i}")

    walk(T, "root")
    if problems:
        return problems
    if isinstance(T, Leaf):
        return ["a bare leaf is not a tree"]
    lvs = leaves(T)
    if lvs[0].type is not None:
        problems.append("leftmost leaf edge must be untyped")
    if lvs[-1].type is not None:
        problems.append("rightmost leaf edge must be untyped")
    for i, lf in enumerate(lvs[1:-1], start=1):
        if lf.type is None:
            problems.append(f"internal leaf {i} is missing a type")
        elif omega_size is not None and not (isinstance(lf.type, int) and 0 <= lf.type < omega_size):
            problems.append(f"internal leaf {i} has type {lf.type!r} outside Omega")
    return problems


def validate(candidate, omega_size: Optional[int] = None) -> Vertex:
    """Return ``candidate`` as a tree or raise :class:`TreeError` listing every violation."""
    T = _coerce(candidate)
    problems = _problems(T, omega_size)
    if problems:
        raise TreeError(problems)
    return T


def is_valid(candidate, omega_size: Optional[int] = None) -> bool:
    try:
        validate(candidate, omega_size)
    except TreeError:
        return False
    return True


def _coerce(raw):
    """Accept Leaf/Vertex or plain nested data: dicts with children/angles, {"leaf": type}."""
    if isinstance(raw, (Leaf, Vertex)):
        if isinstance(raw, Vertex):
            return Vertex(tuple(_coerce(c) for c in raw.children), tuple(raw.angles))
        return raw
    if isinstance(raw, dict):
        if "children" in raw:
            return Vertex(tuple(_coerce(c) for c in raw["children"]), tuple(raw.get("angles", ())))
        if "leaf" in raw:
            return Leaf(raw["leaf"])
    if raw is None:
        return LEAF
    raise TreeError(f"cannot interpret {raw!r} as a tree")


# ---------------------------------------------------------------------------
# text format

_IDENT = re.compile(r"[A-Za-z0-9_]+")


def _fmt_type(w, names) -> str:
    if names is not None and isinstance(w, int):
        return str(names[w])
    return str(w)


def render(T: Tree, t=None) -> str:
    """Canonical text; Omega types use the table's names when ``t`` has them."""
    names = getattr(t, "names", None) if t is not None else None
    return _render(T, names)


def _render(T, names) -> str:
    if isinstance(T, Leaf):
        return "|" if T.type is None else "|:" + _fmt_type(T.type, names)
    parts = []
    for i, c in enumerate(T.children):
        parts.append(_render(c, names))
        if i < len(T.angles):
            parts.append(str(T.angles[i]))
    return "(" + " ".join(parts) + ")"


def parse(text: str, t=None) -> Vertex:
    """Parse and validate a tree.

    Types are resolved through ``t.index`` when a table is given; otherwise
    numeric identifiers become ints and others stay strings.
    """
    p = _Parser(text, t)
    p.skip()
    tree = p.node()
    p.skip()
    if p.pos != len(text):
        raise TreeError(f"unexpected trailing input {text[p.pos:p.pos + 10]!r}", p.pos)
    return validate(tree, t.size if t is not None else None)


class _Parser:
    def __init__(self, text, t):
        self.text = text
        self.pos = 0
        self.t = t

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise TreeError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def ident(self) -> str:
        m = _IDENT.match(self.text, self.pos)
        if not m:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise TreeError(f"expected identifier, found {found}", self.pos)
        self.pos = m.end()
        return m.group()

    def omega(self, label: str, at: int):
        if self.t is not None:
            try:
                return self.t.index(label)
            except ValueError as exc:
                raise TreeError(str(exc), at) from None
        return int(label) if label.isdigit() else label

    def child(self):
        ch = self.peek()
        if ch == "(":
            return self.node()
        if ch == "|":
            self.pos += 1
            if self.peek() == ":":
                self.pos += 1
                at = self.pos
                return Leaf(self.omega(self.ident(), at))
            return LEAF
        found = repr(ch) if ch else "end of input"
        raise TreeError(f"expected '|' or '(', found {found}", self.pos)

    def node(self) -> Vertex:
        self.expect("(")
        children, angles = [], []
        self.skip()
        children.append(self.child())
        while True:
            self.skip()
            if self.peek() == ")":
                self.pos += 1
                break
            angles.append(self.ident())
            self.skip()
            children.append(self.child())
        return Vertex(tuple(children), tuple(angles))


# ---------------------------------------------------------------------------
# enumeration and counting

class ResourceLimit(RuntimeError):
    pass


DEFAULT_MAX_DEGREE = 7


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


@lru_cache(maxsize=None)
def shapes(k: int) -> tuple:
    """Undecorated Schröder trees with k >= 2 leaves (leaves untyped, angles None)."""
    out = []
    for arity in range(2, k + 1):
        for comp in _compositions(k, arity):
            options = [(LEAF,) if p == 1 else shapes(p) for p in comp]
            for kids in itertools.product(*options):
                out.append(Vertex(tuple(kids), (None,) * (arity - 1)))
    return tuple(out)


def _decorate(shape: Tree, angles: Iterator, types: Iterator, first: bool, last: bool) -> Tree:
    if isinstance(shape, Leaf):
        return LEAF if (first or last) else Leaf(next(types))
    kids, angs = [], []
    n = len(shape.children)
    for i, c in enumerate(shape.children):
        kids.append(_decorate(c, angles, types, first and i == 0, last and i == n - 1))
        if i < n - 1:
            angs.append(next(angles))
    return Vertex(tuple(kids), tuple(angs))


def enumerate_trees(n: int, X: Sequence, omega, max_degree: int = DEFAULT_MAX_DEGREE) -> list:
    """All trees with n+1 leaves, angles from X and internal types from Omega.

    ``omega`` is an OmegaTable or an integer size.  Output is sorted by
    canonical text.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_degree:
        raise ResourceLimit(f"refusing to enumerate degree {n} > max_degree {max_degree}")
    q = omega if isinstance(omega, int) else omega.size
    out = []
    for shape in shapes(n + 1):
        for angs in itertools.product(X, repeat=n):
            for tys in itertools.product(range(q), repeat=n - 1):
                out.append(_decorate(shape, iter(angs), iter(tys), True, True))
    out.sort(key=render)
    return out


def trees_up_to(max_leaves: int, X: Sequence, omega) -> dict:
    """Map leaf count -> list of trees, for 2 <= leaves <= max_leaves."""
    return {k: enumerate_trees(k - 1, X, omega, max_degree=max(k - 1, DEFAULT_MAX_DEGREE))
            for k in range(2, max_leaves + 1)}


@lru_cache(maxsize=None)
def schroeder(n: int) -> int:
    """Number of undecorated Schröder trees with n+1 leaves."""
    # forests[j][k]: ordered sequences of j children with k leaves total
    k_max = n + 1
    tree = [0] * (k_max + 1)
    item = [0] * (k_max + 1)
    item[1] = 1
    for k in range(2, k_max + 1):
        seq = [[0] * (k + 1) for _ in range(k + 1)]
        seq[0][0] = 1
        for j in range(1, k + 1):
            for total in range(1, k + 1):
                seq[j][total] = sum(seq[j - 1][total - p] * item[p] for p in range(1, total + 1))
        tree[k] = sum(seq[j][k] for j in range(2, k + 1))
        item[k] = tree[k]
    return tree[k_max]


def count(n: int, x_size: int, omega_size: int) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    return schroeder(n) * x_size ** n * omega_size ** (n - 1)
