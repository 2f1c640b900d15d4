"""Matching associative algebras and Omega-typed words.

A typed word ``a0 :w1 a1 :w2 a2`` alternates basis letters of a matching
algebra with Omega types.  The three products are the quasi-shuffle style
recursions on the first letters; a ``circ`` merges two letters with the
matching product and expands the result over the algebra basis.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable, Mapping, NamedTuple, Optional, Sequence

from .axioms import LinearTridend, TridendImpl
from .exact import LinComb, accumulate, as_rational, format_rational
from .omega import AxiomReport, OmegaTable, Violation


class TypedWord(NamedTuple):
    letters: tuple
    types: tuple = ()

    def sort_key(self):
        return (len(self.letters), render_word(self))

    @property
    def length(self) -> int:
        return len(self.letters)


def word(*items) -> TypedWord:
    """``word(a0, w1, a1, w2, a2)`` builds a0 :w1 a1 :w2 a2."""
    if len(items) % 2 == 0:
        raise ValueError("a typed word alternates letters and types and has odd length")
    return TypedWord(tuple(items[0::2]), tuple(items[1::2]))


def render_letter(x) -> str:
    if isinstance(x, tuple):
        # free matching letters (g0, w1, g1, ...)
        parts = [str(x[0])]
        for i in range(1, len(x), 2):
            parts.append(f"*{x[i]}*{x[i + 1]}")
        return "(" + "".join(parts) + ")" if len(x) > 1 else str(x[0])
    return str(x)


def render_word(v: TypedWord) -> str:
    parts = [render_letter(v.letters[0])]
    for w, a in zip(v.types, v.letters[1:]):
        parts.append(f":{w} {render_letter(a)}")
    return " ".join(parts)


def parse_word(text: str, letter=int, omega=int) -> TypedWord:
    """Parse ``a0 :w1 a1 :w2 a2``; ``letter`` and ``omega`` convert tokens."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty word")
    letters, types = [], []
    expect_letter = True
    for pos, tok in enumerate(tokens):
        if expect_letter:
            if tok.startswith(":"):
                raise ValueError(f"token {pos}: expected a letter, found type {tok!r}")
            letters.append(letter(tok))
        else:
            if not tok.startswith(":") or len(tok) == 1:
                raise ValueError(f"token {pos}: expected ':type', found {tok!r}")
            types.append(omega(tok[1:]))
        expect_letter = not expect_letter
    if expect_letter:
        raise ValueError("word ends with a type")
    return TypedWord(tuple(letters), tuple(types))


# ---------------------------------------------------------------------------
# matching algebras

class MatchingAlgebra:
    """Finite-dimensional matching algebra: ``mult(w, i, j)`` is e_i *_w e_j."""

    def __init__(self, dim: int, star: Mapping, omega_size: Optional[int] = None):
        self.dim = dim
        self.star = {}
        for w, rows in star.items():
            if len(rows) != dim or any(len(r) != dim for r in rows):
                raise ValueError(f"star table for {w} must be {dim}x{dim}")
            self.star[int(w)] = [[r if isinstance(r, LinComb) else LinComb(r) for r in row] for row in rows]
        self.omega_size = omega_size if omega_size is not None else len(self.star)
        for w in range(self.omega_size):
            if w not in self.star:
                raise ValueError(f"missing star table for Omega element {w}")

    @property
    def basis(self) -> range:
        return range(self.dim)

    def mult(self, w: int, x, y) -> LinComb:
        return self.star[w][x][y]

    def mult_comb(self, w: int, a: LinComb, b: LinComb) -> LinComb:
        return accumulate((ca * cb, self.mult(w, x, y)) for x, ca in a.items() for y, cb in b.items())

    def is_symmetric(self) -> bool:
        return all(self.mult(w, x, y) == self.mult(w, y, x)
                   for w in self.star for x in self.basis for y in self.basis)

    @classmethod
    def scaled_pointwise(cls, dim: int, weights: Sequence) -> "MatchingAlgebra":
        """k^dim with e_i *_w e_j = weights[w] * [i == j] e_i."""
        star = {}
        for w, lam in enumerate(weights):
            lam = as_rational(lam)
            star[w] = [[LinComb({i: lam}) if i == j else LinComb.zero for j in range(dim)]
                       for i in range(dim)]
        return cls(dim, star)

    @classmethod
    def constant(cls, dim: int, omega_size: int, mult: Sequence) -> "MatchingAlgebra":
        """All *_w equal to one associative structure ``mult[i][j]`` (LinComb data)."""
        rows = [[LinComb(m) for m in row] for row in mult]
        return cls(dim, {w: rows for w in range(omega_size)})

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "star": {str(w): [[[[format_rational(c), k] for k, c in cell.sorted_items()] for cell in row]
                              for row in rows] for w, rows in self.star.items()},
        }


def algebra_from_json(data: dict) -> MatchingAlgebra:
    try:
        dim = int(data["dim"])
        star = {}
        for w, rows in data["star"].items():
            star[int(w)] = [[LinComb((int(k), as_rational(c)) for c, k in cell) for cell in row] for row in rows]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matching algebra JSON: {exc}") from None
    return MatchingAlgebra(dim, star)


def load_algebra(path) -> MatchingAlgebra:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return algebra_from_json(data)


class FreeMatchingAlgebra:
    """Letters are tuples (g0, w1, g1, ...); x *_w y concatenates with w in between.

    This is the free (non-commutative) matching algebra on the generators and
    is associative on the nose.
    """

    def __init__(self, generators: Sequence, omega_size: int):
        self.generators = tuple(generators)
        self.omega_size = omega_size

    @property
    def basis(self) -> list:
        return [(g,) for g in self.generators]

    def mult(self, w: int, x: tuple, y: tuple) -> LinComb:
        return LinComb.basis(x + (w,) + y)

    def mult_comb(self, w, a, b):
        return accumulate((ca * cb, self.mult(w, x, y)) for x, ca in a.items() for y, cb in b.items())


def check_matching(alg, letters: Optional[Sequence] = None) -> AxiomReport:
    """(x *_a y) *_b z = x *_a (y *_b z) on all basis triples and all (a, b)."""
    letters = list(alg.basis if letters is None else letters)
    report = AxiomReport(checked=("matching",))
    omegas = range(alg.omega_size)
    for x, y, z in itertools.product(letters, repeat=3):
        for a, b in itertools.product(omegas, repeat=2):
            lhs = alg.mult_comb(b, alg.mult(a, x, y), LinComb.basis(z))
            rhs = alg.mult_comb(a, LinComb.basis(x), alg.mult(b, y, z))
            if lhs != rhs:
                report.violations.append(
                    Violation("matching", (x, y, z, a, b), lhs.render(), rhs.render(),
                              "(x *_a y) *_b z = x *_a (y *_b z)")
                )
    return report


# ---------------------------------------------------------------------------
# word products

def _prefix(letter, ty, comb: LinComb, coeff=1) -> dict:
    return {TypedWord((letter,) + v.letters, (ty,) + v.types): coeff * c for v, c in comb.items()}


class WordAlgebra(LinearTridend):
    """sh+(A): typed words over ``alg`` with the three recursive products."""

    def __init__(self, t: OmegaTable, alg):
        super().__init__(t)
        if alg.omega_size != t.size:
            raise ValueError(f"algebra has {alg.omega_size} products but Omega has {t.size} elements")
        self.alg = alg

    def render_key(self, key) -> str:
        return render_word(key)

    def letter(self, x) -> LinComb:
        return LinComb.basis(TypedWord((x,), ()))

    def _three(self, x, y, left: TypedWord, right: TypedWord):
        t = self.table
        return (
            (t.right_arrow[x][y], self._cached("succ", t.rtri[x][y], left, right)),
            (t.left_arrow[x][y], self._cached("prec", t.ltri[x][y], left, right)),
            (t.dot[x][y], self._cached("circ", t.star[x][y], left, right)),
        )

    def basis_product(self, op: str, w: int, a: TypedWord, b: TypedWord) -> LinComb:
        if op == "prec":
            if len(a.letters) == 1:
                return LinComb.basis(TypedWord(a.letters + b.letters, (w,) + b.types))
            a1, al, rest = a.letters[0], a.types[0], TypedWord(a.letters[1:], a.types[1:])
            out: dict = {}
            for ty, comb in self._three(al, w, rest, b):
                _merge(out, _prefix(a1, ty, comb))
            return LinComb._wrap(out)
        if op == "succ":
            if len(b.letters) == 1:
                return LinComb.basis(TypedWord(b.letters + a.letters, (w,) + a.types))
            b1, be, rest = b.letters[0], b.types[0], TypedWord(b.letters[1:], b.types[1:])
            out = {}
            for ty, comb in self._three(w, be, a, rest):
                _merge(out, _prefix(b1, ty, comb))
            return LinComb._wrap(out)
        if op == "circ":
            merged = self.alg.mult(w, a.letters[0], b.letters[0])
            la, lb = len(a.letters), len(b.letters)
            out = {}
            if la == 1 and lb == 1:
                for x, c in merged.items():
                    _merge(out, {TypedWord((x,), ()): c})
            elif la == 1 or lb == 1:
                longer = b if la == 1 else a
                tail = TypedWord(longer.letters[1:], longer.types[1:])
                for x, c in merged.items():
                    _merge(out, _prefix(x, longer.types[0], LinComb.basis(tail), c))
            else:
                ra = TypedWord(a.letters[1:], a.types[1:])
                rb = TypedWord(b.letters[1:], b.types[1:])
                for ty, comb in self._three(a.types[0], b.types[0], ra, rb):
                    for x, c in merged.items():
                        _merge(out, _prefix(x, ty, comb, c))
            return LinComb._wrap(out)
        raise ValueError(f"unknown product {op!r}")


def _merge(out: dict, piece: dict):
    for k, v in piece.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)


def word_product(op: str, w: int, t: OmegaTable, alg, a, b) -> LinComb:
    """``a op_w b``; either side may be the empty word ``None`` (the unit 1)."""
    if not (isinstance(w, int) and 0 <= w < t.size):
        raise ValueError(f"Omega index {w!r} out of range 0..{t.size - 1}")
    if a is None or b is None:
        if a is None and b is None:
            raise ValueError("1 op 1 is undefined")
        other = _comb(b if a is None else a)
        if (op == "succ" and a is None) or (op == "prec" and b is None):
            return other
        return LinComb.zero
    A = _algebra_for(t, alg)
    return A.product(op, w, _comb(a), _comb(b))


def _comb(x) -> LinComb:
    if isinstance(x, LinComb):
        return x
    if isinstance(x, TypedWord):
        return LinComb.basis(x)
    raise TypeError(f"expected a typed word or combination, got {type(x).__name__}")


_ALGEBRAS: dict = {}


def _algebra_for(t, alg) -> WordAlgebra:
    key = (t, id(alg))
    A = _ALGEBRAS.get(key)
    if A is None or A.alg is not alg:
        A = _ALGEBRAS[key] = WordAlgebra(t, alg)
    return A


@lru_cache(maxsize=None)
def quasi_shuffle_term_count(m: int, n: int) -> int:
    """Delannoy numbers D(m, n)."""
    if m < 0 or n < 0:
        raise ValueError("lengths must be nonnegative")
    if m == 0 or n == 0:
        return 1
    return (quasi_shuffle_term_count(m - 1, n) + quasi_shuffle_term_count(m, n - 1)
            + quasi_shuffle_term_count(m - 1, n - 1))


def all_words(alg_letters: Sequence, omega_size: int, length: int) -> list:
    out = []
    for letters in itertools.product(alg_letters, repeat=length):
        for types in itertools.product(range(omega_size), repeat=length - 1):
            out.append(TypedWord(tuple(letters), tuple(types)))
    return out


# ---------------------------------------------------------------------------
# universal morphism

class MorphismError(ValueError):
    pass


def check_phi(alg, phi: Callable, target: TridendImpl, letters: Optional[Sequence] = None) -> Optional[tuple]:
    """Return a witness where phi(x *_w y) != phi(x) o_w phi(y), or None."""
    letters = list(alg.basis if letters is None else letters)
    for w in range(target.table.size):
        for x, y in itertools.product(letters, repeat=2):
            lhs = target.zero()
            for z, c in alg.mult(w, x, y).sorted_items():
                lhs = target.add(lhs, target.scale(c, phi(z)))
            rhs = target.circ(w, phi(x), phi(y))
            if not target.equal(lhs, rhs):
                return (w, x, y)
    return None


def universal_morphism(v, phi: Callable, target: TridendImpl, alg=None, verify: bool = True):
    """Phi(a1 :w a') = phi(a1) <_w Phi(a'), extended linearly."""
    if verify and alg is not None:
        bad = check_phi(alg, phi, target)
        if bad is not None:
            w, x, y = bad
            raise MorphismError(f"phi is not a matching morphism at w={w}, ({x}, {y})")
    memo: dict = {}

    def ev(u: TypedWord):
        hit = memo.get(u)
        if hit is not None:
            return hit
        if len(u.letters) == 1:
            out = phi(u.letters[0])
        else:
            out = target.prec(u.types[0], phi(u.letters[0]), ev(TypedWord(u.letters[1:], u.types[1:])))
        memo[u] = out
        return out

    if isinstance(v, TypedWord):
        return ev(v)
    out = target.zero()
    for u, c in _comb(v).sorted_items():
        out = target.add(out, target.scale(c, ev(u)))
    return out
