"""Exact rational coefficients and sparse formal linear combinations.

Coefficients are :class:`fractions.Fraction`, which is always stored in lowest
terms with a positive denominator.  A :class:`LinComb` maps basis keys to
nonzero coefficients; the empty combination is zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact coefficient")


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def sort_key(key):
    """Total order on basis keys.

    Keys providing a ``sort_key()`` method (trees, words) are ordered by it;
    tuples are ordered componentwise with the same rule.
    """
    if hasattr(key, "sort_key"):
        return (1, key.sort_key())
    if isinstance(key, tuple):
        return (2, tuple(sort_key(k) for k in key))
    if isinstance(key, (int, Fraction)):
        return (0, key, "")
    return (0, 0, str(key))


class LinComb:
    """An immutable sparse linear combination with exact coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        for key, coeff in items:
            c = as_rational(coeff)
            if c:
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "LinComb":
        # terms must already be clean (no zeros, Fraction/int values)
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, key) -> "LinComb":
        return cls._wrap({key: Fraction(1)})

    zero: "LinComb"

    # mapping-like access
    def __getitem__(self, key) -> Fraction:
        return Fraction(self._terms.get(key, 0))

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    # arithmetic
    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LinComb._wrap(out)

    def __neg__(self) -> "LinComb":
        return LinComb._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar) -> "LinComb":
        return scale(scalar, self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_keys(self, f: Callable) -> "LinComb":
        """Apply ``f`` to every key, merging coefficients on collisions."""
        out: dict = {}
        for k, c in self._terms.items():
            nk = f(k)
            s = out.get(nk, 0) + c
            if s:
                out[nk] = s
            else:
                out.pop(nk, None)
        return LinComb._wrap(out)

    def render(self, fmt: Callable = str) -> str:
        if not self._terms:
            return "0"
        parts = [f"{format_rational(Fraction(c))}*{fmt(k)}" for k, c in self.sorted_items()]
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LinComb({self.render()})"


LinComb.zero = LinComb._wrap({})


def lincomb_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def scale(c, a: LinComb) -> LinComb:
    c = as_rational(c)
    if not c:
        return LinComb.zero
    if c == 1:
        return a
    return LinComb._wrap({k: c * v for k, v in a.items()})


lincomb_scale = scale


def accumulate(pieces: Iterable[tuple[object, LinComb]]) -> LinComb:
    """Sum ``c * comb`` over ``(c, comb)`` pairs with a single dict."""
    out: dict = {}
    for c, comb in pieces:
        for k, v in comb.items():
            s = out.get(k, 0) + c * v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return LinComb._wrap(out)


def extend_bilinear(f: Callable, a: LinComb, b: LinComb) -> LinComb:
    """Sum of coeff_a * coeff_b * f(key_a, key_b) over all term pairs."""
    if not a or not b:
        return LinComb.zero
    return accumulate(
        (ca * cb, f(ka, kb)) for ka, ca in a.items() for kb, cb in b.items()
    )


lincomb_extend_bilinear = extend_bilinear
