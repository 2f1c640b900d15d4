"""Finite sets with six binary operations and their axiom systems.

An :class:`OmegaTable` stores the six operations

    left_arrow  (<-)    right_arrow (->)
    ltri        (<|)    rtri        (|>)
    dot         (.)     star        (*)

as n x n tables of indices in ``range(n)``; ``table[a][b]`` is ``a op b``.
The checkers evaluate every identity exhaustively over all triples, using
numpy fancy indexing so that n up to a few dozen stays cheap.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np

OPS = ("left_arrow", "right_arrow", "ltri", "rtri", "dot", "star")
SYMBOLS = {
    "left_arrow": "<-",
    "right_arrow": "->",
    "ltri": "<|",
    "rtri": "|>",
    "dot": ".",
    "star": "*",
}


class TableError(ValueError):
    """Raised for malformed operation tables."""


def _freeze(rows) -> tuple:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class OmegaTable:
    size: int
    left_arrow: tuple
    right_arrow: tuple
    ltri: tuple
    rtri: tuple
    dot: tuple
    star: tuple
    names: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise TableError(f"size must be a positive integer, got {self.size!r}")
        for op in OPS:
            rows = getattr(self, op)
            if len(rows) != self.size:
                raise TableError(f"table '{op}' has {len(rows)} rows, expected {self.size}")
            for i, row in enumerate(rows):
                if len(row) != self.size:
                    raise TableError(
                        f"table '{op}' row {i} has {len(row)} entries, expected {self.size}"
                    )
                for j, v in enumerate(row):
                    if not isinstance(v, int) or not 0 <= v < self.size:
                        raise TableError(f"table '{op}' entry [{i}][{j}] = {v!r} is out of range")
        if self.names is not None and len(self.names) != self.size:
            raise TableError("names must list one label per element")

    @classmethod
    def from_tables(cls, size: int, names=None, **tables) -> "OmegaTable":
        missing = [op for op in OPS if op not in tables]
        if missing:
            raise TableError(f"missing tables: {', '.join(missing)}")
        try:
            frozen = {op: _freeze(tables[op]) for op in OPS}
        except (TypeError, ValueError) as exc:
            raise TableError(f"table entries must be integers: {exc}") from None
        return cls(size, names=tuple(names) if names is not None else None, **frozen)

    # element-level operations
    def larrow(self, a: int, b: int) -> int:
        return self.left_arrow[a][b]

    def rarrow(self, a: int, b: int) -> int:
        return self.right_arrow[a][b]

    def lt(self, a: int, b: int) -> int:
        return self.ltri[a][b]

    def rt(self, a: int, b: int) -> int:
        return self.rtri[a][b]

    def dt(self, a: int, b: int) -> int:
        return self.dot[a][b]

    def st(self, a: int, b: int) -> int:
        return self.star[a][b]

    @property
    def elements(self) -> range:
        return range(self.size)

    def name(self, w: int) -> str:
        return str(self.names[w]) if self.names is not None else str(w)

    def index(self, label) -> int:
        """Resolve an element given by index or declared name."""
        if isinstance(label, int):
            w = label
        elif self.names is not None and str(label) in [str(n) for n in self.names]:
            w = [str(n) for n in self.names].index(str(label))
        else:
            try:
                w = int(label)
            except (TypeError, ValueError):
                raise TableError(f"unknown Omega element {label!r}") from None
        if not 0 <= w < self.size:
            raise TableError(f"Omega element {label!r} out of range 0..{self.size - 1}")
        return w

    def arrays(self) -> dict:
        return {op: np.array(getattr(self, op), dtype=np.intp) for op in OPS}

    def to_json(self) -> dict:
        out = {"size": self.size}
        for op in OPS:
            out[op] = [list(r) for r in getattr(self, op)]
        if self.names is not None:
            out["names"] = list(self.names)
        return out


def table_from_json(data: dict) -> OmegaTable:
    if not isinstance(data, dict):
        raise TableError("table JSON must be an object")
    if "size" not in data:
        raise TableError("table JSON is missing 'size'")
    tables = {op: data.get(op) for op in OPS if op in data}
    return OmegaTable.from_tables(data["size"], names=data.get("names"), **tables)


def load_table(path) -> OmegaTable:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        return table_from_json(data)
    except TableError as exc:
        raise TableError(f"{path}: {exc}") from None


def dump_table(t: OmegaTable) -> str:
    return json.dumps(t.to_json())


# ---------------------------------------------------------------------------
# axioms

@dataclass(frozen=True)
class Axiom:
    label: str
    text: str
    lhs: Callable
    rhs: Callable


def _ax(label, text, lhs, rhs):
    return Axiom(label, text, lhs, rhs)


# o is a dict of arrays; a, b, c are broadcast index arrays
DIASSOCIATIVE = (
    _ax("D1", "(a <- b) <- c = a <- (b <- c)",
        lambda o, a, b, c: o["left_arrow"][o["left_arrow"][a, b], c],
        lambda o, a, b, c: o["left_arrow"][a, o["left_arrow"][b, c]]),
    _ax("D2", "a <- (b <- c) = a <- (b -> c)",
        lambda o, a, b, c: o["left_arrow"][a, o["left_arrow"][b, c]],
        lambda o, a, b, c: o["left_arrow"][a, o["right_arrow"][b, c]]),
    _ax("D3", "(a -> b) <- c = a -> (b <- c)",
        lambda o, a, b, c: o["left_arrow"][o["right_arrow"][a, b], c],
        lambda o, a, b, c: o["right_arrow"][a, o["left_arrow"][b, c]]),
    _ax("D4", "(a -> b) -> c = (a <- b) -> c",
        lambda o, a, b, c: o["right_arrow"][o["right_arrow"][a, b], c],
        lambda o, a, b, c: o["right_arrow"][o["left_arrow"][a, b], c]),
    _ax("D5", "(a <- b) -> c = a -> (b -> c)",
        lambda o, a, b, c: o["right_arrow"][o["left_arrow"][a, b], c],
        lambda o, a, b, c: o["right_arrow"][a, o["right_arrow"][b, c]]),
)


def _L(o, x, y):
    return o["left_arrow"][x, y]


def _R(o, x, y):
    return o["right_arrow"][x, y]


def _lt(o, x, y):
    return o["ltri"][x, y]


def _rt(o, x, y):
    return o["rtri"][x, y]


def _dot(o, x, y):
    return o["dot"][x, y]


def _st(o, x, y):
    return o["star"][x, y]


EDS_EXTRA = (
    _ax("E1", "a |> (b <- c) = a |> b",
        lambda o, a, b, c: _rt(o, a, _L(o, b, c)),
        lambda o, a, b, c: _rt(o, a, b)),
    _ax("E2", "(a -> b) <| c = b <| c",
        lambda o, a, b, c: _lt(o, _R(o, a, b), c),
        lambda o, a, b, c: _lt(o, b, c)),
    _ax("E3", "(a <| b) <- ((a <- b) <| c) = a <| (b <- c)",
        lambda o, a, b, c: _L(o, _lt(o, a, b), _lt(o, _L(o, a, b), c)),
        lambda o, a, b, c: _lt(o, a, _L(o, b, c))),
    _ax("E4", "(a <| b) <| ((a <- b) <| c) = b <| c",
        lambda o, a, b, c: _lt(o, _lt(o, a, b), _lt(o, _L(o, a, b), c)),
        lambda o, a, b, c: _lt(o, b, c)),
    _ax("E5", "(a <| b) -> ((a <- b) <| c) = a <| (b -> c)",
        lambda o, a, b, c: _R(o, _lt(o, a, b), _lt(o, _L(o, a, b), c)),
        lambda o, a, b, c: _lt(o, a, _R(o, b, c))),
    _ax("E6", "(a <| b) |> ((a <- b) <| c) = b |> c",
        lambda o, a, b, c: _rt(o, _lt(o, a, b), _lt(o, _L(o, a, b), c)),
        lambda o, a, b, c: _rt(o, b, c)),
    _ax("E7", "(a |> (b -> c)) <- (b |> c) = (a <- b) |> c",
        lambda o, a, b, c: _L(o, _rt(o, a, _R(o, b, c)), _rt(o, b, c)),
        lambda o, a, b, c: _rt(o, _L(o, a, b), c)),
    _ax("E8", "(a |> (b -> c)) <| (b |> c) = a <| b",
        lambda o, a, b, c: _lt(o, _rt(o, a, _R(o, b, c)), _rt(o, b, c)),
        lambda o, a, b, c: _lt(o, a, b)),
    _ax("E9", "(a |> (b -> c)) -> (b |> c) = (a -> b) |> c",
        lambda o, a, b, c: _R(o, _rt(o, a, _R(o, b, c)), _rt(o, b, c)),
        lambda o, a, b, c: _rt(o, _R(o, a, b), c)),
    _ax("E10", "(a |> (b -> c)) |> (b |> c) = a |> b",
        lambda o, a, b, c: _rt(o, _rt(o, a, _R(o, b, c)), _rt(o, b, c)),
        lambda o, a, b, c: _rt(o, a, b)),
)

ETS_EXTRA = (
    _ax("T1", "(a -> b) * c = b * c",
        lambda o, a, b, c: _st(o, _R(o, a, b), c),
        lambda o, a, b, c: _st(o, b, c)),
    _ax("T2", "(a -> b) . c = a -> (b . c)",
        lambda o, a, b, c: _dot(o, _R(o, a, b), c),
        lambda o, a, b, c: _R(o, a, _dot(o, b, c))),
    _ax("T3", "a |> b = a |> (b . c)",
        lambda o, a, b, c: _rt(o, a, b),
        lambda o, a, b, c: _rt(o, a, _dot(o, b, c))),
    _ax("T4", "(a <| b) * ((a <- b) <| c) = b * c",
        lambda o, a, b, c: _st(o, _lt(o, a, b), _lt(o, _L(o, a, b), c)),
        lambda o, a, b, c: _st(o, b, c)),
    _ax("T5", "(a <| b) . ((a <- b) <| c) = a <| (b . c)",
        lambda o, a, b, c: _dot(o, _lt(o, a, b), _lt(o, _L(o, a, b), c)),
        lambda o, a, b, c: _lt(o, a, _dot(o, b, c))),
    _ax("T6", "(a <- b) <- c = a <- (b . c)",
        lambda o, a, b, c: _L(o, _L(o, a, b), c),
        lambda o, a, b, c: _L(o, a, _dot(o, b, c))),
    _ax("T7", "(a |> (b -> c)) * (b |> c) = a * b",
        lambda o, a, b, c: _st(o, _rt(o, a, _R(o, b, c)), _rt(o, b, c)),
        lambda o, a, b, c: _st(o, a, b)),
    _ax("T8", "a -> (b -> c) = (a . b) -> c",
        lambda o, a, b, c: _R(o, a, _R(o, b, c)),
        lambda o, a, b, c: _R(o, _dot(o, a, b), c)),
    _ax("T9", "(a |> (b -> c)) . (b |> c) = (a . b) |> c",
        lambda o, a, b, c: _dot(o, _rt(o, a, _R(o, b, c)), _rt(o, b, c)),
        lambda o, a, b, c: _rt(o, _dot(o, a, b), c)),
    _ax("T10", "(a <- b) * c = a * (b -> c)",
        lambda o, a, b, c: _st(o, _L(o, a, b), c),
        lambda o, a, b, c: _st(o, a, _R(o, b, c))),
    _ax("T11", "(a <- b) . c = a . (b -> c)",
        lambda o, a, b, c: _dot(o, _L(o, a, b), c),
        lambda o, a, b, c: _dot(o, a, _R(o, b, c))),
    _ax("T12", "a <| b = b |> c",
        lambda o, a, b, c: _lt(o, a, b),
        lambda o, a, b, c: _rt(o, b, c)),
    _ax("T13", "a * b = a * (b <- c)",
        lambda o, a, b, c: _st(o, a, b),
        lambda o, a, b, c: _st(o, a, _L(o, b, c))),
    _ax("T14", "(a . b) <| c = b <| c",
        lambda o, a, b, c: _lt(o, _dot(o, a, b), c),
        lambda o, a, b, c: _lt(o, b, c)),
    _ax("T15", "(a . b) <- c = a . (b <- c)",
        lambda o, a, b, c: _L(o, _dot(o, a, b), c),
        lambda o, a, b, c: _dot(o, a, _L(o, b, c))),
    _ax("T16", "a * b = a * (b . c)",
        lambda o, a, b, c: _st(o, a, b),
        lambda o, a, b, c: _st(o, a, _dot(o, b, c))),
    _ax("T17", "(a . b) * c = b * c",
        lambda o, a, b, c: _st(o, _dot(o, a, b), c),
        lambda o, a, b, c: _st(o, b, c)),
    _ax("T18", "(a . b) . c = a . (b . c)",
        lambda o, a, b, c: _dot(o, _dot(o, a, b), c),
        lambda o, a, b, c: _dot(o, a, _dot(o, b, c))),
)

EDS_AXIOMS = DIASSOCIATIVE + EDS_EXTRA
ETS_AXIOMS = EDS_AXIOMS + ETS_EXTRA
AXIOMS_BY_LABEL = {ax.label: ax for ax in ETS_AXIOMS}


@dataclass(frozen=True)
class Violation:
    axiom_id: str
    witness: tuple
    lhs: object
    rhs: object
    text: str = ""

    def __str__(self):
        return f"{self.axiom_id} [{self.text}] fails at {self.witness}: lhs={self.lhs} rhs={self.rhs}"


@dataclass
class AxiomReport:
    """Outcome of an exhaustive identity check; ``passed`` iff no violations."""

    checked: tuple = ()
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def failed_axioms(self) -> list:
        seen = []
        for v in self.violations:
            if v.axiom_id not in seen:
                seen.append(v.axiom_id)
        return seen

    def first(self, axiom_id: str) -> Optional[Violation]:
        return next((v for v in self.violations if v.axiom_id == axiom_id), None)

    def summary(self) -> str:
        n_fail = len(self.failed_axioms())
        total = len(self.checked)
        return f"{'PASS' if self.passed else 'FAIL'} ({total - n_fail}/{total} axiom families)"

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checked": list(self.checked),
            "violations": [
                {"axiom_id": v.axiom_id, "equation": v.text, "witness": list(_jsonable(v.witness)),
                 "lhs": _jsonable(v.lhs), "rhs": _jsonable(v.rhs)}
                for v in self.violations
            ],
        }


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, (int, str, float, bool)) or x is None:
        return x
    if hasattr(x, "render"):
        return x.render()
    return str(x)


def _check(t: OmegaTable, axioms: Sequence[Axiom], max_witnesses: Optional[int] = None) -> AxiomReport:
    o = t.arrays()
    n = t.size
    a, b, c = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    report = AxiomReport(checked=tuple(ax.label for ax in axioms))
    for ax in axioms:
        lhs = np.broadcast_to(ax.lhs(o, a, b, c), a.shape)
        rhs = np.broadcast_to(ax.rhs(o, a, b, c), a.shape)
        bad = np.argwhere(lhs != rhs)
        if max_witnesses is not None:
            bad = bad[:max_witnesses]
        for i, j, k in bad:
            report.violations.append(
                Violation(ax.label, (int(i), int(j), int(k)), int(lhs[i, j, k]), int(rhs[i, j, k]), ax.text)
            )
    return report


def check_diassociative(t: OmegaTable, max_witnesses: Optional[int] = None) -> AxiomReport:
    return _check(t, DIASSOCIATIVE, max_witnesses)


def check_eds(t: OmegaTable, max_witnesses: Optional[int] = None) -> AxiomReport:
    return _check(t, EDS_AXIOMS, max_witnesses)


def check_ets(t: OmegaTable, max_witnesses: Optional[int] = None) -> AxiomReport:
    return _check(t, ETS_AXIOMS, max_witnesses)


def is_ets(t: OmegaTable) -> bool:
    return check_ets(t, max_witnesses=1).passed


# ---------------------------------------------------------------------------
# constructions

def _transpose(rows) -> tuple:
    return tuple(zip(*rows))


def opposite(t: OmegaTable) -> OmegaTable:
    """a <-op b = b -> a, a <|op b = b |> a, a ->op b = b <- a,
    a |>op b = b <| a, a *op b = b * a, a .op b = b . a."""
    return OmegaTable(
        t.size,
        left_arrow=_transpose(t.right_arrow),
        right_arrow=_transpose(t.left_arrow),
        ltri=_transpose(t.rtri),
        rtri=_transpose(t.ltri),
        dot=_transpose(t.dot),
        star=_transpose(t.star),
        names=t.names,
    )


def is_commutative(t: OmegaTable) -> bool:
    return t == opposite(t)


def left_projection(n: int) -> tuple:
    return tuple(tuple(a for _ in range(n)) for a in range(n))


def right_projection(n: int) -> tuple:
    return tuple(tuple(range(n)) for _ in range(n))


def constant(n: int, value: int = 0) -> tuple:
    return tuple(tuple(value for _ in range(n)) for _ in range(n))


BUILTINS = ("trivial", "projections_A", "projections_B", "matching", "family")


def check_associative(rows) -> Optional[tuple]:
    """Return a witness (a, b, c) of non-associativity, or None."""
    n = len(rows)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                    return (a, b, c)
    return None


def builtin(name: str, n: int = 1, aux=None, star="right") -> OmegaTable:
    """Named tables.

    ``family`` takes an associative ``aux`` table used for <-, -> and .;
    ``star`` is a table or one of ``"right"``, ``"left"``, ``"constant"``.
    The family table is returned only if it passes :func:`check_ets`.
    """
    if n < 1:
        raise TableError("n must be positive")
    L, R = left_projection(n), right_projection(n)
    if name == "trivial":
        z = constant(n)
        return OmegaTable(n, z, z, z, z, z, z)
    if name == "projections_A":
        return OmegaTable(n, left_arrow=L, right_arrow=L, ltri=R, rtri=L, dot=R, star=L)
    if name == "projections_B":
        return OmegaTable(n, left_arrow=L, right_arrow=L, ltri=R, rtri=L, dot=L, star=R)
    if name == "matching":
        return OmegaTable(n, left_arrow=L, right_arrow=R, ltri=R, rtri=L, dot=L, star=R)
    if name == "family":
        if aux is None:
            raise TableError("the family builtin needs an associative aux table")
        aux = _freeze(aux)
        if len(aux) != n or any(len(r) != n for r in aux):
            raise TableError(f"aux table must be {n}x{n}")
        bad = check_associative(aux)
        if bad is not None:
            a, b, c = bad
            raise TableError(
                f"aux table is not associative: ({a}*{b})*{c} = {aux[aux[a][b]][c]}"
                f" but {a}*({b}*{c}) = {aux[a][aux[b][c]]}"
            )
        if isinstance(star, str):
            star_rows = {"right": R, "left": L, "constant": constant(n)}[star]
        else:
            star_rows = _freeze(star)
        t = OmegaTable(n, left_arrow=aux, right_arrow=aux, ltri=R, rtri=L, dot=aux, star=star_rows)
        report = check_ets(t, max_witnesses=1)
        if not report.passed:
            raise TableError(f"family table is not an ETS: {report.violations[0]}")
        return t
    raise TableError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")


def random_table(n: int, rng: random.Random) -> OmegaTable:
    tables = {
        op: [[rng.randrange(n) for _ in range(n)] for _ in range(n)] for op in OPS
    }
    return OmegaTable.from_tables(n, **tables)


def mutate(t: OmegaTable, rng: random.Random) -> OmegaTable:
    """Change one random entry of one random operation."""
    op = rng.choice(OPS)
    rows = [list(r) for r in getattr(t, op)]
    i, j = rng.randrange(t.size), rng.randrange(t.size)
    rows[i][j] = rng.choice([v for v in range(t.size) if v != rows[i][j]] or [rows[i][j]])
    tables = {o: getattr(t, o) for o in OPS}
    tables[op] = rows
    return OmegaTable.from_tables(t.size, **tables)
