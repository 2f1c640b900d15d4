"""Finite-dimensional Omega-Rota-Baxter algebras.

The defining identity, for basis elements b, c and all alpha, beta::

    P_a(b) P_b(c) = P_{a->b}(P_{a|>b}(b) c) + P_{a<-b}(b P_{a<|b}(c))
                    + P_{a.b}(lambda_{a,b} b c),      lambda_{a,b} = mu_{a*b}

An algebra satisfying it over an ETS carries the induced products
a <_w b = a P_w(b), a >_w b = P_w(a) b, a o_w b = mu_w a b.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .axioms import LinearTridend
from .exact import LinComb, accumulate, as_rational, format_rational, scale
from .omega import AxiomReport, OmegaTable, Violation, check_ets


class RBError(ValueError):
    pass


class OmegaRBAlgebra:
    """``mult[i][j]`` is e_i e_j as a LinComb; ``operators[w][i][j]`` is the
    coefficient of e_i in P_w(e_j)."""

    def __init__(self, dim: int, mult, operators: Mapping, weights: Mapping):
        self.dim = dim
        if len(mult) != dim or any(len(r) != dim for r in mult):
            raise RBError(f"multiplication table must be {dim}x{dim}")
        self.mult = [[m if isinstance(m, LinComb) else LinComb(m) for m in row] for row in mult]
        self.operators = {}
        for w, M in operators.items():
            if len(M) != dim or any(len(r) != dim for r in M):
                raise RBError(f"operator {w} must be a {dim}x{dim} matrix")
            self.operators[int(w)] = [[as_rational(v) for v in row] for row in M]
        self.weights = {int(w): as_rational(v) for w, v in weights.items()}
        if set(self.operators) != set(self.weights):
            raise RBError("operators and weights must be given for the same Omega elements")
        self.omega_size = len(self.operators)
        if set(self.operators) != set(range(self.omega_size)):
            raise RBError("operators must be indexed 0..n-1")

    def times(self, a: LinComb, b: LinComb) -> LinComb:
        return accumulate((ca * cb, self.mult[i][j]) for i, ca in a.items() for j, cb in b.items())

    def P(self, w: int, a: LinComb) -> LinComb:
        M = self.operators[w]
        out: dict = {}
        for j, c in a.items():
            for i in range(self.dim):
                if M[i][j]:
                    out[i] = out.get(i, 0) + c * M[i][j]
        return LinComb(out)

    def lam(self, t: OmegaTable, a: int, b: int) -> Fraction:
        return self.weights[t.star[a][b]]

    def e(self, i: int) -> LinComb:
        return LinComb.basis(i)

    def check_associative(self) -> AxiomReport:
        report = AxiomReport(checked=("assoc",))
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            lhs = self.times(self.mult[i][j], self.e(k))
            rhs = self.times(self.e(i), self.mult[j][k])
            if lhs != rhs:
                report.violations.append(Violation("assoc", (i, j, k), lhs.render(), rhs.render(), "(xy)z = x(yz)"))
        return report

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "mult": [[[[format_rational(c), k] for k, c in m.sorted_items()] for m in row] for row in self.mult],
            "operators": {str(w): [[format_rational(v) for v in row] for row in M] for w, M in self.operators.items()},
            "weights": {str(w): format_rational(v) for w, v in self.weights.items()},
        }

    @classmethod
    def pointwise(cls, dim: int, operators: Mapping, weights: Mapping) -> "OmegaRBAlgebra":
        """k^dim with the pointwise product."""
        mult = [[LinComb({i: 1}) if i == j else LinComb.zero for j in range(dim)] for i in range(dim)]
        return cls(dim, mult, operators, weights)


def rb_from_json(data: dict) -> OmegaRBAlgebra:
    try:
        dim = int(data["dim"])
        mult = [[LinComb((int(k), as_rational(c)) for c, k in cell) for cell in row] for row in data["mult"]]
        return OmegaRBAlgebra(dim, mult, data["operators"], data["weights"])
    except (KeyError, TypeError) as exc:
        raise RBError(f"malformed Rota-Baxter algebra JSON: {exc}") from None


def load_rb(path) -> OmegaRBAlgebra:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise RBError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return rb_from_json(data)


def check_rb(alg: OmegaRBAlgebra, t: OmegaTable) -> AxiomReport:
    """Exhaustive check of the family identity on basis pairs and all (alpha, beta)."""
    if alg.omega_size != t.size:
        raise RBError(f"algebra has {alg.omega_size} operators but Omega has {t.size} elements")
    report = AxiomReport(checked=("rb",))
    for a, b in itertools.product(range(t.size), repeat=2):
        lam = alg.lam(t, a, b)
        for i, j in itertools.product(range(alg.dim), repeat=2):
            x, y = alg.e(i), alg.e(j)
            lhs = alg.times(alg.P(a, x), alg.P(b, y))
            rhs = (
                alg.P(t.right_arrow[a][b], alg.times(alg.P(t.rtri[a][b], x), y))
                + alg.P(t.left_arrow[a][b], alg.times(x, alg.P(t.ltri[a][b], y)))
                + alg.P(t.dot[a][b], scale(lam, alg.times(x, y)))
            )
            if lhs != rhs:
                report.violations.append(
                    Violation("rb", (a, b, i, j), lhs.render(), rhs.render(),
                              "P_a(x)P_b(y) = P_{a->b}(P_{a|>b}(x)y) + P_{a<-b}(xP_{a<|b}(y)) + P_{a.b}(lam xy)")
                )
    return report


class InducedTridend(LinearTridend):
    def __init__(self, alg: OmegaRBAlgebra, t: OmegaTable):
        super().__init__(t)
        self.alg = alg

    def basis_product(self, op, w, i, j) -> LinComb:
        A = self.alg
        x, y = A.e(i), A.e(j)
        if op == "prec":
            return A.times(x, A.P(w, y))
        if op == "succ":
            return A.times(A.P(w, x), y)
        return scale(A.weights[w], A.times(x, y))

    def render_key(self, key) -> str:
        return f"e{key}"

    def basis_elements(self) -> list:
        return [LinComb.basis(i) for i in range(self.alg.dim)]


def induced_tridend(alg: OmegaRBAlgebra, t: OmegaTable, require_ets: bool = True) -> InducedTridend:
    """The induced products; refuses unverified algebras (and non-ETS tables unless relaxed)."""
    if not alg.check_associative().passed:
        raise RBError("underlying multiplication is not associative")
    rep = check_rb(alg, t)
    if not rep.passed:
        raise RBError(f"Rota-Baxter identity fails: {rep.violations[0]}")
    if require_ets:
        ets = check_ets(t, max_witnesses=1)
        if not ets.passed:
            raise RBError(f"Omega table is not an ETS: {ets.violations[0]}")
    return InducedTridend(alg, t)


def random_elements(dim: int, count: int, rng, span: int = 3) -> list:
    """Small random rational combinations, for seeded sampling."""
    out = []
    for _ in range(count):
        out.append(LinComb({i: Fraction(rng.randint(-span, span), rng.randint(1, 2)) for i in range(dim)}))
    return out
