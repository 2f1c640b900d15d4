"""Command-line interface.

Exit codes: 0 when nothing was violated, 1 when a check failed, 2 for usage
or input errors.  Every leaf command accepts ``--json``, ``--seed`` and
``--threads``.  A table argument is either a JSON file or ``builtin:NAME[:N]``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

from . import __version__
from .axioms import TripleSource, check_axioms, tree_triples
from .exact import LinComb, as_rational
from .omega import AxiomReport, TableError, builtin, check_ets, dump_table, load_table, opposite
from .trees import DEFAULT_MAX_DEGREE, ResourceLimit, TreeError, count, enumerate_trees, parse, render, stats

COVERAGE = (
    "ETS axioms for index tables (diassociative, extended diassociative and triassociative families)",
    "the opposite of an ETS is an ETS",
    "free Omega-tridendriform algebra on leaf-typed angularly decorated Schroeder trees",
    "equivalence of the ETS axioms with the tree axioms (bounded probe)",
    "counting formula for decorated Schroeder trees",
    "universal property of the free algebra",
    "typed-word (quasi-shuffle) Omega-tridendriform algebra over a matching algebra, commutative case",
    "universal property of the typed-word algebra",
    "Omega-Rota-Baxter algebras and their induced Omega-tridendriform structure",
    "tensor collapse to a classical tridendriform algebra; generation and freeness criteria",
    "relations of the Omega-tridendriform operad, associativity of linear combinations of generators",
    "Koszul dual presentation",
)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input helpers

def _table(spec: Optional[str]):
    if not spec:
        raise UsageError("a table is required (JSON file or builtin:NAME[:N])")
    if spec.startswith("builtin:"):
        parts = spec.split(":")
        try:
            n = int(parts[2]) if len(parts) > 2 else 1
        except ValueError:
            raise UsageError(f"bad builtin size in {spec!r}") from None
        return builtin(parts[1], n)
    return load_table(spec)


def _vector(text: str, n: int) -> list:
    try:
        vals = [as_rational(x.strip()) for x in text.split(",")] if text.strip() else []
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read rational vector {text!r}") from None
    if len(vals) != n:
        raise UsageError(f"vector {text!r} has {len(vals)} entries, expected {n}")
    return vals


def _require_ets(t):
    rep = check_ets(t, max_witnesses=1)
    if not rep.passed:
        raise UsageError(f"the table is not an ETS: {rep.violations[0]}")


def _parallel_check(impl, triples: list, threads: int, max_violations=None) -> AxiomReport:
    if threads <= 1 or len(triples) < 2:
        return check_axioms(impl, triples, max_violations=max_violations)
    size = -(-len(triples) // threads)
    chunks = [triples[i:i + size] for i in range(0, len(triples), size)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        reports = list(pool.map(lambda ch: check_axioms(impl, ch), chunks))
    out = AxiomReport(checked=reports[0].checked)
    for r in reports:
        out.violations.extend(r.violations)
    if max_violations is not None:
        del out.violations[max_violations:]
    return out


def _report_text(title: str, rep: AxiomReport, limit: int = 5) -> list:
    lines = [f"{title}: {rep.summary()}"]
    for v in rep.violations[:limit]:
        lines.append(f"  {v}")
    if len(rep.violations) > limit:
        lines.append(f"  ... {len(rep.violations) - limit} more")
    return lines


# ---------------------------------------------------------------------------
# commands; each returns (ok, json_payload, text_lines)

def cmd_ets_check(a):
    t = _table(a.table)
    rep = check_ets(t, max_witnesses=a.max_witnesses)
    return rep.passed, rep.to_json(), _report_text("ETS", rep)


def cmd_ets_builtin(a):
    aux = json.loads(a.aux) if a.aux else None
    star = json.loads(a.star) if a.star and a.star.startswith("[") else (a.star or "right")
    t = builtin(a.name, a.n, aux=aux, star=star)
    rep = check_ets(t, max_witnesses=1)
    lines = [dump_table(t), f"ETS: {rep.summary()}"]
    return True, {"table": t.to_json(), "ets": rep.to_json()}, lines


def cmd_ets_opposite(a):
    t = opposite(_table(a.table))
    rep = check_ets(t, max_witnesses=1)
    return True, {"table": t.to_json(), "ets": rep.passed}, [dump_table(t), f"ETS: {rep.summary()}"]


def cmd_trees_enumerate(a):
    t = _table(a.table) if a.table else a.omega
    X = a.labels.split(",")
    trees = enumerate_trees(a.n, X, t, max_degree=a.max_degree)
    texts = [render(T, t if a.table else None) for T in trees]
    return True, {"count": len(texts), "trees": texts}, texts


def cmd_trees_count(a):
    c = count(a.n, a.x, a.omega)
    return True, {"n": a.n, "x": a.x, "omega": a.omega, "count": c}, [str(c)]


def cmd_trees_product(a):
    from .free import tree_product

    t = _table(a.table)
    w = t.index(a.omega)
    res = tree_product(a.op, w, t, parse(a.left, t), parse(a.right, t))
    text = res.render(lambda T: render(T, t))
    return True, {"result": text, "terms": len(res)}, [text]


def cmd_trees_parse(a):
    t = _table(a.table) if a.table else None
    T = parse(a.tree, t)
    s = stats(T)
    data = {"canonical": render(T, t), **s._asdict()}
    return True, data, [render(T, t)] + [f"{k}: {v}" for k, v in s._asdict().items()]


def _fuzz_impl(a, t):
    """Implementation and triple list for ``axioms fuzz``."""
    rng = random.Random(a.seed)
    structure = a.structure
    if structure == "trees":
        from .free import FreeTridend

        impl = FreeTridend(t)
        src = tree_triples(t, a.max_leaves, a.labels.split(","))
        if a.samples:
            src = TripleSource.sampled([e for g in src.groups.values() for e in g], a.samples, a.seed)
        return impl, list(src)
    if structure == "words":
        from .words import FreeMatchingAlgebra, WordAlgebra, all_words, load_algebra

        alg = load_algebra(a.algebra) if a.algebra else FreeMatchingAlgebra(a.labels.split(","), t.size)
        impl = WordAlgebra(t, alg)
        letters = list(alg.basis) if not a.algebra else list(range(alg.dim))
        groups = {k: [LinComb.basis(v) for v in all_words(letters, t.size, k)] for k in range(1, a.max_length - 1)}
        src = TripleSource.exhaustive(groups, a.max_length)
        if a.samples:
            src = TripleSource.sampled([e for g in groups.values() for e in g], a.samples, a.seed)
        return impl, list(src)
    if structure == "rb":
        from .rota_baxter import induced_tridend, load_rb, random_elements

        if not a.algebra:
            raise UsageError("--algebra is required for --structure rb")
        impl = induced_tridend(load_rb(a.algebra), t)
        basis = impl.basis_elements()
        if a.samples:
            pool = random_elements(impl.alg.dim, 3 * a.samples, rng)
            return impl, [tuple(pool[3 * i:3 * i + 3]) for i in range(a.samples)]
        return impl, [(x, y, z) for x in basis for y in basis for z in basis]
    if structure == "tensor":
        from .free import FreeTridend
        from .tensor import CollapsedAlgebra

        impl = CollapsedAlgebra(t, FreeTridend(t))
        src = tree_triples(t, a.max_leaves, a.labels.split(","))
        groups = {k: [impl.element(w, key) for e in g for key in e.keys() for w in range(t.size)]
                  for k, g in src.groups.items()}
        src = TripleSource.exhaustive(groups, a.max_leaves)
        if a.samples:
            src = TripleSource.sampled([e for g in groups.values() for e in g], a.samples, a.seed)
        return impl, list(src)
    raise UsageError(f"unknown structure {structure!r}")


def cmd_axioms_fuzz(a):
    t = _table(a.table)
    impl, triples = _fuzz_impl(a, t)
    if not triples:
        raise UsageError("no triples within the size bound (tree factors need at least two leaves)")
    rep = _parallel_check(impl, triples, a.threads, max_violations=a.max_violations)
    lines = [f"structure: {a.structure}", f"triples: {len(triples)}"] + _report_text("axioms", rep)
    data = {"structure": a.structure, "triples": len(triples), **rep.to_json()}
    return rep.passed, data, lines


def _word_arg(text: str):
    """A typed word with integer letters and types; ``unit`` or "" is the empty word."""
    from .words import parse_word

    return None if text.strip() in ("", "unit") else parse_word(text)


def cmd_words_product(a):
    from .words import load_algebra, render_word, word_product

    t = _table(a.table)
    alg = load_algebra(a.algebra)
    res = word_product(a.op, t.index(a.omega), t, alg, _word_arg(a.left), _word_arg(a.right))
    text = res.render(render_word)
    return True, {"result": text, "terms": len(res)}, [text]


def cmd_words_check_matching(a):
    from .words import check_matching, load_algebra

    alg = load_algebra(a.algebra)
    rep = check_matching(alg)
    data = {"symmetric": alg.is_symmetric(), **rep.to_json()}
    return rep.passed, data, _report_text("matching", rep) + [f"symmetric: {alg.is_symmetric()}"]


def cmd_rb_verify(a):
    from .rota_baxter import check_rb, load_rb

    alg = load_rb(a.algebra)
    t = _table(a.table)
    assoc = alg.check_associative()
    rep = check_rb(alg, t)
    ok = assoc.passed and rep.passed
    lines = _report_text("associative", assoc) + _report_text("Rota-Baxter", rep)
    return ok, {"associative": assoc.to_json(), "rota_baxter": rep.to_json()}, lines


def cmd_rb_induce(a):
    from .rota_baxter import induced_tridend, load_rb

    t = _table(a.table)
    impl = induced_tridend(load_rb(a.algebra), t)
    lines, data, ok = [], {}, True
    for w in range(t.size):
        for op in ("prec", "succ", "circ"):
            for x in impl.basis_elements():
                for y in impl.basis_elements():
                    r = impl.product(op, w, x, y)
                    key = f"{impl.render(x)} {op}_{w} {impl.render(y)}"
                    data[key] = impl.render(r)
                    lines.append(f"{key} = {impl.render(r)}")
    if a.check_axioms:
        B = impl.basis_elements()
        rep = _parallel_check(impl, [(x, y, z) for x in B for y in B for z in B], a.threads)
        ok = rep.passed
        lines += _report_text("axioms", rep)
        data = {"products": data, "axioms": rep.to_json()}
    else:
        data = {"products": data}
    return ok, data, lines


def cmd_tensor_phi(a):
    from .tensor import phi_properties

    t = _table(a.table)
    props = phi_properties(t)
    lines = [f"phi_{k}: surjective={r.surjective} injective={r.injective} image={r.image_size}"
             for k, r in props.items()]
    return True, {k: r.to_json() for k, r in props.items()}, lines


def cmd_tensor_probe(a):
    from .tensor import MAX_PROBE_DEGREE, freeness_probe, generation_probe

    t = _table(a.table)
    probe = generation_probe if a.mode == "generation" else freeness_probe
    rep = probe(t, a.labels.split(","), a.n, max_degree=a.max_degree or MAX_PROBE_DEGREE)
    lines = [f"{a.mode}: {'PASS' if rep.verdict else 'FAIL'}"]
    lines += [f"  degree {n}: dim {d} expected {e}" for n, (d, e) in rep.dims.items()]
    if rep.witness:
        lines.append(f"  witness: {rep.witness}")
    return rep.verdict, {"mode": a.mode, **rep.to_json()}, lines


def cmd_operad_relations(a):
    from .operad import relation_space

    t = _table(a.table)
    _require_ets(t)
    R = relation_space(t)
    data = R.to_json()
    lines = [f"relations: {len(R.relations)} rank: {R.rank} basis dimension: {len(R.basis)}"]
    lines += [f"{lab}: {txt['text']}" for lab, txt in zip(R.labels, data["relations"])]
    return True, data, lines


def cmd_operad_koszul_dual(a):
    from .operad import koszul_dual, prop43_relations, render_relation

    t = _table(a.table)
    _require_ets(t)
    K = koszul_dual(t)
    printed = prop43_relations(t, as_printed=True)
    corrected = prop43_relations(t, as_printed=False)
    match_printed, match_corrected = K.same_span(printed), K.same_span(corrected)
    lines = [
        f"dual relations: rank {K.rank} (basis dimension {len(K.basis)})",
        f"pairing: slot-1 sign {K.meta['slot1_sign']:+d}, generators {', '.join(K.meta['identification'])}",
        f"displayed presentation spans the dual: {match_printed}",
        f"index-corrected presentation spans the dual: {match_corrected}",
    ]
    data = {"rank": K.rank, "meta": K.meta, "displayed_matches": match_printed,
            "corrected_matches": match_corrected}
    if a.emit_presentation:
        P = printed if a.printed else corrected
        lines += [f"{lab}: {render_relation(r)}" for lab, r in zip(P.labels, P.relations)]
        data["presentation"] = [{"label": lab, "text": render_relation(r)} for lab, r in zip(P.labels, P.relations)]
    return (match_printed if a.printed else match_corrected), data, lines


def cmd_operad_assoc(a):
    from .operad import (CoefficientTriple, assoc_conditions, combo_associativity_witness, remark_conditions)

    t = _table(a.table)
    _require_ets(t)
    k = CoefficientTriple.from_lists(_vector(a.a, t.size), _vector(a.b, t.size), _vector(a.c, t.size))
    rep = assoc_conditions(t, k)
    remark = remark_conditions(t, k)
    lines = _report_text("associative", rep) + [f"reformulated conditions: {remark}"]
    data = {**rep.to_json(), "reformulated": remark}
    if a.cross_check:
        wit = combo_associativity_witness(t, k, a.max_leaves)
        agree = (wit is None) == rep.passed
        lines.append(f"tree cross-check agrees: {agree}")
        data["tree_cross_check"] = agree
        if wit is not None:
            txt = ", ".join(render(next(iter(x.keys())), t) for x in wit)
            lines.append(f"  non-associative on ({txt})")
            data["tree_witness"] = txt
    return rep.passed, data, lines


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--threads", type=int, default=1, help="worker threads for triple evaluation")

    p = argparse.ArgumentParser(prog="tridend", description="Exact computations with Omega-tridendriform algebras.")
    p.add_argument("--version", action="store_true", help="print version and implemented statements")
    top = p.add_subparsers(dest="group")

    def leaf(sub, name, fn, **kw):
        q = sub.add_parser(name, parents=[common], **kw)
        q.set_defaults(func=fn)
        return q

    g = top.add_parser("ets").add_subparsers(dest="cmd")
    q = leaf(g, "check", cmd_ets_check, help="check the ETS axioms")
    q.add_argument("table", nargs="?")
    q.add_argument("--max-witnesses", type=int, default=None)
    q = leaf(g, "builtin", cmd_ets_builtin, help="print a named table")
    q.add_argument("name")
    q.add_argument("--n", type=int, default=1)
    q.add_argument("--aux", help="associative table for the family builtin, as JSON rows")
    q.add_argument("--star", help="right, left, constant or JSON rows")
    q = leaf(g, "opposite", cmd_ets_opposite, help="print the opposite table")
    q.add_argument("table", nargs="?")

    g = top.add_parser("trees").add_subparsers(dest="cmd")
    q = leaf(g, "enumerate", cmd_trees_enumerate, help="list all trees of a degree")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--labels", default="x")
    q.add_argument("--omega", type=int, default=1, help="Omega size when no table is given")
    q.add_argument("--table")
    q.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    q = leaf(g, "count", cmd_trees_count, help="number of trees with n+1 leaves")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--x", type=int, required=True)
    q.add_argument("--omega", type=int, required=True)
    q = leaf(g, "product", cmd_trees_product, help="product of two trees")
    q.add_argument("--op", choices=("prec", "succ", "circ"), required=True)
    q.add_argument("--omega", required=True)
    q.add_argument("--table", required=True)
    q.add_argument("--left", required=True)
    q.add_argument("--right", required=True)
    q = leaf(g, "parse", cmd_trees_parse, help="validate and normalise a tree")
    q.add_argument("tree")
    q.add_argument("--table")

    g = top.add_parser("axioms").add_subparsers(dest="cmd")
    q = leaf(g, "fuzz", cmd_axioms_fuzz, help="check the seven axioms on a structure")
    q.add_argument("--structure", choices=("trees", "words", "rb", "tensor"), required=True)
    q.add_argument("--table", required=True)
    q.add_argument("--algebra")
    q.add_argument("--labels", default="x")
    q.add_argument("--max-leaves", type=int, default=6)
    q.add_argument("--max-length", type=int, default=4, help="total word length bound for words")
    q.add_argument("--samples", type=int, default=None)
    q.add_argument("--max-violations", type=int, default=20)

    g = top.add_parser("words").add_subparsers(dest="cmd")
    q = leaf(g, "product", cmd_words_product, help="product of two typed words")
    q.add_argument("--op", choices=("prec", "succ", "circ"), required=True)
    q.add_argument("--omega", required=True)
    q.add_argument("--table", required=True)
    q.add_argument("--algebra", required=True)
    q.add_argument("--left", required=True)
    q.add_argument("--right", required=True)
    q = leaf(g, "check-matching", cmd_words_check_matching, help="verify a matching algebra")
    q.add_argument("--algebra", required=True)

    g = top.add_parser("rb").add_subparsers(dest="cmd")
    q = leaf(g, "verify", cmd_rb_verify, help="verify the Rota-Baxter family identity")
    q.add_argument("--table", required=True)
    q.add_argument("--algebra", required=True)
    q = leaf(g, "induce", cmd_rb_induce, help="print the induced products")
    q.add_argument("--table", required=True)
    q.add_argument("--algebra", required=True)
    q.add_argument("--check-axioms", action="store_true")

    g = top.add_parser("tensor").add_subparsers(dest="cmd")
    q = leaf(g, "phi", cmd_tensor_phi, help="surjectivity and injectivity of the phi maps")
    q.add_argument("--table", required=True)
    q = leaf(g, "probe", cmd_tensor_probe, help="generation or freeness probe")
    q.add_argument("--mode", choices=("generation", "freeness"), required=True)
    q.add_argument("--table", required=True)
    q.add_argument("--n", type=int, default=3)
    q.add_argument("--labels", default="x")
    q.add_argument("--max-degree", type=int, default=None)

    g = top.add_parser("operad").add_subparsers(dest="cmd")
    q = leaf(g, "relations", cmd_operad_relations, help="the quadratic relations")
    q.add_argument("--table", required=True)
    q = leaf(g, "koszul-dual", cmd_operad_koszul_dual, help="annihilator of the relations")
    q.add_argument("--table", required=True)
    q.add_argument("--emit-presentation", action="store_true")
    q.add_argument("--printed", action="store_true",
                   help="compare with the displayed presentation instead of the index-corrected one")
    q = leaf(g, "assoc", cmd_operad_assoc, help="associativity of a combination of generators")
    q.add_argument("--table", required=True)
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    q.add_argument("--c", required=True)
    q.add_argument("--cross-check", action="store_true", help="also test the combination on trees")
    q.add_argument("--max-leaves", type=int, default=6)
    return p


def dispatch(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors and --help
        return 0 if exc.code == 0 else 2
    if args.version:
        print(f"tridend {__version__}", file=out)
        print("implemented statements:", file=out)
        for line in COVERAGE:
            print(f"  - {line}", file=out)
        return 0
    if not getattr(args, "func", None):
        parser.print_usage(err)
        return 2
    try:
        ok, data, lines = args.func(args)
    except (UsageError, TableError, TreeError, ResourceLimit, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    if args.json:
        payload = {"ok": ok, "seed": args.seed, **data}
        print(json.dumps(payload, indent=2, sort_keys=True, default=str), file=out)
    else:
        print(f"seed: {args.seed}", file=out)
        for line in lines:
            print(line, file=out)
    return 0 if ok else 1


def main() -> None:
    sys.exit(dispatch())
