"""Compare the annihilator of the weight-2 relations with the displayed dual presentation.

For every ETS table on n elements (catalogue for n <= 2, builtins
otherwise) report whether the displayed and the index-corrected relation
families span the annihilator, and which displayed families pair nonzero
with the relations.
Run: python scripts/dual_presentation.py --n 2
"""

from __future__ import annotations

import argparse
import collections
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from tridend.omega import builtin
from tridend.operad import koszul_dual, pairing, prop43_relations, relation_space
from tridend.tensor import phi_properties

sys.path.insert(0, str(Path(__file__).resolve().parent))
from ets_catalogue import enumerate_ets  # noqa: E402


@dataclass
class DualConfig:
    n: int = 2
    show: int = 3  # how many offending tables to describe


def tables_for(n: int) -> list:
    if n <= 2:
        return enumerate_ets(n)["ets"]
    return [builtin("trivial", n), builtin("matching", n)]


def offending_families(t) -> collections.Counter:
    R = relation_space(t)
    P = prop43_relations(t, as_printed=True)
    bad = collections.Counter()
    for s, label in zip(P.relations, P.labels):
        if any(pairing(r, s) for r in R.relations):
            bad[label.split("(")[0]] += 1
    return bad


def main(cfg: DualConfig) -> None:
    start = time.perf_counter()
    tables = tables_for(cfg.n)
    displayed = corrected = 0
    families = collections.Counter()
    shown = 0
    for t in tables:
        K = koszul_dual(t)
        ok_d = K.same_span(prop43_relations(t, as_printed=True))
        ok_c = K.same_span(prop43_relations(t, as_printed=False))
        displayed += ok_d
        corrected += ok_c
        if not ok_d:
            bad = offending_families(t)
            families.update(bad)
            if shown < cfg.show:
                shown += 1
                images = {k: r.image_size for k, r in phi_properties(t).items()}
                print(f"  {t.to_json()} phi image sizes {images}: families {dict(bad)}")
    print(f"n = {cfg.n}: {len(tables)} tables")
    print(f"displayed presentation spans the annihilator: {displayed}/{len(tables)}")
    print(f"index-corrected presentation spans the annihilator: {corrected}/{len(tables)}")
    if families:
        print("displayed families pairing nonzero with the relations: "
              + ", ".join(f"{k} x{v}" for k, v in sorted(families.items())))
    print(f"elapsed: {time.perf_counter() - start:.1f} s")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--show", type=int, default=3)
    main(DualConfig(**vars(p.parse_args())))
