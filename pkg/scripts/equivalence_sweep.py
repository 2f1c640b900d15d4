"""Compare check_ets with the tree-axiom scan on seeded tables at several leaf bounds.

The table mix is the one used by the acceptance suite: uniform random
tables, catalogue ETS tables and one-entry mutations of them.
Run: python scripts/equivalence_sweep.py --tables 1000 --bounds 6 7
"""

from __future__ import annotations

import argparse
import collections
import random
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from tridend.axioms import ets_equivalence_probe
from tridend.omega import mutate, random_table

sys.path.insert(0, str(Path(__file__).resolve().parent))
from ets_catalogue import enumerate_ets  # noqa: E402


@dataclass
class SweepConfig:
    tables: int = 1000
    seed: int = 0
    bounds: list = field(default_factory=lambda: [6, 7])


def seeded_tables(total: int, seed: int) -> list:
    rng = random.Random(seed)
    catalogue = enumerate_ets(2)["ets"]
    out = []
    while len(out) < total:
        kind = len(out) % 3
        if kind == 0:
            out.append(random_table(2, rng))
        elif kind == 1:
            out.append(rng.choice(catalogue))
        else:
            out.append(mutate(rng.choice(catalogue), rng))
    return out


def main(cfg: SweepConfig) -> None:
    tables = seeded_tables(cfg.tables, cfg.seed)
    print(f"tables: {len(tables)} (seed {cfg.seed})")
    for bound in cfg.bounds:
        start = time.perf_counter()
        results = [ets_equivalence_probe(t, bound) for t in tables]
        agree = sum(r.agree for r in results)
        first = collections.Counter(r.axiom_witness.axiom_id for r in results if r.axiom_witness)
        print(f"leaf bound {bound}: agree {agree}/{len(tables)}, ETS {sum(r.ets_ok for r in results)}, "
              f"axioms hold {sum(r.axioms_ok for r in results)}, {time.perf_counter() - start:.1f} s")
        if first:
            print("  first failing tree axiom: " + ", ".join(f"{k} x{v}" for k, v in sorted(first.items())))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--tables", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bounds", type=int, nargs="+", default=[6, 7])
    main(SweepConfig(**vars(p.parse_args())))
