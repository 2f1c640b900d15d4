"""Enumerate all ETS tables on a small Omega, layer by layer.

Diassociative pairs are found first, then extended by the two triangles
and finally by dot and star, so only consistent prefixes are extended.
Run: python scripts/ets_catalogue.py --n 2 [--out ets2.json]
"""

from __future__ import annotations

import argparse
import itertools
import json
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from tridend.omega import DIASSOCIATIVE, EDS_EXTRA, ETS_EXTRA, OmegaTable, is_commutative


@dataclass
class CatalogueConfig:
    n: int = 2
    out: Optional[str] = None


def _tables(n: int) -> list:
    return [tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n))
            for v in itertools.product(range(n), repeat=n * n)]


def _holds(axioms, ops: dict, n: int) -> bool:
    a, b, c = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    o = {k: np.array(v, dtype=np.intp) for k, v in ops.items()}
    return all(np.array_equal(np.broadcast_to(ax.lhs(o, a, b, c), a.shape),
                              np.broadcast_to(ax.rhs(o, a, b, c), a.shape)) for ax in axioms)


def enumerate_ets(n: int) -> dict:
    """All diassociative, EDS and ETS tables on n elements (n <= 2 is quick)."""
    if n > 2:
        raise ValueError("the layered search is only practical for n <= 2")
    tabs = _tables(n)
    dia = [(L, R) for L in tabs for R in tabs
           if _holds(DIASSOCIATIVE, {"left_arrow": L, "right_arrow": R}, n)]
    eds = [(L, R, lt, rt) for L, R in dia for lt in tabs for rt in tabs
           if _holds(EDS_EXTRA, {"left_arrow": L, "right_arrow": R, "ltri": lt, "rtri": rt}, n)]
    ets = []
    for L, R, lt, rt in eds:
        for d, s in itertools.product(tabs, repeat=2):
            ops = {"left_arrow": L, "right_arrow": R, "ltri": lt, "rtri": rt, "dot": d, "star": s}
            if _holds(ETS_EXTRA, ops, n):
                ets.append(OmegaTable(n, **ops))
    return {"diassociative": dia, "eds": eds, "ets": ets}


def main(cfg: CatalogueConfig) -> None:
    start = time.perf_counter()
    res = enumerate_ets(cfg.n)
    ets = res["ets"]
    print(f"n = {cfg.n}")
    print(f"diassociative pairs: {len(res['diassociative'])}")
    print(f"EDS tables: {len(res['eds'])}")
    print(f"ETS tables: {len(ets)} (commutative: {sum(is_commutative(t) for t in ets)})")
    print(f"elapsed: {time.perf_counter() - start:.1f} s")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump([t.to_json() for t in ets], fh)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--out")
    main(CatalogueConfig(**vars(p.parse_args())))
