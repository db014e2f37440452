"""Audit the closed-form predicates against the oracles over small graphs.

Writes one TSV per property into ``--out-dir`` and prints a count of
verdicts per property. Exits 1 if any property has a mismatch.

    python scripts/audit_predicates.py --out-dir results
"""

from __future__ import annotations

import argparse
import collections
import dataclasses
import pathlib
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from htg import oracle
from htg.core import HtgParams, valid_jumps
from htg.predict import Verdict, audit, to_tsv


@dataclasses.dataclass
class Config:
    girth_max_order: int = 200
    spectrum_max_order: int = 64
    diameter_max_order: int = 150
    budget: int = oracle.DEFAULT_BUDGET
    jobs: int = 1
    out_dir: pathlib.Path = pathlib.Path("results")


def triples(max_order: int) -> list[HtgParams]:
    return [
        HtgParams(m, n, l)
        for n in range(4, max_order + 1, 2)
        for m in range(1, max_order // n + 1)
        for l in valid_jumps(m, n)
    ]


def _one(task):
    p, prop, budget = task
    return audit(p, [prop], oracle.SearchBudget(budget))[0]


def run(cfg: Config) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    plan = {
        "girth": cfg.girth_max_order,
        "spectrum": cfg.spectrum_max_order,
        "diameter": cfg.diameter_max_order,
    }
    worst = 0
    for prop, max_order in plan.items():
        t = time.perf_counter()
        tasks = [(p, prop, cfg.budget) for p in triples(max_order)]
        if cfg.jobs > 1:
            with ProcessPoolExecutor(cfg.jobs) as pool:
                reports = list(pool.map(_one, tasks, chunksize=8))
        else:
            reports = [_one(task) for task in tasks]
        (cfg.out_dir / f"{prop}.tsv").write_text(to_tsv(reports))
        counts = collections.Counter(str(r.verdict) for r in reports)
        print(f"{prop:9s} mn<={max_order:<4d} {dict(sorted(counts.items()))}  {time.perf_counter() - t:.1f}s")
        for r in reports:
            if r.verdict is Verdict.MISMATCH:
                print(f"    {r.params}: predicted {r.row()[4]} observed {r.row()[5]}")
        worst = max(worst, 1 if counts[str(Verdict.MISMATCH)] else 0)
    return worst


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = Config()
    for f in dataclasses.fields(Config):
        ap.add_argument("--" + f.name.replace("_", "-"), type=type(getattr(defaults, f.name)), default=getattr(defaults, f.name))
    return run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    sys.exit(main())
