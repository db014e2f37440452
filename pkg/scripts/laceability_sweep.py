"""Hamilton-laceability of every valid HTG up to a given order.

Prints one line per graph with the status and the expansions spent, then
a summary. Any counterexample should be re-checked by hand before being
believed; the search itself is exhaustive within budget.

    python scripts/laceability_sweep.py --max-order 48 --jobs 4
"""

from __future__ import annotations

import argparse
import collections
import dataclasses
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from htg import oracle
from htg.core import HtgParams, valid_jumps


@dataclasses.dataclass
class Config:
    max_order: int = 40
    budget: int = oracle.DEFAULT_BUDGET
    jobs: int = 1
    normal_only: bool = False


def _check(task):
    p, budget = task
    t = time.perf_counter()
    res = oracle.is_hamilton_laceable(p, oracle.SearchBudget(budget))
    return res, time.perf_counter() - t


def run(cfg: Config) -> int:
    params = [
        HtgParams(m, n, l)
        for n in range(4, cfg.max_order + 1, 2)
        for m in range(1, cfg.max_order // n + 1)
        for l in valid_jumps(m, n, normal=cfg.normal_only)
    ]
    tasks = [(p, cfg.budget) for p in params]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            results = list(pool.map(_check, tasks))
    else:
        results = [_check(t) for t in tasks]
    print("m\tn\tl\tstatus\tpair\tconsumed\tseconds")
    for res, dt in results:
        p = res.params
        pair = "-" if res.pair is None else f"{tuple(res.pair[0])}->{tuple(res.pair[1])}"
        print(f"{p.m}\t{p.n}\t{p.l}\t{res.status}\t{pair}\t{res.consumed}\t{dt:.2f}")
    counts = collections.Counter(res.status for res, _ in results)
    print(f"# {len(results)} graphs: {dict(counts)}", file=sys.stderr)
    if counts["counterexample"]:
        return 1
    return 3 if counts["inconclusive"] else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=Config.max_order)
    ap.add_argument("--budget", type=int, default=Config.budget)
    ap.add_argument("--jobs", type=int, default=Config.jobs)
    ap.add_argument("--normal-only", action="store_true")
    return run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    sys.exit(main())
