"""Which construction produces the second Hamilton cycle of HTG(1, n, l).

For each valid (n, l) reports the first method that succeeds: a forward
or backward weave with k run starts per period, a periodic pattern of
dropped column edges (with its period), or the backtracking search. The
summary counts methods and the slowest instance.

    python scripts/second_cycle_methods.py --n-max 400 --quiet
"""

from __future__ import annotations

import argparse
import collections
import dataclasses
import math
import sys
import time

from htg import hamilton, oracle
from htg.core import HtgParams, VertexId, VertexSeq, htg, valid_jumps


@dataclasses.dataclass
class Config:
    n_max: int = 200
    quiet: bool = False


def method(n: int, l: int) -> tuple[str, list[int]]:
    for direction, name in ((1, "forward"), (-1, "backward")):
        g = math.gcd(n, l - direction)
        for k in range(g // 2, 0, -1):
            rows = hamilton._weave(n, l, k, direction)
            if rows:
                return f"{name}-weave k={k}", rows
    for period in range(2, min(n, hamilton.MAX_PERIOD) + 1, 2):
        if n % period == 0:
            rows = hamilton._periodic_cycle(n, l, period)
            if rows:
                return f"periodic p={period}", rows
    return "search", hamilton._search_htg1_cycle(HtgParams(1, n, l))


def run(cfg: Config) -> int:
    counts: collections.Counter[str] = collections.Counter()
    slowest = (0.0, None)
    failures = 0
    for n in range(6, cfg.n_max + 1, 2):
        for l in valid_jumps(1, n, normal=False):
            t = time.perf_counter()
            name, rows = method(n, l)
            dt = time.perf_counter() - t
            ok = oracle.is_hamilton_cycle(htg(1, n, l), VertexSeq(tuple(VertexId(0, j) for j in rows), True))
            failures += not ok
            counts[name.split(" ")[0]] += 1
            slowest = max(slowest, (dt, (n, l)))
            if not cfg.quiet or not name.endswith("weave k=1"):
                print(f"{n}\t{l}\t{name}\t{dt * 1000:.1f}ms\t{'valid' if ok else 'INVALID'}")
    print(f"# {dict(counts)}; slowest {slowest[1]} at {slowest[0]:.3f}s; {failures} invalid", file=sys.stderr)
    return 1 if failures else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--quiet", action="store_true", help="skip instances solved by a one-start weave")
    return run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    sys.exit(main())
