"""BFS diameter of HTG(1, n, l) next to the 2*floor(n/l)+1 formula.

Covers every even n up to ``--n-max`` and odd 3 <= l <= sqrt(n). Also
prints the largest observed-to-formula ratio, which shows how far apart
the two are as n grows.

    python scripts/htg1_diameter.py --n-max 64
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys

from htg import oracle
from htg.core import htg
from htg.predict import htg1_diameter_conjecture


@dataclasses.dataclass
class Config:
    n_max: int = 64


def run(cfg: Config) -> int:
    print("n\tl\tformula\tbfs\tverdict")
    rows = []
    for n in range(6, cfg.n_max + 1, 2):
        for l in range(3, math.isqrt(n) + 1, 2):
            formula = htg1_diameter_conjecture(n, l)
            bfs = oracle.diameter(htg(1, n, l), reduced=True)
            rows.append((n, l, formula, bfs))
            print(f"{n}\t{l}\t{formula}\t{bfs}\t{'Match' if formula == bfs else 'Mismatch'}")
    matches = sum(f == b for _, _, f, b in rows)
    ratio = max(b / f for _, _, f, b in rows)
    print(f"# {len(rows)} pairs, {matches} match, max bfs/formula = {ratio:.3f}", file=sys.stderr)
    return 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    return run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    sys.exit(main())
