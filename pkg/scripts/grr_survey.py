"""|Aut(HTG(1, n, l))| against the GRR prediction for a range of n.

    python scripts/grr_survey.py --n-min 18 --n-max 40
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

from htg import oracle
from htg.core import htg
from htg.predict import GrrInput, is_grr_predicted


@dataclasses.dataclass
class Config:
    n_min: int = 18
    n_max: int = 30


def run(cfg: Config) -> int:
    print("n\tl\t|Aut|\t|Aut|/n\tpredicted_grr\tobserved_grr")
    mismatches = []
    for n in range(cfg.n_min + cfg.n_min % 2, cfg.n_max + 1, 2):
        for l in range(3, (n + 1) // 2, 2):
            count = oracle.automorphism_count(htg(1, n, l))
            predicted = is_grr_predicted(GrrInput(n, l))
            observed = count == n
            print(f"{n}\t{l}\t{count}\t{count // n}\t{predicted}\t{observed}")
            if predicted != observed:
                mismatches.append((n, l, count))
    for n, l, count in mismatches:
        print(f"# mismatch HTG(1,{n},{l}): |Aut| = {count}; note 2l + 2 = {2 * l + 2} vs n = {n}", file=sys.stderr)
    return 1 if mismatches else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=Config.n_min)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    return run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    sys.exit(main())
