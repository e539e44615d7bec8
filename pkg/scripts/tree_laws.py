"""Check the tree inequalities on seeded random trees and report the slack.

For each tree: n, α', 5α'/2, γ*_r3, min(3n/2, n+α'), and whether the
pendant-path property holds for the solver certificate.
"""
import argparse
from collections import Counter
from dataclasses import dataclass

from rainbowdom.graph import generate
from rainbowdom.laws import check_pendant_path_lemma, check_tree_bounds
from rainbowdom.solver import solve_middle


@dataclass
class TreeConfig:
    count: int = 200
    max_n: int = 10
    seed0: int = 0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--seed0", type=int, default=0)
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()
    cfg = TreeConfig(args.count, args.max_n, args.seed0)

    failures = 0
    tight = Counter()
    for i in range(cfg.count):
        seed = cfg.seed0 + i
        t = generate("random_tree", 1 + i % cfg.max_n, seed=seed)
        bounds = check_tree_bounds(t)
        pendant = check_pendant_path_lemma(t, solve_middle(t, 3).certificate)
        lower, value, upper = bounds.chain
        tight["lower"] += value == lower
        tight["upper"] += value == upper
        failures += not (bounds.holds and pendant.holds)
        if args.verbose:
            print(f"seed={seed:4d} n={t.order:2d} alpha={bounds.witness['matching number']} "
                  f"{str(lower):>5} <= {value:2d} <= {str(upper):>4}  pendant={pendant.holds}")
    print(f"trees: {cfg.count}  failures: {failures}  "
          f"lower bound tight: {tight['lower']}  upper bound tight: {tight['upper']}")


if __name__ == "__main__":
    main()
