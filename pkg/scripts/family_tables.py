"""Print γ*_r3 tables for paths, cycles and complete graphs.

Each row compares the closed form, the frontier DP (paths, cycles) and the
exact solver (while the middle graph fits under the solver cap).
"""
import argparse
import time
from dataclasses import dataclass

from rainbowdom.certify import formula_gamma_star_r3
from rainbowdom.dp import dp_middle
from rainbowdom.graph import generate
from rainbowdom.solver import solve_middle, solver_cap


@dataclass
class TableConfig:
    kind: str = "path"
    start: int = 2
    stop: int = 30
    cap: int = 24


def rows(cfg: TableConfig):
    for n in range(cfg.start, cfg.stop + 1):
        g = generate(cfg.kind, n)
        formula = formula_gamma_star_r3(cfg.kind, n)
        dp = dp_middle(cfg.kind, n) if cfg.kind != "complete" else None
        solver = None
        if g.order + g.m <= cfg.cap:
            t = time.perf_counter()
            solver = solve_middle(g, 3, cfg.cap).value
            elapsed = time.perf_counter() - t
        else:
            elapsed = None
        yield n, formula, dp, solver, elapsed


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kind", choices=["path", "cycle", "complete"], default="path")
    ap.add_argument("--from", dest="start", type=int)
    ap.add_argument("--to", dest="stop", type=int, default=30)
    ap.add_argument("--cap", type=int, default=solver_cap())
    args = ap.parse_args()
    start = args.start or {"path": 2, "cycle": 3, "complete": 2}[args.kind]
    stop = min(args.stop, 6) if args.kind == "complete" and args.stop == 30 else args.stop
    cfg = TableConfig(args.kind, start, stop, args.cap)
    print(f"{'n':>4} {'formula':>8} {'dp':>6} {'solver':>7} {'secs':>7}")
    for n, formula, dp, solver, elapsed in rows(cfg):
        fmt = lambda v: "-" if v is None else str(v)  # noqa: E731
        secs = "-" if elapsed is None else f"{elapsed:.2f}"
        flag = "" if len({v for v in (formula, dp, solver) if v is not None}) == 1 else "  MISMATCH"
        print(f"{n:>4} {formula:>8} {fmt(dp):>6} {fmt(solver):>7} {secs:>7}{flag}")


if __name__ == "__main__":
    main()
