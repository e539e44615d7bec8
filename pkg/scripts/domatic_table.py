"""Domatic sandwich for middle graphs of paths and cycles (k = 3)."""
import argparse

from rainbowdom.domatic import construct_family, domatic_bounds
from rainbowdom.errors import DomainError
from rainbowdom.graph import generate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kind", choices=["path", "cycle"], default="cycle")
    ap.add_argument("--from", dest="start", type=int, default=3)
    ap.add_argument("--to", dest="stop", type=int, default=40)
    args = ap.parse_args()
    print(f"{'n':>4} {'family':>6} {'lower':>5} {'upper':>5} {'source':>15} {'exact':>5}")
    for n in range(max(args.start, 2 if args.kind == "path" else 3), args.stop + 1):
        try:
            fam = construct_family(args.kind, n)
        except DomainError:
            fam = None
        b = domatic_bounds(generate(args.kind, n), 3, fam)
        size = len(fam) if fam else "-"
        exact = b.exact if b.exact is not None else "-"
        print(f"{n:>4} {size:>6} {b.lower:>5} {b.upper:>5} {b.upper_source:>15} {exact:>5}")


if __name__ == "__main__":
    main()
