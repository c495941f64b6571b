"""Wall-clock timings of the transposition closure for several n and engines.

    python scripts/closure_timing.py --max-n 6
"""
import argparse
import time
from math import factorial

from snsuper import liesuper as ls
from snsuper.combinatorics import classify

ENGINES = {
    "ad/rational": dict(strategy="ad", selection="rational"),
    "ad/modular": dict(strategy="ad", selection="modular"),
    "pairs": dict(strategy="pairs"),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--engines", nargs="+", default=["ad/rational", "ad/modular"], choices=list(ENGINES))
    ap.add_argument("--pairs-max-n", type=int, default=4, help="the naive engine is only run up to here")
    args = ap.parse_args()
    print(f"{'n':>2} {'engine':<12} {'even':>6} {'odd':>6} {'expected':>8} {'seconds':>8}")
    for n in range(2, args.max_n + 1):
        want = factorial(n) - len(classify(n).classes) + 1
        for name in args.engines:
            if name == "pairs" and n > args.pairs_max_n:
                continue
            t0 = time.perf_counter()
            S = ls.closure(ls.transposition_elements(n), **ENGINES[name])
            dt = time.perf_counter() - t0
            print(f"{n:>2} {name:<12} {S.dims[0]:>6} {S.dims[1]:>6} {want:>8} {dt:>8.2f}", flush=True)


if __name__ == "__main__":
    main()
