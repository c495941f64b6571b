"""Run every theorem check and write a JSON report.

    python scripts/run_verification.py --max-n 6 --out report.json
"""
import argparse
import sys
import time

from snsuper import verify as vf


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--include-7", action="store_true")
    ap.add_argument("--budget", type=float, default=3600.0)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", default="verification.json")
    args = ap.parse_args()
    config = vf.VerifyConfig(max_n=args.max_n, include_7=args.include_7, budget_seconds=args.budget,
                             threads=args.threads, progress=True)
    t0 = time.perf_counter()
    reports = vf.run_all(args.max_n, config)
    data = vf.reports_to_json(reports)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(vf.dumps(data))
    for r in reports:
        bad = [c for c in r.checks if not c.passed]
        print(f"n={r.n}: {len(r.checks) - len(bad)}/{len(r.checks)} checks pass")
        for c in bad:
            print(f"  FAIL {c.name}: expected {c.expected}, got {c.actual}")
    print(f"{'ALL PASS' if data['pass'] else 'FAILURES'} in {time.perf_counter() - t0:.1f}s -> {args.out}")
    return 0 if data["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
