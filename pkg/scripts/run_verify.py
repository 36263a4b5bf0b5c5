"""Run every exact identity check and print a timing table.

    python3 scripts/run_verify.py [--order 12] [--bi-order 10]
"""
import argparse
import time

from fglaw import suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=suite.DEFAULT_ORDER)
    ap.add_argument("--bi-order", type=int, default=suite.DEFAULT_BI_ORDER)
    args = ap.parse_args()

    rows = []
    for name in suite.default_names():
        t0 = time.perf_counter()
        [report] = suite.run_checks([name], args.order, args.bi_order, workers=1)
        rows.append((report, time.perf_counter() - t0))
    for report, dt in rows:
        print(f"{dt:7.2f}s  {report.line()}")
    failed = sum(not r.passed for r, _ in rows)
    print(f"{len(rows) - failed}/{len(rows)} passed, {sum(dt for _, dt in rows):.1f}s total")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
