"""Residual of the addition law at random parameter points.

For each point p with |p_i| <= P-MAX and x, y uniform in [-XY-MAX, XY-MAX],
prints |I(x) + I(y) - I(G(x, y))| where G is the degree-ORDER series.

    python3 scripts/numeric_sweep.py --points 200 --order 16 --seed 1
"""
import argparse

import numpy as np

from fglaw import numeric as nm
from fglaw.algebra import ParamPoint


def main():
    ap = argparse.ArgumentParser(description="random-point sweep of the numeric addition check")
    ap.add_argument("--points", type=int, default=50)
    ap.add_argument("--order", type=int, default=nm.DEFAULT_ORDER)
    ap.add_argument("--p-max", type=float, default=1.0)
    ap.add_argument("--xy-max", type=float, default=0.02)
    ap.add_argument("--tol", type=float, default=1e-8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--float", dest="exact", action="store_false",
                    help="build the series over floats instead of evaluating the exact one")
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    residuals = []
    skipped = 0
    for _ in range(args.points):
        p = ParamPoint(*rng.uniform(-args.p_max, args.p_max, 4))
        x, y = (float(v) for v in rng.uniform(-args.xy_max, args.xy_max, 2))
        try:
            r = nm.addition_check(p, x, y, args.tol, args.order, max(args.xy_max, nm.DEFAULT_RADIUS),
                                  args.exact)
        except nm.NumericError:
            skipped += 1
            continue
        residuals.append(r.extra["residual"])
    res = np.array(residuals)
    print(f"points {len(res)}  skipped {skipped}  order {args.order}")
    if len(res):
        print(f"max {res.max():.3e}  median {np.median(res):.3e}  over tol {(res > args.tol).sum()}")
    return int(bool(len(res)) and bool((res > args.tol).any()))


if __name__ == "__main__":
    raise SystemExit(main())
