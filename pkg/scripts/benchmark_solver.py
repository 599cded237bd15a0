"""Time the solver methods on random monic quintics with unit-disk coefficients."""

import argparse
import random
import time

import mpmath
from mpmath import mpc

from rrquintic import solve
from rrquintic.numeric import NumericContext
from rrquintic.solver import METHODS


def quintics(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        coeffs = []
        while len(coeffs) < 5:
            z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            if abs(z) <= 1:
                coeffs.append(mpc(z))
        out.append(coeffs + [mpc(1)])
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--digits", type=int, default=40)
    ap.add_argument("--methods", nargs="+", choices=METHODS[1:], default=list(METHODS[1:]))
    args = ap.parse_args()

    ctx = NumericContext(args.digits)
    polys = quintics(args.count, args.seed)
    for method in args.methods:
        start = time.perf_counter()
        reports = [solve(p, method, ctx) for p in polys]
        elapsed = time.perf_counter() - start
        worst = max(max(r.residuals) for r in reports)
        failed = sum(not r.passed for r in reports)
        print(f"{method:8} {elapsed:7.2f} s  worst residual {mpmath.nstr(worst, 3)}  gate failures {failed}")


if __name__ == "__main__":
    main()
