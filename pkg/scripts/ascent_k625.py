"""Climb from (k_25, k_1) to k_625 and k_15625 and compare with theta quotients."""

import argparse

import mpmath

from rrquintic import modular as mod
from rrquintic.numeric import NumericContext, PrecisionError
from rrquintic.special import modulus_from_r


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=130)
    ap.add_argument("--levels", type=int, default=2)
    args = ap.parse_args()

    ctx = NumericContext(args.digits)
    with mpmath.workdps(args.digits):
        k1, k25 = modulus_from_r(1, ctx).k, modulus_from_r(25, ctx).k
        try:
            ks = mod.ascend_25n(k25, k1, args.levels, ctx)
        except PrecisionError as exc:
            raise SystemExit(f"{exc} (suggested digits: {exc.suggested_digits})")
        for level, k in enumerate(ks, start=1):
            r = 25 ** (level + 1)
            ref = modulus_from_r(r, ctx).k
            print(f"k_{r} = {mpmath.nstr(k, 20)}   relative error vs theta {mpmath.nstr(abs(k - ref) / ref, 3)}")


if __name__ == "__main__":
    main()
