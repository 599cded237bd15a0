"""Print residuals of every modular and conjectural identity validator."""

import argparse

from rrquintic.identities import CONJECTURAL_TAGS, MODULAR_SUITE, validate_identity
from rrquintic.numeric import NumericContext


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=40)
    args = ap.parse_args()
    ctx = NumericContext(args.digits)
    for tag in MODULAR_SUITE + ("j-routes", "theta-jacobi") + CONJECTURAL_TAGS:
        for row in validate_identity(tag, ctx=ctx).rows:
            d = row.to_dict(3)
            status = "info" if row.informational else ("pass" if row.passed else "FAIL")
            print(f"{status:4}  {d['tag']:18} {d['sample']:>8}  {d['residual']:>10}  {d['note']}")


if __name__ == "__main__":
    main()
