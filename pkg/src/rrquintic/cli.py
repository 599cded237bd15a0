"""Command-line entry point: ``rrquintic solve | constants | verify``.

Exit codes: 0 all gates pass, 1 a residual gate failed, 2 usage error,
3 numerical error (precision, branch, convergence, degenerate input).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath
from mpmath import mpc, mpf

from . import modular as mod
from .hermite import main_theorem_pipeline
from .identities import CONJECTURAL_TAGS, MODULAR_SUITE, validate_identity
from .numeric import NumericContext, PrecisionError, QuinticError, deep_nome_digits, to_pair
from .solver import METHODS, solve
from .special import Nome, j_from_modulus, modulus_from_r, rrcf

EXIT_OK, EXIT_GATE, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
PIPELINE_SAMPLES = (16, 20, 24)
VERIFY_MODULAR = MODULAR_SUITE + ("j-routes", "theta-jacobi")


def _jsonable(value, digits):
    if isinstance(value, mpc):
        return to_pair(value, digits)
    if isinstance(value, mpf):
        return mpmath.nstr(value, digits)
    if isinstance(value, dict):
        return {k: _jsonable(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v, digits) for v in value]
    return value


def _parse_r(text):
    try:
        r = Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"r must be a positive rational, got {text!r}")
    if r <= 0:
        raise argparse.ArgumentTypeError("r must be positive")
    return r


def _context(args):
    return NumericContext(args.digits, mpf(args.tol) if args.tol is not None else None)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=40, help="working precision in decimal digits")
    common.add_argument("--tol", default="1e-30", help="acceptance tolerance (default 1e-30)")
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = argparse.ArgumentParser(prog="rrquintic", description="Quintic solving via Bring radicals and elliptic modular functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="solve a quintic")
    p.add_argument("coeffs", nargs=6, help="six coefficients (complex literals such as 1+2j)")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--descending", action="store_true", help="coefficients are listed from x**5 down")

    p = sub.add_parser("constants", parents=[common], help="evaluate k_r, R(q) or j_r")
    p.add_argument("name", choices=("k", "rrcf", "j"))
    p.add_argument("--r", type=_parse_r, required=True, help="singular parameter, e.g. 5 or 6/7")
    p.add_argument("--depth", type=int, default=None, help="continued-fraction truncation depth")
    p.add_argument("--branch", choices=[b.value for b in mod.TBranch], default=None,
                   help="radical branch for the j -> k cross-check of 'k'")

    p = sub.add_parser("verify", parents=[common], help="run identity validators")
    p.add_argument("suite", choices=("modular", "conjectural", "pipeline", "all"))
    return parser


def _complex(text):
    return mpmath.mpmathify(text.replace(" ", "").replace("i", "j"))


def cmd_solve(args, ctx):
    with ctx.workdps():
        coeffs = [_complex(c) for c in args.coeffs]
    report = solve(coeffs, args.method, ctx, descending=args.descending)
    if args.json:
        print(report.to_json(indent=2))
    else:
        print(f"method: {report.method_used}")
        for z, res in zip(report.roots, report.residuals):
            print(f"  {mpmath.nstr(z, ctx.working_digits)}    residual {mpmath.nstr(res, 3)}")
        for note in report.diagnostics:
            print(f"  note: {note}")
    return EXIT_OK if report.passed else EXIT_GATE


def cmd_constants(args, ctx):
    r = args.r
    need = deep_nome_digits(r)
    if need > ctx.working_digits:
        ctx = ctx.with_digits(need)
    out = {"name": args.name, "r": str(r), "digits": ctx.working_digits}
    with ctx.workdps():
        nome = Nome.from_r(r)
        if args.name == "k":
            ec = modulus_from_r(r, ctx)
            out.update(value=ec.k, route="theta quotient, checked by period-ratio bisection")
            branch = mod.TBranch(args.branch) if args.branch else (mod.TBranch.T34 if r >= 1 else mod.TBranch.T33)
            j = mod.t2(mod.t1(rrcf(nome, ctx=ctx).v, ctx), ctx)
            try:
                raw = mod.t3(j, branch, ctx)
                out["radical_branch"] = branch.value
                out["radical"] = mod.real_modulus(raw, r < 1, ctx)
                if abs(out["radical"] - raw) > mpmath.sqrt(ctx.tol):
                    out["radical_note"] = f"branch output {mpmath.nstr(raw, 12)} moved to the real member of its orbit"
                out["radical_error"] = abs(out["radical"] - ec.k)
                if out["radical_error"] > mpmath.sqrt(ctx.tol) * ec.k:
                    out["radical_note"] = (f"radical route lost precision (|j| ~ 1e{int(mpmath.log10(abs(j)))}); "
                                           "raise --digits for this cross-check")
            except QuinticError as exc:
                out["radical_note"] = f"{type(exc).__name__}: {exc}"
        elif args.name == "rrcf":
            out.update(value=rrcf(nome, depth=args.depth, ctx=ctx).v, route="backward recurrence of the continued fraction")
        else:
            ec = modulus_from_r(r, ctx)
            out.update(value=j_from_modulus(ec.k, ctx), route="rational function of k_r")
    digits = min(ctx.working_digits, 60)
    if args.json:
        print(json.dumps(_jsonable(out, digits), indent=2))
    else:
        for key, val in out.items():
            print(f"{key}: {_jsonable(val, digits)}")
    return EXIT_OK


def _identity_rows(tags, ctx):
    rows = []
    for tag in tags:
        rows.extend(row.to_dict() for row in validate_identity(tag, ctx=ctx).rows)
    return rows


def _pipeline_rows(ctx):
    rows = []
    for r in PIPELINE_SAMPLES:
        rep = main_theorem_pipeline(r, ctx)
        rows.append({
            "r": r,
            "t_error": rep["t_error"],
            "l_error": rep["l_error"],
            "k25_error": rep["k25_error"],
            "hermite_residual": rep["hermite_residual"],
            "phi_forms_error": rep["phi_forms_error"],
            "root_readings": {k: v["residual"] for k, v in rep["root_readings"].items()},
            "notes": rep["notes"],
            "informational": True,
        })
    return rows


def cmd_verify(args, ctx):
    sections = {}
    if args.suite in ("modular", "all"):
        sections["modular"] = _identity_rows(VERIFY_MODULAR, ctx)
    if args.suite in ("conjectural", "all"):
        sections["conjectural"] = _identity_rows(CONJECTURAL_TAGS, ctx)
    if args.suite in ("pipeline", "all"):
        sections["pipeline"] = _pipeline_rows(ctx)
    failed = [
        row for rows in sections.values() for row in rows
        if not row.get("informational") and not row.get("passed")
    ]
    if args.json:
        print(json.dumps(_jsonable(sections, 6), indent=2))
    else:
        for name, rows in sections.items():
            print(f"[{name}]")
            for row in rows:
                if name == "pipeline":
                    readings = ", ".join(f"{k} {mpmath.nstr(v, 3)}" for k, v in row["root_readings"].items())
                    print(f"  r={row['r']}: t {mpmath.nstr(row['t_error'], 3)}, l {mpmath.nstr(row['l_error'], 3)}, "
                          f"hermite {mpmath.nstr(row['hermite_residual'], 3)}; root formula: {readings}")
                    for note in row["notes"]:
                        print(f"      note: {note}")
                else:
                    status = "info" if row["informational"] else ("pass" if row["passed"] else "FAIL")
                    print(f"  {status:4}  {row['tag']:18} {row['sample']:>6}  {row['residual']}")
    return EXIT_GATE if failed else EXIT_OK


COMMANDS = {"solve": cmd_solve, "constants": cmd_constants, "verify": cmd_verify}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ctx = _context(args)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        with mpmath.workdps(ctx.working_digits):
            return COMMANDS[args.command](args, ctx)
    except PrecisionError as exc:
        hint = f" (try --digits {exc.suggested_digits})" if exc.suggested_digits else ""
        print(f"precision error at stage {exc.stage}: {exc}{hint}", file=sys.stderr)
    except QuinticError as exc:
        print(f"{type(exc).__name__} at stage {exc.stage}: {exc}", file=sys.stderr)
    return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
