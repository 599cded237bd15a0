"""End-to-end quintic solving: reduce, solve the Bring form, map back."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import mpmath
from mpmath import mpf

from . import bring
from .algebra import Polynomial
from .hermite import hermite_root
from .numeric import QuinticError, from_pair, resolve, to_pair
from .oracle import oracle_roots
from .reduction import back_map, reduce_quintic

METHODS = ("auto", "bring", "hermite", "oracle")
OMEGA_TURNS = mpf(1) / 4  # x = exp(i pi/4) y carries x**5 + x + t to y**5 - y + t / omega**5


@dataclass
class SolveReport:
    roots: list
    residuals: list
    chain: dict | None
    method_used: str
    diagnostics: list = field(default_factory=list)
    tol: mpf = None
    digits: int = 40

    @property
    def passed(self):
        return len(self.roots) == 5 and all(r < self.tol for r in self.residuals)

    def to_dict(self):
        d = self.digits
        return {
            "roots": [to_pair(z, d) for z in self.roots],
            "residuals": [mpmath.nstr(r, 6) for r in self.residuals],
            "chain": self.chain,
            "method_used": self.method_used,
            "diagnostics": list(self.diagnostics),
            "tol": mpmath.nstr(self.tol, 6),
            "digits": d,
            "passed": self.passed,
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data):
        with mpmath.workdps(int(data.get("digits", 40)) + 10):
            return cls(
                roots=[from_pair(p) for p in data["roots"]],
                residuals=[mpf(r) for r in data["residuals"]],
                chain=data.get("chain"),
                method_used=data["method_used"],
                diagnostics=list(data.get("diagnostics", [])),
                tol=mpf(data["tol"]),
                digits=int(data.get("digits", 40)),
            )


def as_polynomial(coeffs, descending=False):
    """Polynomial from numbers, numeric strings or [re, im] pairs."""
    if isinstance(coeffs, Polynomial):
        return coeffs
    values = [from_pair(c) for c in coeffs]
    return Polynomial.from_descending(values) if descending else Polynomial(tuple(values))


def residuals(poly, roots):
    """|p(x)| / max(1, |x|**5) for the monic normalisation of ``poly``."""
    monic = poly.monic()
    return [monic.scaled_residual(x) for x in roots]


def _bring_roots_hermite(t, ctx):
    """Five roots of x**5 + x + t with the first one from Hermite's method."""
    omega = mpmath.expjpi(OMEGA_TURNS)
    a = t / omega ** 5
    y = hermite_root(a, ctx=ctx)
    roots, how = bring.complete_roots(t, omega * y, ctx)
    return roots, how


def _solve_reduced(poly, ctx, use_hermite, diagnostics):
    red = reduce_quintic(poly, ctx)
    if red.bring is None:
        u_roots = None
        diagnostics.append("bring form skipped (A2 = 0)")
    else:
        t = red.bring.t
        diagnostics.append(f"bring parameter t = {mpmath.nstr(t, 15)}")
        if use_hermite:
            u_roots, how = _bring_roots_hermite(t, ctx)
            diagnostics.append(f"hermite root completed by {how}")
        else:
            u_roots = bring.all_roots(red.bring, ctx)
    roots = back_map(u_roots, red.chain, poly, ctx, bj=red.bring_jerrard)
    diagnostics.extend(red.chain.notes)
    return roots, red.chain.summary()


def solve(coeffs, method="auto", ctx=None, *, descending=False):
    """Solve a quintic given its coefficients (ascending unless ``descending``).

    method: ``bring`` (reduction + Bring radical), ``hermite`` (reduction +
    Hermite's elliptic root), ``oracle`` (mpmath polyroots only) or ``auto``
    (bring, falling back to hermite and then the oracle on a numerical error).
    """
    ctx = resolve(ctx)
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    poly = as_polynomial(coeffs, descending)
    diagnostics = []
    chain = None
    with ctx.workdps():
        if method == "oracle":
            roots, used = oracle_roots(poly, ctx), "oracle"
        elif method in ("bring", "hermite"):
            roots, chain = _solve_reduced(poly, ctx, method == "hermite", diagnostics)
            used = method
        else:
            roots = None
            for candidate in ("bring", "hermite"):
                try:
                    roots, chain = _solve_reduced(poly, ctx, candidate == "hermite", diagnostics)
                    used = candidate
                    break
                except QuinticError as exc:
                    diagnostics.append(f"{candidate} failed at stage {exc.stage}: {type(exc).__name__}: {exc}")
            if roots is None:
                roots, used = oracle_roots(poly, ctx), "oracle"
                diagnostics.append("fell back to the oracle root finder")
        res = residuals(poly, roots)
    report = SolveReport(roots, res, chain, used, diagnostics, ctx.tol, ctx.working_digits)
    if not report.passed:
        report.diagnostics.append("warning: residual gate failed")
    return report


__all__ = ["METHODS", "SolveReport", "as_polynomial", "residuals", "solve"]
