"""Roots of the Bring quintic x**5 + x + t = 0.

The Bring radical BR(t) is the root analytic at t = 0 with BR(0) = 0.  Inside
|t| <= 1/2 it is summed directly from its 4F3 series; further out the series
value at 0.4 * t/|t| is carried along the ray to t by predictor-corrector
continuation.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf

from .algebra import Polynomial, solve_quartic
from .numeric import (
    ContinuationError,
    ConvergenceError,
    DivergenceError,
    PolishError,
    principal_root,
    resolve,
    unity_roots,
)
from .special import SAFETY_TERMS

SERIES_RADIUS = mpf(1) / 2
SEED_RADIUS = mpf(2) / 5
MAX_SERIES_TERMS = 100_000
GUARD = 10
DIVERGENCE_WINDOW = 40


def branch_radius():
    """|t| at which two roots of x**5 + x + t collide: 4 * 5**(-5/4)."""
    return 4 * mpf(5) ** (-mpf(5) / 4)


@dataclass(frozen=True)
class SeriesDiagnostics:
    terms_used: int
    converged: bool
    method: str  # "series", "nested-radical", "polished-continuation", "trivial"


@dataclass(frozen=True)
class PolishResult:
    root: mpc
    residual: mpf
    converged: bool
    iterations: int


def bring_series(t):
    """BR(t) from the hypergeometric series; returns (value, terms_used)."""
    t = mpc(t)
    if t == 0:
        return mpc(0), 0
    z = -mpf(3125) / 256 * t ** 4
    if abs(z) >= 1:
        raise DivergenceError(f"series for BR diverges at |t| = {mpmath.nstr(abs(t), 6)}")
    eps = mpf(2) ** (-mp.prec)
    # BR(t) = -t 4F3(1/5, 2/5, 3/5, 4/5; 1/2, 3/4, 5/4; z); the term ratio is
    # kept in integers so no parameter is rounded at import precision
    w = -5 * t ** 4 / 8
    term = mpc(1)
    total = mpc(1)
    extra = 0
    n = 0
    while n < MAX_SERIES_TERMS:
        num = (5 * n + 1) * (5 * n + 2) * (5 * n + 3) * (5 * n + 4)
        den = (2 * n + 1) * (4 * n + 3) * (4 * n + 5) * (n + 1)
        term *= w * num / den
        total += term
        n += 1
        if abs(term) <= eps * abs(total):
            extra += 1
            if extra > SAFETY_TERMS:
                return -t * total, n + 1
        else:
            extra = 0
    raise DivergenceError("BR series did not reach working precision")


def _bring_newton(x, t, max_iter=60):
    """Newton on x**5 + x + t; returns (x, converged)."""
    eps = mpf(2) ** (-mp.prec + 6)
    for _ in range(max_iter):
        x4 = x ** 4
        d = 5 * x4 + 1
        if d == 0:
            return x, False
        step = (x4 * x + x + t) / d
        x -= step
        if abs(step) <= eps * max(1, abs(x)):
            return x, True
    return x, False


def _continue(x, t_from, t_to, ctx):
    """Track the root x of x**5 + x + t from t_from to t_to along a straight line."""
    direction = t_to - t_from
    length = abs(direction)
    collision = mpf(10) ** (-(ctx.working_digits // 4))
    s = mpf(0)
    t = t_from
    h = min(mpf(1), mpf("0.1") * max(1, abs(t)) / length)
    steps = 0
    while s < 1:
        h = min(h, 1 - s)
        t_new = t_from + (s + h) * direction
        d = 5 * x ** 4 + 1
        if abs(d) < collision:
            raise ContinuationError(
                f"root collision near t = {mpmath.nstr(t, 8)}; use all_roots", stage="continuation"
            )
        pred = x - (t_new - t) / d
        x_new, ok = _bring_newton(pred, t_new)
        # reject steps whose correction is not small against the step itself
        if not ok or abs(x_new - pred) > mpf("0.25") * abs(pred - x) + mpf(2) ** (-mp.prec + 20):
            h /= 2
            if h * length < mpf(10) ** (-12):
                raise ContinuationError(
                    f"continuation stalled near t = {mpmath.nstr(t, 8)}", stage="continuation"
                )
            continue
        s += h
        t, x = t_new, x_new
        steps += 1
        h = min(2 * h, mpf("0.1") * max(1, abs(t)) / length)
    return x, steps


def bring_radical(t, ctx=None):
    """BR(t) with diagnostics: series for |t| <= 1/2, continuation beyond."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        t = mpc(t)
        if t == 0:
            return mpc(0), SeriesDiagnostics(0, True, "trivial")
        if abs(t) <= SERIES_RADIUS:
            x, terms = bring_series(t)
            x, ok = _bring_newton(x, t, max_iter=3)
            return x, SeriesDiagnostics(terms, True, "series")
        t0 = SEED_RADIUS * t / abs(t)
        x0, terms = bring_series(t0)
        x, steps = _continue(x0, t0, t, ctx)
        x, ok = _bring_newton(x, t)
        if abs(x ** 5 + x + t) > ctx.tol * max(1, abs(x) ** 5):
            raise ContinuationError("continued root failed the residual check", stage="continuation")
        return x, SeriesDiagnostics(terms + steps, ok, "polished-continuation")


def br(t, ctx=None):
    """The Bring radical BR(t): root of x**5 + x + t with BR(0) = 0."""
    return bring_radical(t, ctx)[0]


def lambert_euler(p, q, a, n=1, ctx=None):
    """x**n for the root of a q x**p + x**q = 1 analytic at a = 0, by the Lambert-Euler series.

    Term k is Gamma(u) (-q a)**k / (Gamma(u - k + 1) k!) with u = (n + p k)/q;
    a pole of the denominator Gamma makes the term vanish.
    """
    ctx = resolve(ctx)
    if q == 0:
        raise ValueError("q must be nonzero")
    with ctx.workdps(GUARD):
        a = mpmath.mpmathify(a)
        if a == 0:
            return mpf(1)
        eps = mpf(2) ** (-mp.prec)
        z = -q * a
        total = mpc(0)
        zk = mpc(1)
        kfact = mpf(1)
        small = 0
        window = []
        for k in range(MAX_SERIES_TERMS):
            if k:
                zk *= z
                kfact *= k
            u = mpf(n + p * k) / q
            term = mpmath.gamma(u) * mpmath.rgamma(u - k + 1) * zk / kfact
            total += term
            mag = abs(term)
            if mag <= eps * abs(total):
                small += 1
                if small > SAFETY_TERMS:
                    return mpf(n) / q * total
            else:
                small = 0
            if mag:
                window.append(mag)
            # terms still growing after a long stretch: outside the disc of convergence
            if len(window) > 2 * DIVERGENCE_WINDOW:
                if window[-1] > window[-1 - DIVERGENCE_WINDOW] > window[-1 - 2 * DIVERGENCE_WINDOW]:
                    raise DivergenceError(
                        f"Lambert-Euler series diverges at (p, q, a) = ({p}, {q}, {mpmath.nstr(a, 6)})"
                    )
                window = window[-2 * DIVERGENCE_WINDOW - 1:]
        raise DivergenceError("Lambert-Euler series did not converge")


def br_lambert_euler(t, ctx=None):
    """BR(t) as -t * x where t**4 x**5 + x = 1, i.e. the (p, q) = (5, 1) series."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        t = mpc(t)
        return -t * lambert_euler(5, 1, t ** 4, 1, ctx)


def nested_radical(A, B, max_iter=500, ctx=None):
    """Fixed point of x <- (-B - A x)**(1/5) (principal branch), a root of x**5 + A x + B."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        A = mpmath.mpmathify(A)
        B = mpmath.mpmathify(B)
        eps = mpf(2) ** (-mp.prec + 8)
        x = principal_root(mpc(-B), 5)
        for i in range(max_iter):
            nxt = principal_root(mpc(-B - A * x), 5)
            if abs(nxt - x) <= eps * max(1, abs(nxt)):
                x = nxt
                res = abs(x ** 5 + A * x + B)
                if res > ctx.tol * max(1, abs(x) ** 5, abs(B)):
                    break
                return x
            x = nxt
        raise ConvergenceError(
            f"nested radical did not converge in {max_iter} iterations",
            last=mpmath.nstr(x, 10),
        )


def newton_polish(poly, x0, max_iter=50, ctx=None):
    """Newton iteration on ``poly`` from ``x0``; the best iterate is returned and flagged."""
    ctx = resolve(ctx)
    if not isinstance(poly, Polynomial):
        poly = Polynomial(tuple(poly))
    with ctx.workdps(GUARD):
        x = mpc(x0)
        best, best_res = x, poly.scaled_residual(x)
        if best_res == 0:
            return PolishResult(x, best_res, True, 0)
        eps = mpf(2) ** (-mp.prec + 4)
        it = 0
        for it in range(1, max_iter + 1):
            p, dp = poly.value_and_derivative(x)
            if p == 0:
                best, best_res = x, mpf(0)
                break
            if abs(dp) <= eps * max(1, abs(p)):
                if best_res < ctx.tol:
                    break
                raise PolishError(f"derivative vanishes at x = {mpmath.nstr(x, 10)}")
            step = p / dp
            x -= step
            res = poly.scaled_residual(x)
            if res < best_res:
                best, best_res = x, res
            if abs(step) <= eps * max(1, abs(x)):
                break
    return PolishResult(best, best_res, best_res < ctx.tol, it)


def durand_kerner(poly, starts, ctx, max_iter=500):
    """Simultaneous Weierstrass iteration for all roots of a monic polynomial."""
    zs = [mpc(z) for z in starts]
    eps = mpf(2) ** (-mp.prec + 8)
    for _ in range(max_iter):
        biggest = mpf(0)
        for i, z in enumerate(zs):
            den = mpc(1)
            for j, w in enumerate(zs):
                if i != j:
                    den *= z - w
            if den == 0:
                den = eps
            step = poly(z) / den
            zs[i] = z - step
            biggest = max(biggest, abs(step) / max(1, abs(z)))
        if biggest <= eps:
            break
    return zs


def _bring_poly(t):
    return Polynomial((t, 1, 0, 0, 0, 1))


def vieta_ok(roots, t, ctx):
    """Sum and pairwise products vanish, product equals -t (within sqrt(tol) scale)."""
    gate = mpmath.sqrt(ctx.tol) * max(1, abs(t))
    e1 = sum(roots)
    e2 = sum(roots[i] * roots[j] for i in range(5) for j in range(i + 1, 5))
    prod = mpc(1)
    for r in roots:
        prod *= r
    return abs(e1) <= gate and abs(e2) <= gate and abs(prod + t) <= gate


def complete_roots(t, first, ctx=None):
    """All five roots of x**5 + x + t given one root: deflate, solve the quartic, polish."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        t = mpc(t)
        poly = _bring_poly(t)
        quartic, _ = poly.deflate(first)
        rest = solve_quartic(quartic)
        roots = [newton_polish(poly, z, ctx=ctx).root for z in [first] + rest]
        if vieta_ok(roots, t, ctx) and max(poly.scaled_residual(r) for r in roots) < ctx.tol:
            return roots, "deflation"
        base = principal_root(-t, 5) if t != 0 else mpc(1)
        starts = [(base + mpf("0.1") * mpmath.expjpi(mpf(1) / 7)) * w * (1 + mpf("0.05") * j)
                  for j, w in enumerate(unity_roots(5))]
        roots = durand_kerner(poly, starts, ctx)
        roots = [newton_polish(poly, z, ctx=ctx).root for z in roots]
        return roots, "durand-kerner"


def all_roots(form, ctx=None):
    """The five roots of x**5 + x + t, BR(t) first."""
    ctx = resolve(ctx)
    t = mpc(getattr(form, "t", form))
    with ctx.workdps(GUARD):
        if t == 0:
            return [mpc(0)] + [mpmath.expjpi(mpf(2 * j + 1) / 4) for j in range(4)]
        try:
            first = br(t, ctx)
        except ContinuationError:
            first = principal_root(-t, 5) if abs(t) > 1 else -t
            first = newton_polish(_bring_poly(t), first, ctx=ctx).root
        roots, _ = complete_roots(t, first, ctx)
    return roots


__all__ = [
    "PolishResult",
    "SeriesDiagnostics",
    "all_roots",
    "br",
    "br_lambert_euler",
    "branch_radius",
    "bring_radical",
    "bring_series",
    "complete_roots",
    "durand_kerner",
    "lambert_euler",
    "nested_radical",
    "newton_polish",
    "vieta_ok",
]
