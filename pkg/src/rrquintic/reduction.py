"""Tschirnhausen reduction of a quintic to principal, Bring-Jerrard and Bring form.

Levels of variables used below:

    x  original root            z = x - shift
    y  = z**2 + A z + B         principal quintic  y**5 + c2 y**2 + c1 y + c0
    w  = y**4 + k y**3 + l y**2 + m y + n    Bring-Jerrard  w**5 + A2 w + B2
    u  = w / lam                Bring form  u**5 + u + t

Every stage is verified against the image polynomial computed from power
sums (:func:`rrquintic.algebra.image_polynomial`), so a wrong sign or root
choice in the closed forms is detected and the next candidate is tried.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import mpmath
from mpmath import mp, mpc, mpf

from . import _tschirnhaus as tz
from .algebra import Polynomial, coefficient_scale, cubic_roots, image_polynomial, quadratic_roots, solve_quartic
from .numeric import (
    BranchError,
    DegenerateInputError,
    ReductionError,
    principal_root,
    resolve,
    unity_roots,
)

GUARD_DIGITS = 20
MAX_SHIFT_RETRIES = 6


@dataclass(frozen=True)
class PrincipalQuintic:
    """x**5 + c2 x**2 + c1 x + c0."""

    c2: mpc
    c1: mpc
    c0: mpc

    def polynomial(self):
        return Polynomial((self.c0, self.c1, self.c2, 0, 0, 1))


@dataclass(frozen=True)
class BringJerrard:
    """x**5 + A2 x + B2."""

    A2: mpc
    B2: mpc

    def polynomial(self):
        return Polynomial((self.B2, self.A2, 0, 0, 0, 1))


@dataclass(frozen=True)
class BringForm:
    """x**5 + x + t."""

    t: mpc

    def polynomial(self):
        return Polynomial((self.t, 1, 0, 0, 0, 1))


@dataclass
class TransformChain:
    """Everything needed to carry Bring-form roots back to the original quintic.

    ``quad`` and ``quartic`` are None for skipped (identity) stages; ``scale``
    is None when the Bring-Jerrard form had A2 = 0 and was solved directly.
    """

    lead: mpc = mpc(1)
    shift: mpc = mpc(0)
    quad: tuple | None = None
    quartic: tuple | None = None
    scale: mpc | None = None
    notes: list = field(default_factory=list)

    def summary(self, digits=20):
        def fmt(v):
            return None if v is None else [mpmath.nstr(mpc(x), digits) for x in v]

        return {
            "lead": mpmath.nstr(self.lead, digits),
            "shift": mpmath.nstr(self.shift, digits),
            "quad": fmt(self.quad),
            "quartic": fmt(self.quartic),
            "scale": None if self.scale is None else mpmath.nstr(self.scale, digits),
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class ReducedQuintic:
    original: Polynomial
    shifted: Polynomial
    principal: PrincipalQuintic
    bring_jerrard: BringJerrard
    bring: BringForm | None
    chain: TransformChain


def _coeff_gate(poly, indices, ctx):
    """True when the coefficients of x**i, i in indices, vanish relative to the root scale."""
    s = coefficient_scale(poly)
    n = poly.degree
    return all(abs(poly.coeffs[i]) <= ctx.tol * s ** (n - i) for i in indices)


def _agree(value, reference, weight, ctx):
    return abs(value - reference) <= ctx.tol * max(weight, abs(reference))


def taylor_shift(poly, delta):
    """Coefficients of p(z + delta)."""
    cs = list(poly.descending())
    n = len(cs) - 1
    for i in range(n):
        for j in range(1, n - i + 1):
            cs[j] += delta * cs[j - 1]
    return Polynomial.from_descending(cs)


def to_principal(monic, ctx=None):
    """Eliminate the x**4 and x**3 terms of a monic quintic with y = x**2 + A x + B.

    Returns (PrincipalQuintic, (A, B)) or (PrincipalQuintic, None) when the
    input is already principal.
    """
    ctx = resolve(ctx)
    if monic.degree != 5 or monic.leading != 1:
        raise ValueError("to_principal expects a monic quintic")
    e, d, c, b, a = (mpc(x) for x in monic.coeffs[:5])
    s = coefficient_scale(monic)
    if abs(a) <= ctx.tol * s and abs(b) <= ctx.tol * s * s:
        return PrincipalQuintic(c, d, e), None
    with ctx.workdps(GUARD_DIGITS):
        den_a = 4 * a ** 3 - 10 * a * b
        den_b = 20 * a ** 2 - 50 * b
        gate = mpmath.sqrt(ctx.tol)
        if abs(den_a) <= gate * s ** 3 or abs(den_b) <= gate * s ** 2:
            raise DegenerateInputError(
                "quadratic-stage denominator vanishes", stage="principal",
                denominator=mpmath.nstr(abs(den_a), 5),
            )
        root = mpmath.sqrt(5 * tz.delta_quadratic(a, b, c, d))
        failures = []
        for sign in (1, -1):
            A = (4 * a ** 4 - 13 * a ** 2 * b + 15 * a * c + sign * root) / den_a
            B = (5 * a ** 2 * b - 20 * b ** 2 + 15 * a * c + sign * root) / den_b
            c2, c1, c0 = tz.principal_coefficients(a, b, c, d, e, A, B)
            img = image_polynomial(monic, [B, A, 1])
            ok = _coeff_gate(img, (4, 3), ctx)
            si = coefficient_scale(img)
            ok = ok and all(
                _agree(v, img.coeffs[i], si ** (5 - i), ctx) for v, i in ((c2, 2), (c1, 1), (c0, 0))
            )
            if ok:
                return PrincipalQuintic(+c2, +c1, +c0), (+A, +B)
            failures.append(sign)
    raise ReductionError("no sign of the quadratic-stage radical eliminated x**4 and x**3", stage="principal")


def quartic_parameters(pq, root):
    """(k, l, n) and the cubic for m, for one choice of sqrt(5 * delta)."""
    c2, c1, c0 = pq.c2, pq.c1, pq.c0
    den = 27 * c2 ** 4 - 160 * c1 ** 3 + 300 * c2 * c1 * c0
    k = (-27 * c2 ** 3 * c1 + 400 * c1 ** 2 * c0 - 375 * c2 * c0 ** 2 - 3 * root) / (2 * den)
    l = (18 * c2 ** 3 * c1 ** 2 - 45 * c2 ** 4 * c0 - 250 * c2 * c1 * c0 ** 2 + 2 * c1 * root) / (c2 * den)
    n = (
        135 * c2 ** 4 * c1 - 1280 * c1 ** 4 + 3600 * c2 * c1 ** 2 * c0 - 1125 * c2 ** 2 * c0 ** 2 - 9 * c2 * root
    ) / (10 * den)
    return k, l, n, tz.m_cubic(c2, c1, c0, root)


def to_bring_jerrard(pq, ctx=None):
    """Eliminate y**4, y**3, y**2 with w = y**4 + k y**3 + l y**2 + m y + n.

    Returns (BringJerrard, (k, l, m, n)) or (BringJerrard, None) when c2 = 0.
    """
    ctx = resolve(ctx)
    P = pq.polynomial()
    s = coefficient_scale(P)
    if abs(pq.c2) <= ctx.tol * s ** 3:
        return BringJerrard(pq.c1, pq.c0), None
    with ctx.workdps(GUARD_DIGITS):
        c2, c1, c0 = pq.c2, pq.c1, pq.c0
        den = 27 * c2 ** 4 - 160 * c1 ** 3 + 300 * c2 * c1 * c0
        if abs(den) <= mpmath.sqrt(ctx.tol) * s ** 12:
            raise DegenerateInputError("quartic-stage denominator vanishes", stage="bring-jerrard")
        sq = mpmath.sqrt(5 * tz.delta_quartic(c2, c1, c0))
        report = []
        for root in (sq, -sq):
            k, l, n, cubic = quartic_parameters(pq, root)
            lead = cubic[0]
            ms = cubic_roots(cubic[1] / lead, cubic[2] / lead, cubic[3] / lead)
            for m in ms:
                img = image_polynomial(P, [n, m, l, k, 1])
                si = coefficient_scale(img)
                gate = _coeff_gate(img, (4, 3, 2), ctx)
                report.append(max(abs(img.coeffs[i]) / si ** (5 - i) for i in (4, 3, 2)))
                if not gate:
                    continue
                A2, B2 = tz.bring_jerrard_coefficients(c2, c1, c0, k, l, m, n)
                if _agree(A2, img.coeffs[1], si ** 4, ctx) and _agree(B2, img.coeffs[0], si ** 5, ctx):
                    return BringJerrard(+A2, +B2), (+k, +l, +m, +n)
    raise BranchError(
        "no root of the m-cubic eliminated the y**4, y**3, y**2 terms",
        stage="bring-jerrard", residuals=[mpmath.nstr(r, 5) for r in report],
    )


def to_bring(bj, ctx=None):
    """Scale x = lam * u with lam = A2**(1/4) (principal) to reach u**5 + u + t.

    Returns (BringForm, lam), or (None, None) when A2 = 0 and the five roots are
    simply the fifth roots of -B2.
    """
    ctx = resolve(ctx)
    s = coefficient_scale(bj.polynomial())
    if abs(bj.A2) <= ctx.tol * s ** 4:
        return None, None
    lam = principal_root(bj.A2, 4)
    return BringForm(bj.B2 / lam ** 5), lam


def _prepare(poly):
    if not isinstance(poly, Polynomial):
        poly = Polynomial(tuple(poly))
    if poly.degree != 5:
        raise DegenerateInputError(f"expected a quintic, got degree {poly.degree}", stage="input")
    return poly


def reduce_quintic(poly, ctx=None, *, seed=0):
    """Run all three stages, retrying with small random shifts on degenerate denominators."""
    ctx = resolve(ctx)
    poly = _prepare(poly)
    rng = random.Random(seed)
    lead = mpc(poly.leading)
    with ctx.workdps(GUARD_DIGITS):
        monic = poly.monic()
    last = None
    for attempt in range(MAX_SHIFT_RETRIES + 1):
        chain = TransformChain(lead=lead)
        if attempt == 1:
            # 2a**2 - 5b is proportional to sum (x_i - mean)**2 and survives any shift;
            # when it vanishes, centring the roots leaves a principal quintic
            chain.shift = -mpc(monic.coeffs[4]) / 5
            chain.notes.append(f"shift retry {attempt} (centre roots): {type(last).__name__}: {last}")
        elif attempt:
            scale = coefficient_scale(monic)
            delta = mpc(rng.uniform(-1, 1), rng.uniform(-1, 1)) * scale / 8
            chain.shift = delta
            chain.notes.append(f"shift retry {attempt}: {type(last).__name__}: {last}")
        with ctx.workdps(GUARD_DIGITS):
            shifted = taylor_shift(monic, chain.shift) if attempt else monic
        try:
            pq, chain.quad = to_principal(shifted, ctx)
            bj, chain.quartic = to_bring_jerrard(pq, ctx)
            form, chain.scale = to_bring(bj, ctx)
        except (DegenerateInputError, ReductionError, BranchError) as exc:
            last = exc
            continue
        if chain.quad is None:
            chain.notes.append("already principal: quadratic stage skipped")
        if chain.quartic is None:
            chain.notes.append("c2 = 0: quartic stage skipped")
        if form is None:
            chain.notes.append("A2 = 0: roots are fifth roots of -B2")
        return ReducedQuintic(poly, shifted, pq, bj, form, chain)
    raise DegenerateInputError(
        f"reduction failed after {MAX_SHIFT_RETRIES} shift retries: {last}", stage=getattr(last, "stage", None)
    )


def newton_refine(poly, x, ctx, max_iter=60):
    """Newton iteration on ``poly`` from x; returns (x, scaled residual)."""
    best = x
    best_res = poly.scaled_residual(x)
    for _ in range(max_iter):
        p, dp = poly.value_and_derivative(x)
        if dp == 0:
            break
        step = p / dp
        x = x - step
        res = poly.scaled_residual(x)
        if res < best_res:
            best, best_res = x, res
        if abs(step) <= mpf(2) ** (-mp.prec + 4) * max(1, abs(x)):
            break
    return best, best_res


def _best(cands, poly):
    return min(cands, key=poly.scaled_residual)


def _fill_missing(found, monic, ctx):
    """Deflate ``monic`` by the roots in ``found`` and solve what is left in closed form."""
    rest = monic
    for r in found:
        rest, _ = rest.deflate(r)
    deg = rest.degree
    if deg == 0:
        return []
    if deg == 1:
        return [-rest.coeffs[0] / rest.coeffs[1]]
    if deg == 2:
        return quadratic_roots(rest.coeffs[2], rest.coeffs[1], rest.coeffs[0])
    if deg == 3:
        m = rest.monic()
        return cubic_roots(m.coeffs[2], m.coeffs[1], m.coeffs[0])
    return solve_quartic(rest)


def roots_consistent(roots, monic, ctx):
    """Vieta check: the monic polynomial built from ``roots`` matches ``monic``."""
    rebuilt = Polynomial.from_roots(roots)
    s = coefficient_scale(monic)
    gate = mpmath.sqrt(ctx.tol)
    return all(abs(rebuilt.coeffs[i] - monic.coeffs[i]) <= gate * 10 * s ** (5 - i) for i in range(5))


def _dedupe(roots, monic, ctx):
    """Drop roots that duplicate an earlier one (same basin after polishing)."""
    kept = []
    s = coefficient_scale(monic)
    for r in roots:
        if all(abs(r - q) > mpmath.sqrt(ctx.tol) * s for q in kept):
            kept.append(r)
    return kept


def back_map(u_roots, chain, original, ctx=None, *, bj=None):
    """Map the five Bring-form roots back to roots of ``original``.

    For each reduced root the preimages of the quartic and quadratic stages
    are computed in closed form and the best candidate (smallest residual in
    the previous level's polynomial) is kept; the shift is undone and every
    root is Newton-polished against the original quintic.  When the
    candidates collapse onto fewer than five distinct roots the missing ones
    are recovered by deflation.
    """
    ctx = resolve(ctx)
    original = _prepare(original)
    with ctx.workdps(GUARD_DIGITS):
        monic = original.monic()
        shifted = taylor_shift(monic, chain.shift) if chain.shift != 0 else monic
        if chain.quad is not None:
            A, B = chain.quad
            principal = image_polynomial(shifted, [B, A, 1])
        else:
            principal = shifted
        if chain.quartic is not None:
            k, l, m, n = chain.quartic

        if chain.scale is None:
            if bj is None:
                raise ReductionError("A2 = 0 chain needs the Bring-Jerrard form", stage="back-map")
            base = principal_root(-mpc(bj.B2), 5)
            w_roots = [base * z for z in unity_roots(5)] if base != 0 else [mpc(0)] * 5
        else:
            w_roots = [mpc(chain.scale) * u for u in u_roots]

        ys = []
        for w in w_roots:
            if chain.quartic is not None:
                cands = solve_quartic(Polynomial((n - w, m, l, k, 1)))
                ys.append(_best(cands, principal))
            else:
                ys.append(w)
        zs = []
        for y in ys:
            if chain.quad is not None:
                cands = quadratic_roots(mpf(1), A, B - y)
                zs.append(_best(cands, shifted))
            else:
                zs.append(y)
        xs = [newton_refine(monic, z + chain.shift, ctx)[0] for z in zs]
        if not roots_consistent(xs, monic, ctx):
            kept = _dedupe(xs, monic, ctx)
            chain.notes.append(f"back-map recovered {5 - len(kept)} root(s) by deflation")
            extra = _fill_missing(kept, monic, ctx)
            xs = kept + [newton_refine(monic, r, ctx)[0] for r in extra]
            if len(xs) != 5 or not roots_consistent(xs, monic, ctx):
                raise ReductionError("recovered roots do not reproduce the input coefficients", stage="back-map")
    return [+x for x in xs]


__all__ = [
    "BringForm",
    "BringJerrard",
    "PrincipalQuintic",
    "ReducedQuintic",
    "TransformChain",
    "back_map",
    "newton_refine",
    "quartic_parameters",
    "reduce_quintic",
    "roots_consistent",
    "taylor_shift",
    "to_bring",
    "to_bring_jerrard",
    "to_principal",
]
