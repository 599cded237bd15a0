"""Algebraic functions linking R(q), j and k_r, and the fifth-degree ascent k_r -> k_25r.

    t1: R(q) -> R(q**2)           t7: R(q) -> R(q**(1/2))
    t2: R(q**2) -> j(q)           t3: j -> k  (four radical branches)
    t4: R(q) -> R(q**(1/5))       t5: m(q) -> m(-q)
    t6: R(q) -> R(-q)             (conjectural, experimental only)

Every multivalued step is checked against its defining relation; a branch
that fails the check raises :class:`BranchError` instead of returning a
plausible-looking wrong value.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf

from .algebra import cubic_roots
from .numeric import (
    BranchError,
    DomainError,
    ExperimentalError,
    PoleError,
    PrecisionError,
    principal_root,
    resolve,
)
from .special import j_from_modulus

GUARD = 10


def _i():
    return mpc(0, 1)


def _s3():
    return mpmath.sqrt(3)


def _check(residual, gate, what, **details):
    if not residual <= gate:
        raise BranchError(f"{what}: defining relation fails (residual {mpmath.nstr(residual, 5)})", **details)


def _realify(z, *refs):
    """Drop a negligible imaginary part when every reference input is real."""
    if all(not isinstance(r, mpc) for r in refs) and isinstance(z, mpc):
        if abs(z.imag) <= mpf(2) ** (-mp.prec + 8) * abs(z):
            return z.real
    return z


# --- degree-2 relation -------------------------------------------------------

def rrcf_degree2_residual(x, y):
    """(y - x**2)/(y + x**2) - x y**2 for x = R(q), y = R(q**2)."""
    return (y - x * x) / (y + x * x) - x * y * y


def t1(x, ctx=None):
    """R(q**2) from x = R(q) (closed-form root of the degree-2 modular relation)."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        x = mpmath.mpmathify(x)
        if x == 0:
            return mpf(0)
        i, s3 = _i(), _s3()
        c = principal_root(18 * x ** 4 + x ** 9 + 3 * s3 * mpmath.sqrt(-x ** 3 + 11 * x ** 8 + x ** 13), 3)
        if c == 0:
            raise PoleError("t1 radical vanishes")
        y = -x ** 2 / 3 - (1 - i * s3) * (-3 * x - x ** 6) / (6 * x * c) + (1 + i * s3) * c / (6 * x)
        # real in, real out: a stray imaginary rounding bit would otherwise pick
        # the wrong side of the square-root cut in later radicals (f1, t6)
        y = _realify(y, x)
        _check(abs(rrcf_degree2_residual(x, y)), ctx.tol, "t1")
        return y


def t7(x, ctx=None):
    """R(q**(1/2)) from x = R(q); t1(t7(x)) = x."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        x = mpmath.mpmathify(x)
        if x == 0:
            raise DomainError("t7 is undefined at 0")
        i, s3 = _i(), _s3()
        c = principal_root(1 - 18 * x ** 5 + 3 * s3 * mpmath.sqrt(-x ** 5 + 11 * x ** 10 + x ** 15), 3)
        if c == 0:
            raise PoleError("t7 radical vanishes")
        w = (
            -1 / (3 * x ** 2)
            - (1 + i * s3) * (-1 + 3 * x ** 5) / (6 * x ** 2 * c)
            + (1 - i * s3) * c / (6 * x ** 2)
        )
        w = _realify(w, x)
        _check(abs(rrcf_degree2_residual(w, x)), ctx.tol, "t7")
        return w


def t2(x, ctx=None):
    """Klein's j from x = R(q**2)."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        x = mpmath.mpmathify(x)
        x5 = x ** 5
        den = x5 * (x5 * x5 + 11 * x5 - 1) ** 5
        if den == 0:
            raise PoleError("t2 has a pole at x**5 (x**10 + 11 x**5 - 1) = 0")
        return -(x5 ** 4 - 228 * x5 ** 3 + 494 * x5 ** 2 + 228 * x5 + 1) ** 3 / den


# --- j -> k -----------------------------------------------------------------

class TBranch(enum.Enum):
    T31 = "T31"
    T32 = "T32"
    T33 = "T33"
    T34 = "T34"


@dataclass(frozen=True)
class T3Candidate:
    branch: TBranch
    k: mpc
    residual: mpf


def _d1(x):
    return 884736 * x - 2304 * x ** 2 + x ** 3 + 12288 * _s3() * mpmath.sqrt(1728 * x ** 2 - x ** 3)


def _t3_raw(x, branch):
    i, s3 = _i(), _s3()
    D = _d1(x)
    c = principal_root(D, 3)
    if c == 0:
        raise PoleError("t3 radical D1 vanishes")
    if branch is TBranch.T32:
        inner = mpmath.sqrt(-576 * c ** 2 + D - 1536 * c * x + c ** 2 * x + c * x ** 2)
        return mpmath.sqrt(24 * c + s3 * inner) / (4 * s3 * c)
    if branch is TBranch.T31:
        v = mpmath.sqrt(
            (-6 - 6 * i * s3) * D + 12 * c ** 2 * (-576 + x) + 6 * i * (i + s3) * c * (-1536 + x) * x
        ) / (6 * c ** 2)
    else:
        v = mpmath.sqrt(
            6 * i * (i + s3) * D + 12 * c ** 2 * (-576 + x) + (-6 - 6 * i * s3) * c * (-1536 + x) * x
        ) / (6 * c)
        if branch is TBranch.T34:
            v = -v
    return mpmath.sqrt((v + 8) / 16)


def _t3_guard(j):
    return GUARD + max(0, int(math.ceil(float(mpmath.log10(max(1, abs(j)))))))


def t3_candidates(j, ctx=None):
    """All four radical branches of j -> k, ranked by |j(k) - j| / max(1, |j|)."""
    ctx = resolve(ctx)
    with ctx.workdps(_t3_guard(j)):
        j = mpmath.mpmathify(j)
        if j == 0:
            raise DomainError("t3 needs j != 0")
        out = []
        for b in TBranch:
            try:
                k = _t3_raw(j, b)
                res = abs(j_from_modulus(k, ctx) - j) / max(1, abs(j))
            except (PoleError, ZeroDivisionError):
                k, res = mpc(mpmath.nan), mpf(mpmath.inf)
            out.append(T3Candidate(b, k, res))
    return sorted(out, key=lambda c: c.residual)


def t3(j, branch=TBranch.T34, ctx=None):
    """Modulus k with j(k) = j on the requested branch.

    T34 gives the small modulus (k < 1/sqrt(2), singular parameter r > 1),
    T33 the large one.  ``branch=None`` returns the best roundtrip.  A
    branch whose output fails the roundtrip raises :class:`BranchError`.
    """
    ctx = resolve(ctx)
    cands = t3_candidates(j, ctx)
    if branch is None:
        best = cands[0]
    else:
        branch = TBranch(branch) if not isinstance(branch, TBranch) else branch
        best = next(c for c in cands if c.branch is branch)
    if not best.residual <= ctx.tol:
        raise BranchError(
            f"t3 branch {best.branch.value} fails the j roundtrip",
            residuals={c.branch.value: mpmath.nstr(c.residual, 5) for c in cands},
        )
    return best.k


def modulus_orbit(k):
    """The six moduli sharing j(k): lambda = k**2 mapped by lambda -> 1 - lambda, 1/lambda, ..."""
    lam = mpmath.mpmathify(k) ** 2
    lams = (lam, 1 - lam, 1 / lam, 1 / (1 - lam), lam / (lam - 1), (lam - 1) / lam)
    return tuple(mpmath.sqrt(x) for x in lams)


def real_modulus(k, large=False, ctx=None):
    """The member of k's orbit in (0, 1/sqrt(2)] (or [1/sqrt(2), 1) when ``large``)."""
    ctx = resolve(ctx)
    gate = mpmath.sqrt(ctx.tol)
    half = 1 / mpmath.sqrt(2)
    for m in modulus_orbit(k):
        if abs(mpmath.im(m)) > gate:
            continue
        m = mpmath.re(m)
        if 0 < m < 1 and ((m >= half - gate) if large else (m <= half + gate)):
            return m
    raise BranchError("no real modulus in the orbit", stage="t3")


# --- degree-5 and the negated nome ----------------------------------------------

def rrcf_degree5_rhs(x):
    return x * (1 - 2 * x + 4 * x ** 2 - 3 * x ** 3 + x ** 4) / (1 + 3 * x + 4 * x ** 2 + 2 * x ** 3 + x ** 4)


def t4(x, ctx=None):
    """R(q**(1/5)) from x = R(q): principal fifth root of the degree-5 relation."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        x = mpmath.mpmathify(x)
        den = 1 + 3 * x + 4 * x ** 2 + 2 * x ** 3 + x ** 4
        if den == 0:
            raise PoleError("t4 denominator vanishes")
        return principal_root(rrcf_degree5_rhs(x), 5)


def t5(x, ctx=None):
    """m(-q) = m(q) / sqrt(m(q)**2 - 1), principal square root."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        x = mpmath.mpmathify(x)
        d = x * x - 1
        if d == 0:
            raise PoleError("t5 has poles at x = +-1")
        return x / mpmath.sqrt(d)


def f1(x, ctx=None):
    """The root u = R(1,3,10; q) of u**3 - u v + u**2 v**3 + v**4 = 0 given v = R(q)."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        x = mpmath.mpmathify(x)
        if x == 0:
            return mpf(0)
        i, s3 = _i(), _s3()
        c = principal_root(-18 * x ** 4 - x ** 9 + 3 * s3 * mpmath.sqrt(-x ** 3 + 11 * x ** 8 + x ** 13), 3)
        if c == 0:
            raise PoleError("f1 radical vanishes")
        return -x ** 3 / 3 + (1 - i * s3) * (-3 * x - x ** 6) / (6 * c) - (1 + i * s3) * c / 6


def t6(x, *, experimental=False, ctx=None):
    """R(-q) from x = R(q) through a conjectural identity; requires ``experimental=True``."""
    if not experimental:
        raise ExperimentalError("t6 rests on an unproven identity; pass experimental=True to use it")
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        x = mpmath.mpmathify(x)
        if x == 0:
            raise PoleError("t6 has a pole at 0")
        y = t1(x, ctx)
        if y == 0:
            raise PoleError("t6 has a pole where t1 vanishes")
        return mpmath.expjpi(mpf(1) / 5) * f1(y, ctx) / (x * y * y)


# --- fifth-degree ascent ---------------------------------------------------------

def u_relation_residual(X, Y):
    """Relative residual of X**2/(sqrt5 Y) - sqrt5 Y/X**2 = (Y**3 - Y**-3)/sqrt5."""
    r5 = mpmath.sqrt(5)
    terms = (X * X / (r5 * Y), r5 * Y / (X * X), Y ** 3 / r5, 1 / (r5 * Y ** 3))
    res = terms[0] - terms[1] - terms[2] + terms[3]
    return abs(res) / max(abs(t) for t in terms)


def u_star(Y, ctx=None):
    """X = U*(Y), the closed-form solution of the U-relation for X."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        Y = mpmath.mpmathify(Y)
        if Y == 0:
            raise DomainError("u_star is undefined at 0")
        Y2 = Y * Y
        X = mpmath.sqrt(-1 / (2 * Y2) + Y2 * Y2 / 2 + mpmath.sqrt(1 + 18 * Y ** 6 + Y ** 12) / (2 * Y2))
        if X == 0:
            raise BranchError("u_star radicand vanishes", Y=mpmath.nstr(Y, 10))
        res = u_relation_residual(X, Y)
        _check(res, ctx.tol, "u_star", Y=mpmath.nstr(Y, 10))
        return X


def u_fwd(X, ctx=None):
    """Y = U(X), the closed-form solution of the U-relation for Y.

    The principal cube root in h(X) is tried first, then the other two.
    """
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        X = mpmath.mpmathify(X)
        if X == 0:
            raise DomainError("u_fwd is undefined at 0")
        X2, X6 = X * X, X ** 6
        h0 = principal_root(-125 - 9 * X6 + 3 * _s3() * mpmath.sqrt(-125 * X6 - 22 * X6 ** 2 - X6 ** 3), 3)
        if h0 == 0:
            raise BranchError("h(X) vanishes", X=mpmath.nstr(X, 10))
        best = None
        for j in range(3):
            h = h0 * mpmath.expjpi(mpf(2 * j) / 3)
            Y = mpmath.sqrt(-5 / (3 * X2) + 25 / (3 * X2 * h) + X2 * X2 / h + h / (3 * X2))
            if Y == 0:
                continue
            res = u_relation_residual(X, Y)
            if res <= ctx.tol:
                return Y
            best = res if best is None else min(best, res)
        raise BranchError("no cube-root branch of h(X) satisfies the U-relation",
                          X=mpmath.nstr(X, 10), residual=best and mpmath.nstr(best, 5))


def p_from_alpha(alpha, ctx=None):
    """p = 2 sinh(arcsinh((11 + alpha)/2) / 5)."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        return 2 * mpmath.sinh(mpmath.asinh((11 + mpmath.mpmathify(alpha)) / 2) / 5)


def alpha_from_p(p, ctx=None):
    """Inverse of :func:`p_from_alpha`: alpha = -11 + 2 sinh(5 arcsinh(p/2))."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        return -11 + 2 * mpmath.sinh(5 * mpmath.asinh(mpmath.mpmathify(p) / 2))


def q_of_p(p):
    return (p - 1) ** 5 / (11 + 6 * p + 6 * p ** 2 + p ** 3 + p ** 4)


def s_from_p(p, ctx=None):
    """s = ((p - 1)**5 / (11 + 6p + 6p**2 + p**3 + p**4))**(1/3), principal cube root."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        p = mpmath.mpmathify(p)
        den = 11 + 6 * p + 6 * p ** 2 + p ** 3 + p ** 4
        if den == 0:
            raise PoleError("s_from_p denominator vanishes")
        return principal_root((p - 1) ** 5 / den, 3)


def y_roots(s, ctx=None):
    """The three roots of Y**3 + (5/s) Y**2 - s Y - 1 = 0 (closed form, Newton-refined)."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        s = mpmath.mpmathify(s)
        if s == 0:
            raise DomainError("y_roots needs s != 0")
        return cubic_roots(5 / s, -s, mpf(-1))


def modular5_residual(k, K):
    """k K + k' K' + 2**(5/3) (k K k' K')**(1/3) - 1 for K = k_25r, k = k_r."""
    kp = mpmath.sqrt(1 - k * k)
    Kp = mpmath.sqrt(1 - K * K)
    return k * K + kp * Kp + mpf(2) ** (mpf(5) / 3) * principal_root(k * K * kp * Kp, 3) - 1


def depressed_residual(u, v):
    """u**6 - v**6 + 5 u**2 v**2 (u**2 - v**2) + 4 u v (1 - u**4 v**4)."""
    return u ** 6 - v ** 6 + 5 * u * u * v * v * (u * u - v * v) + 4 * u * v * (1 - u ** 4 * v ** 4)


def _modulus_from_E(E):
    """sqrt(1/2 - 1/2 sqrt(1 - E)) without cancellation for small E."""
    return mpmath.sqrt(E / (2 * (1 + mpmath.sqrt(1 - E))))


# below this size of (k K)**(1/3) a failed residual means lost digits, not a wrong branch
SMALL_POWER = mpf(10) ** -6


def _digits_for(power, ctx):
    return ctx.working_digits + int(math.ceil(-float(mpmath.log10(power)))) + 10


def _discriminating_power(k, K):
    """Size of the cube-root term of the degree-5 equation, which separates the Y candidates."""
    return abs(principal_root(k * K, 3))


def y_root(s, k_r, ctx=None):
    """The root Y whose k_25r = Psi(...) satisfies the degree-5 equation with k_r.

    Returns (Y, k_25r, residual).
    """
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        k_r = mpmath.mpmathify(k_r)
        kk = 4 * k_r * k_r * (1 - k_r * k_r)
        scored = []
        for Y in y_roots(s, ctx):
            K = _modulus_from_E(kk * Y ** 12)
            scored.append((abs(modular5_residual(k_r, K)), Y, K))
        scored.sort(key=lambda row: row[0])
        res, Y, K = scored[0]
        power = _discriminating_power(k_r, K)
        if power < ctx.tol * 10 ** 6 or (not res <= ctx.tol and power < SMALL_POWER):
            raise PrecisionError(
                f"k_r k_25r is too small to select the Y branch at {ctx.working_digits} digits",
                suggested_digits=_digits_for(power, ctx),
            )
        if not res <= ctx.tol:
            raise BranchError(
                "no root Y gives a k_25r satisfying the degree-5 modular equation",
                residuals=[mpmath.nstr(row[0], 5) for row in scored],
            )
        return Y, K, res


@dataclass(frozen=True)
class AscentState:
    k_base: mpf
    k_down: mpf
    x: mpc
    alpha: mpc
    p: mpc
    s: mpc
    Y: mpc
    k_up: mpc
    residual: mpf


def ascent_argument(k_r, k_down):
    """(k_r k'_r / (k_{r/25} k'_{r/25}))**(1/12), principal branch."""
    kp = mpmath.sqrt(1 - k_r * k_r)
    kdp = mpmath.sqrt(1 - k_down * k_down)
    return principal_root(k_r * kp / (k_down * kdp), 12)


def psi_state(k_r, k_down, ctx=None):
    """Every intermediate of k_25r = Psi(k_r, k_{r/25})."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        k_r = mpmath.mpmathify(k_r)
        k_down = mpmath.mpmathify(k_down)
        if k_r == 0 or k_down == 0:
            raise DomainError("psi needs nonzero moduli")
        x = ascent_argument(k_r, k_down)
        alpha = u_star(x, ctx) ** 6
        p = p_from_alpha(alpha, ctx)
        s = s_from_p(p, ctx)
        Y, K, res = y_root(s, k_r, ctx)
        return AscentState(k_r, k_down, x, alpha, p, s, Y, _realify(K, k_r, k_down), res)


def psi(k_r, k_down, ctx=None):
    """k_25r from k_r and k_{r/25}."""
    return psi_state(k_r, k_down, ctx).k_up


def ascend_25n(k_r0, k_r0_down, n, ctx=None):
    """[k_{25 r0}, k_{625 r0}, ..., k_{25**n r0}] by iterating P(x) = sqrt(Y).

    Uses the product form
        k_{25^j r0} = sqrt(1/2 - 1/2 sqrt(1 - 4 (k k')**2 prod_{i<=j} P^(i)(x)**24))
    with k = k_{r0}; each factor's Y is selected by the degree-5 equation.
    """
    ctx = resolve(ctx)
    if n < 1:
        raise ValueError("n must be >= 1")
    with ctx.workdps(GUARD):
        k0 = mpmath.mpmathify(k_r0)
        kk0 = 4 * k0 * k0 * (1 - k0 * k0)
        k_down, k_cur = mpmath.mpmathify(k_r0_down), k0
        x = ascent_argument(k_cur, k_down)
        product = mpf(1)
        out = []
        for _ in range(n):
            alpha = u_star(x, ctx) ** 6
            s = s_from_p(p_from_alpha(alpha, ctx), ctx)
            scored = []
            for Y in y_roots(s, ctx):
                # P(x)**24 = Y**12
                K = _modulus_from_E(kk0 * product * Y ** 12)
                scored.append((abs(modular5_residual(k_cur, K)), Y, K))
            scored.sort(key=lambda row: row[0])
            res, Y, K = scored[0]
            power = _discriminating_power(k_cur, K)
            if power < ctx.tol * 10 ** 6 or (not res <= ctx.tol and power < SMALL_POWER):
                raise PrecisionError(
                    f"step {len(out) + 1} needs more digits to select the Y branch",
                    suggested_digits=_digits_for(power, ctx),
                )
            if not res <= ctx.tol:
                raise BranchError(f"ascent step {len(out) + 1}: no Y satisfies the degree-5 equation")
            product *= Y ** 12
            x = mpmath.sqrt(Y)
            K = _realify(K, k_r0, k_r0_down)
            out.append(K)
            k_down, k_cur = k_cur, K
        return out


__all__ = [
    "AscentState",
    "T3Candidate",
    "TBranch",
    "alpha_from_p",
    "ascend_25n",
    "ascent_argument",
    "depressed_residual",
    "f1",
    "modular5_residual",
    "modulus_orbit",
    "p_from_alpha",
    "psi",
    "psi_state",
    "q_of_p",
    "real_modulus",
    "rrcf_degree2_residual",
    "rrcf_degree5_rhs",
    "s_from_p",
    "t1",
    "t2",
    "t3",
    "t3_candidates",
    "t4",
    "t5",
    "t6",
    "t7",
    "u_fwd",
    "u_relation_residual",
    "u_star",
    "y_root",
    "y_roots",
]
