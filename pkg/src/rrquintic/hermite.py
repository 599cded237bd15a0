"""Hermite's elliptic solution of x**5 - x + a = 0.

For real a above a_min = 4 * 5**(-5/4) a modulus k with

    a = 2 (1 + k**2) / (5**(5/4) sqrt(k) k')

exists on either side of k = sqrt(2) - 1 (where a attains a_min), and a root
is Phi(tau) / (2 * 5**(3/4) * k**(1/4) * k') with tau = i sqrt(r), r the
singular parameter of k.  Other values of a are reached by continuing that
root along a path in the a-plane that avoids the four branch points
a_min * {1, i, -1, -i}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mp, mpc, mpf

from . import modular as mod
from .numeric import (
    BranchError,
    ContinuationError,
    DomainError,
    NoSolutionError,
    QuinticError,
    principal_root,
    resolve,
)
from .special import Nome, complete_K, rrcf, singular_modulus, theta

GUARD = 10


def a_min():
    """Minimum of a(k) over 0 < k < 1, attained at k = sqrt(2) - 1."""
    return 4 * mpf(5) ** (-mpf(5) / 4)


def k_at_minimum():
    return mpmath.sqrt(2) - 1


def a_of_modulus(k, ctx=None):
    """a = 2 (1 + k**2) / (5**(5/4) sqrt(k) sqrt(1 - k**2))."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        k = mpmath.mpmathify(k)
        return 2 * (1 + k * k) / (mpf(5) ** (mpf(5) / 4) * mpmath.sqrt(k) * mpmath.sqrt(1 - k * k))


def modulus_from_a(a, side="low", ctx=None):
    """Invert a(k) by bisection on one monotone half of (0, 1).

    ``side='low'`` returns k < sqrt(2) - 1, ``side='high'`` k > sqrt(2) - 1.
    """
    ctx = resolve(ctx)
    if side not in ("low", "high"):
        raise ValueError("side must be 'low' or 'high'")
    with ctx.workdps(GUARD):
        a = mpmath.mpmathify(a)
        if isinstance(a, mpc):
            if a.imag != 0:
                raise DomainError("modulus_from_a needs real a; complex a goes through hermite_root")
            a = a.real
        amin = a_min()
        if a < amin:
            raise NoSolutionError(f"a = {mpmath.nstr(a, 10)} is below a_min = {mpmath.nstr(amin, 12)}", a_min=amin)
        kmin = k_at_minimum()
        if a == amin:
            return kmin
        width = mpf(10) ** (-ctx.working_digits - 5)
        if side == "low":
            # a ~ 2 / (5**(5/4) sqrt(k)) as k -> 0
            lo = min(kmin / 2, (2 / (mpf(5) ** (mpf(5) / 4) * a)) ** 2 / 4)
            while a_of_modulus(lo, ctx) < a:
                lo /= 4
            hi = kmin
            decreasing = True
        else:
            lo = kmin
            gap = mpf(1) / 4
            while a_of_modulus(1 - gap, ctx) < a:
                gap /= 4
            hi = 1 - gap
            decreasing = False
        while hi - lo > width * hi:
            mid = (lo + hi) / 2
            above = a_of_modulus(mid, ctx) > a
            if above == decreasing:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2


def nome_from_modulus(k, ctx=None):
    """(q, r) with r = (K(k')/K(k))**2 and q = exp(-pi sqrt(r))."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        k = mpmath.mpmathify(k)
        if not 0 < k < 1:
            raise DomainError("nome_from_modulus needs 0 < k < 1")
        kp = mpmath.sqrt(1 - k * k)
        ratio = complete_K(kp, ctx, kprime=k) / complete_K(k, ctx, kprime=kp)
        r = ratio ** 2
        return mpmath.exp(-mpmath.pi * ratio), r


def m_of_tau(tau, ctx=None):
    """m(q) = theta_2**2/theta_3**2 at q = exp(i pi tau)."""
    return singular_modulus(Nome(tau=tau), ctx)


def m_of_nome(Q, ctx=None):
    """m at a complex nome value, with tau = log(Q)/(i pi) (principal logarithm)."""
    return m_of_tau(mpmath.log(Q) / (mpc(0, 1) * mpmath.pi), ctx)


def phi(sigma, ctx=None):
    """phi(sigma) = sqrt(theta_2/theta_3) at q = exp(i pi sigma), q**(1/4) = exp(i pi sigma/4)."""
    nome = Nome(tau=sigma)
    return mpmath.sqrt(theta(2, nome, ctx) / theta(3, nome, ctx))


def hermite_phi_product(tau, ctx=None):
    """Phi(tau) = [m(q**5)**(1/4) + m(q**(1/5))**(1/4)] (phi_16 - phi_64)(phi_32 - phi_48)

    where phi_c = phi((tau + c)/5).
    """
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        tau = mpmath.mpmathify(tau)
        if mpmath.im(tau) <= 0:
            raise DomainError("Phi needs Im(tau) > 0")
        head = principal_root(m_of_tau(5 * tau, ctx), 4) + principal_root(m_of_tau(tau / 5, ctx), 4)
        p = [phi((tau + c) / 5, ctx) for c in (16, 64, 32, 48)]
        return head * (p[0] - p[1]) * (p[2] - p[3])


def hermite_phi_alternative(tau, ctx=None):
    """-4 [m(q**5)**(1/4) + m(q**(1/5))**(1/4)] Re[m(-(-q)**(1/5))**(1/4)] Im[F(c1)**(1/4)]

    with c1 = m(-(-q**(1/2))**(1/5)) and F(c) = (1 - sqrt(1 - c**2))/(1 + sqrt(1 - c**2)),
    nomes taken on the principal branch.
    """
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        tau = mpmath.mpmathify(tau)
        q = mpmath.expjpi(tau)
        head = principal_root(m_of_tau(5 * tau, ctx), 4) + principal_root(m_of_tau(tau / 5, ctx), 4)
        mm = m_of_nome(-principal_root(-q, 5), ctx)
        c1 = m_of_nome(-principal_root(-mpmath.sqrt(q), 5), ctx)
        F = (1 - mpmath.sqrt(1 - c1 ** 2)) / (1 + mpmath.sqrt(1 - c1 ** 2))
        return -4 * head * mpmath.re(principal_root(mm, 4)) * mpmath.im(principal_root(F, 4))


@dataclass(frozen=True)
class HermiteContext:
    a: mpf
    k: mpf
    r: mpf
    tau: mpc
    phi_values: tuple
    raw_root: mpc


def hermite_context(a, side="low", ctx=None):
    """Modulus, nome and the Phi evaluation for a real feasible a."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        k = modulus_from_a(a, side, ctx)
        _, r = nome_from_modulus(k, ctx)
        tau = mpc(0, mpmath.sqrt(r))
        kp = mpmath.sqrt(1 - k * k)
        phis = tuple(phi((tau + c) / 5, ctx) for c in (16, 64, 32, 48))
        Phi = hermite_phi_product(tau, ctx)
        x = Phi / (2 * mpf(5) ** (mpf(3) / 4) * principal_root(k, 4) * kp)
        return HermiteContext(mpmath.mpmathify(a), k, r, tau, phis, x)


def _residual(x, a):
    return abs(x ** 5 - x + a) / max(1, abs(x) ** 5)


def _newton(x, a, max_iter=60):
    eps = mpf(2) ** (-mp.prec + 6)
    for _ in range(max_iter):
        d = 5 * x ** 4 - 1
        if d == 0:
            return x, False
        step = (x ** 5 - x + a) / d
        x -= step
        if abs(step) <= eps * max(1, abs(x)):
            return x, True
    return x, False


def _track(x, path, ctx):
    """Continue a root of x**5 - x + a through the points of ``path``."""
    collision = mpf(10) ** (-(ctx.working_digits // 4))
    a = path[0]
    for target in path[1:]:
        todo = [target]
        while todo:
            nxt = todo[-1]
            d = 5 * x ** 4 - 1
            if abs(d) < collision:
                raise ContinuationError("root collision on the continuation path", stage="hermite")
            pred = x - (nxt - a) / d
            cand, ok = _newton(pred, nxt)
            if ok and abs(cand - pred) <= abs(pred - x) / 4 + mpf(2) ** (-mp.prec + 20):
                x, a = cand, nxt
                todo.pop()
            else:
                if abs(nxt - a) < mpf(10) ** (-12):
                    raise ContinuationError("continuation stalled", stage="hermite")
                todo.append((a + nxt) / 2)
    return x


def _arc(radius, start, stop, n=None):
    """Points on |a| = radius from angle start to stop."""
    span = stop - start
    n = n or max(2, int(abs(span) / (mpmath.pi / 48)) + 1)
    return [radius * mpmath.expj(start + span * i / n) for i in range(n + 1)]


def _segment(a0, a1, spacing):
    n = max(1, int(abs(a1 - a0) / spacing) + 1)
    return [a0 + (a1 - a0) * i / n for i in range(n + 1)]


def continuation_path(a):
    """A path from a real feasible start to ``a`` that keeps away from the branch points.

    Returns (a_start, points).  Branch points lie on |a| = a_min at angles k pi/2.
    """
    amin = a_min()
    R = abs(a)
    theta_a = mpmath.arg(a) if a != 0 else mpmath.pi / 4
    if R >= mpf("1.2") * amin:
        return R, _arc(R, mpf(0), theta_a)
    outer = mpf("1.5") * amin
    # diagonal between branch points, nearest to arg(a)
    diag = (mpmath.floor(theta_a / (mpmath.pi / 2)) + mpf(1) / 2) * mpmath.pi / 2
    pts = _arc(outer, mpf(0), diag)
    pts += _segment(pts[-1], R * mpmath.expj(diag), amin / 24)[1:]
    if R:
        pts += _arc(R, diag, theta_a)[1:]
    return outer, pts


def _canonical(a):
    """(sign, a') with a' in the half-plane Re > 0 (or on the upper imaginary axis)."""
    re, im = mpmath.re(a), mpmath.im(a)
    if re < 0 or (re == 0 and im < 0):
        return -1, -a
    return 1, a


@dataclass(frozen=True)
class HermiteResult:
    root: mpc
    residual_raw: mpf
    residual: mpf
    epsilon0: int
    side: str
    continued: bool
    notes: tuple = field(default_factory=tuple)


def hermite_real_root(a, side="low", ctx=None):
    """Hermite root for real a >= a_min; the sign eps0 is fixed by the residual."""
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        hc = hermite_context(a, side, ctx)
        cands = [(hc.raw_root, 1), (-hc.raw_root, -1)]
        x, eps0 = min(cands, key=lambda c: _residual(c[0], hc.a))
        raw = _residual(x, hc.a)
        if raw > mpmath.sqrt(ctx.tol):
            raise BranchError(
                "neither sign of the Hermite expression solves x**5 - x + a",
                stage="hermite", residual=mpmath.nstr(raw, 5),
            )
        return x, raw, eps0


def hermite_root(a, side="low", ctx=None, *, detail=False):
    """A root of x**5 - x + a = 0 by Hermite's method (continued for non-feasible a).

    Odd symmetry is used to keep a in the right half-plane, so negating a
    negates the returned root.
    """
    ctx = resolve(ctx)
    with ctx.workdps(GUARD):
        a = mpmath.mpmathify(a)
        sign, a_c = _canonical(a)
        amin = a_min()
        notes = []
        real_feasible = mpmath.im(a_c) == 0 and mpmath.re(a_c) >= amin
        if real_feasible:
            x, raw, eps0 = hermite_real_root(mpmath.re(a_c), side, ctx)
            continued = False
        else:
            a0, path = continuation_path(mpc(a_c))
            x0, raw, eps0 = hermite_real_root(a0, side, ctx)
            notes.append(f"continued from real a = {mpmath.nstr(a0, 10)} over {len(path)} points")
            x = _track(x0, [mpc(p) for p in path], ctx)
            continued = True
        x, _ = _newton(x, a_c)
        res = _residual(x, a_c)
        if res > ctx.tol:
            raise BranchError("Hermite root failed the residual check after polishing", stage="hermite")
        if mpmath.im(a_c) == 0 and abs(mpmath.im(x)) <= ctx.tol * max(1, abs(x)):
            x = mpmath.re(x)
        x = sign * x
        result = HermiteResult(x, raw, res, eps0, side, continued, tuple(notes))
        return result if detail else x


# --- Main-theorem validator -------------------------------------------------------

def _safe(fn):
    try:
        return fn(), ""
    except QuinticError as exc:
        return None, f"{type(exc).__name__}: {exc}"


def main_theorem_pipeline(r, ctx=None):
    """Evaluate the radical pipeline from R(q), q = exp(-pi sqrt(r)), 15 < r < 25.

    Reports each intermediate next to an independent theta-function value and
    the residual of the composite root formula under two readings (as printed,
    and with the fourth roots restored on l and on the Re[...] factor).  This
    is a validator; it never gates the solver.
    """
    ctx = resolve(ctx)
    r_exact = Fraction(r) if isinstance(r, (int, str)) else r
    rv = mpmath.mpmathify(r) if not isinstance(r_exact, Fraction) else mpf(r_exact.numerator) / r_exact.denominator
    report = {"r": str(r), "in_window": bool(15 < rv < 25), "notes": []}
    with ctx.workdps(GUARD):
        nome = Nome.from_r(r_exact)
        q = nome.value()
        R = rrcf(nome, ctx=ctx).v
        t = mod.t3(mod.t2(mod.t1(R, ctx), ctx), mod.TBranch.T34, ctx)
        l = mod.t3(mod.t2(mod.t4(mod.t1(R, ctx), ctx), ctx), mod.TBranch.T33, ctx)
        for name, val, large in (("t", t, False), ("l", l, True)):
            fixed = mod.real_modulus(val, large, ctx)
            if abs(fixed - val) > mpmath.sqrt(ctx.tol):
                report["notes"].append(f"{name}: radical branch gave {mpmath.nstr(val, 12)}, moved to {mpmath.nstr(fixed, 12)}")
            if name == "t":
                t = fixed
            else:
                l = fixed
        t_theta = singular_modulus(nome, ctx)
        l_theta = singular_modulus(nome.raised(Fraction(1, 5)), ctx)
        report["t"] = t
        report["t_theta"] = t_theta
        report["t_error"] = abs(t - t_theta)
        report["l"] = l
        report["l_theta"] = l_theta
        report["l_error"] = abs(l - l_theta)

        st = mod.psi_state(t, l, ctx)
        report.update(alpha=st.alpha, p=st.p, s=st.s, Y=st.Y, k25=st.k_up)
        k25_theta = singular_modulus(nome.raised(5), ctx)
        report["k25_error"] = abs(st.k_up - k25_theta) / abs(k25_theta)
        a = a_of_modulus(t, ctx)
        report["a"] = a

        w6, note = _safe(lambda: mod.t6(R, experimental=True, ctx=ctx))
        if note:
            report["notes"].append(note)
        m5, note = _safe(lambda: mod.t3(mod.t2(mod.t1(mod.t4(w6, ctx), ctx), ctx), mod.TBranch.T34, ctx))
        if note:
            report["notes"].append(note)
        m5_theta = m_of_nome(-principal_root(-q, 5), ctx)
        report["m_neg_fifth"] = m5
        report["m_neg_fifth_theta"] = m5_theta
        report["m_neg_fifth_error"] = None if m5 is None else abs(m5 - m5_theta)

        c1_chain, note = _safe(
            lambda: mod.t3(mod.t2(mod.t1(mod.t4(mod.t6(mod.t7(R, ctx), experimental=True, ctx=ctx), ctx), ctx), ctx),
                           mod.TBranch.T34, ctx)
        )
        if note:
            report["notes"].append(note)
        c1_theta = m_of_nome(-principal_root(-mpmath.sqrt(q), 5), ctx)
        report["c1_chain"] = c1_chain
        report["c1_theta"] = c1_theta
        report["c1_error"] = None if c1_chain is None else abs(c1_chain - c1_theta)

        k25_radical = mod._modulus_from_E(4 * t * t * (1 - t * t) * st.Y ** 12)
        denom = 2 * mpf(5) ** (mpf(3) / 4) * principal_root(t, 4) * mpmath.sqrt(1 - t * t)

        def root_formula(c1, m5v, restored):
            F = (1 - mpmath.sqrt(1 - c1 ** 2)) / (1 + mpmath.sqrt(1 - c1 ** 2))
            lterm = principal_root(l, 4) if restored else l
            re_term = mpmath.re(principal_root(m5v, 4) if restored else m5v)
            return -4 * (principal_root(k25_radical, 4) + lterm) * re_term * mpmath.im(principal_root(F, 4)) / denom

        def best_residual(x):
            return min(abs(x ** 5 - x + a), abs(x ** 5 - x - a)) / max(1, abs(x) ** 5)

        readings = {}
        for label, c1, m5v in (("chain", c1_chain, m5), ("theta", c1_theta, m5_theta)):
            if c1 is None or m5v is None:
                continue
            for restored in (False, True):
                x = root_formula(c1, m5v, restored)
                key = f"{label}-{'restored' if restored else 'printed'}"
                readings[key] = {"x": x, "residual": best_residual(x)}
        report["root_readings"] = readings
        hc = hermite_context(a, "low", ctx)
        report["phi_product"] = hermite_phi_product(hc.tau, ctx)
        report["phi_alternative"] = hermite_phi_alternative(hc.tau, ctx)
        P, A = report["phi_product"], report["phi_alternative"]
        report["phi_forms_error"] = min(abs(P - A), abs(P + A)) / abs(P)
        report["phi_forms_sign"] = 1 if abs(P - A) <= abs(P + A) else -1
        report["hermite_residual"] = best_residual(hc.raw_root)
    return report


__all__ = [
    "HermiteContext",
    "HermiteResult",
    "a_min",
    "a_of_modulus",
    "continuation_path",
    "hermite_context",
    "hermite_phi_alternative",
    "hermite_phi_product",
    "hermite_real_root",
    "hermite_root",
    "k_at_minimum",
    "m_of_nome",
    "m_of_tau",
    "main_theorem_pipeline",
    "modulus_from_a",
    "nome_from_modulus",
    "phi",
]
