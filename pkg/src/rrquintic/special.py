"""Theta functions, singular moduli, K, the Rogers-Ramanujan continued fraction, eta and j.

Every routine evaluates at the precision of an explicit :class:`NumericContext`
(default 40 digits).  Series and products are truncated once the next term
drops below the working epsilon relative to the partial result, followed by
a fixed safety margin of ``SAFETY_TERMS`` extra terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpc, mpf

from .numeric import (
    DivergenceError,
    DomainError,
    PoleError,
    PrecisionError,
    deep_nome_digits,
    resolve,
)

SAFETY_TERMS = 8
MAX_SERIES_TERMS = 200_000
MAX_CF_DEPTH = 1 << 14


def _num(x):
    """Exact-ish inputs (int, Fraction, str) become mpmath numbers at the current precision."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, str):
        if "/" in x:
            return _num(Fraction(x))
        return mpmath.mpmathify(x)
    return mpmath.mpmathify(x)


class Nome:
    """A nome q with |q| < 1, optionally tied to a singular parameter r or to tau.

    When ``r`` or ``tau`` is known the nome is re-evaluated at the current
    working precision, and fractional powers follow q**e = exp(i*pi*tau*e)
    instead of the principal branch.
    """

    __slots__ = ("_q", "r", "tau")

    def __init__(self, q=None, r=None, tau=None):
        if q is None and r is None and tau is None:
            raise ValueError("Nome needs q, r or tau")
        self._q = q
        self.r = r
        self.tau = tau

    @classmethod
    def from_r(cls, r):
        if _num(r) <= 0:
            raise DomainError(f"singular parameter must be positive, got {r}")
        return cls(r=r)

    @classmethod
    def from_tau(cls, tau):
        if mpmath.im(_num(tau)) <= 0:
            raise DomainError(f"tau must lie in the upper half-plane, got {tau}")
        return cls(tau=tau)

    def tau_value(self):
        if self.tau is not None:
            return mpc(_num(self.tau))
        if self.r is not None:
            return mpc(0, mpmath.sqrt(_num(self.r)))
        return None

    def value(self):
        if self.r is not None:
            return mpmath.exp(-mpmath.pi * mpmath.sqrt(_num(self.r)))
        if self.tau is not None:
            return mpmath.expjpi(_num(self.tau))
        return mpmath.mpmathify(self._q)

    @property
    def q(self):
        return self.value()

    def power(self, e):
        """q**e on the branch fixed by tau when available, otherwise principal."""
        if self.r is not None:
            return mpmath.exp(-mpmath.pi * mpmath.sqrt(_num(self.r)) * _num(e))
        if self.tau is not None:
            return mpmath.expjpi(_num(self.tau) * _num(e))
        Q = self.value()
        if Q == 0:
            return mpf(0)
        if isinstance(Q, mpf) and Q > 0:
            return Q ** _num(e)
        return mpc(Q) ** _num(e)

    def raised(self, m):
        """The nome q**m (m > 0), keeping r / tau bookkeeping."""
        if isinstance(m, (int, str)):
            m = Fraction(m)
        if self.r is not None:
            if isinstance(self.r, (int, Fraction)) and isinstance(m, Fraction):
                return Nome(r=Fraction(self.r) * m * m)
            return Nome(r=_num(self.r) * _num(m) ** 2)
        if self.tau is not None:
            return Nome(tau=_num(self.tau) * _num(m))
        return Nome(q=self.power(m))

    def negated(self):
        """The nome -q, realised as tau - 1 when tau is known."""
        tau = self.tau_value()
        if tau is not None:
            return Nome(tau=tau - 1)
        return Nome(q=-self.value())

    def __repr__(self):
        if self.r is not None:
            return f"Nome(r={self.r})"
        if self.tau is not None:
            return f"Nome(tau={self.tau})"
        return f"Nome(q={self._q})"


def as_nome(q):
    return q if isinstance(q, Nome) else Nome(q=q)


@dataclass(frozen=True)
class EllipticContext:
    r: object
    q: Nome
    k: object
    k_prime: object
    ratio: object


@dataclass(frozen=True)
class RRCFValue:
    v: object
    nome: Nome

    def __complex__(self):
        return complex(self.v)


def _check_nome(Q):
    if abs(Q) >= 1:
        raise DomainError(f"nome must satisfy |q| < 1, got |q| = {mpmath.nstr(abs(Q), 8)}")


def _lacunary_sum(Q, first, step0, sign=1):
    """Sum of Q**e_n, n = 0, 1, ..., where e_0 = first and e_{n+1} - e_n = step0 + 2n."""
    eps = mpf(2) ** (-mp.prec)
    term = Q ** first
    q2 = Q * Q
    gap = Q ** step0
    total = term
    coef = 1
    extra = 0
    for _ in range(MAX_SERIES_TERMS):
        term *= gap
        gap *= q2
        coef *= sign
        total += coef * term
        if abs(term) <= eps * abs(total) or term == 0:
            extra += 1
            if extra > SAFETY_TERMS:
                return total
    raise PrecisionError("theta series did not converge; the nome is too close to the unit circle")


def theta(selector, q, ctx=None):
    """Null theta function theta_2, theta_3 or theta_4 at the nome ``q``."""
    ctx = resolve(ctx)
    if selector not in (2, 3, 4):
        raise ValueError(f"theta selector must be 2, 3 or 4, got {selector}")
    nome = as_nome(q)
    with ctx.workdps(10):
        Q = nome.value()
        _check_nome(Q)
        if Q == 0:
            return mpf(0) if selector == 2 else mpf(1)
        if selector == 2:
            # q**((n + 1/2)**2) = q**(1/4) * q**(n*(n+1))
            return 2 * nome.power(Fraction(1, 4)) * _lacunary_sum(Q, 0, 2)
        if selector == 3:
            return 1 + 2 * _lacunary_sum(Q, 1, 3)
        return 1 - 2 * _lacunary_sum(Q, 1, 3, sign=-1)


def singular_modulus(q, ctx=None):
    """k = theta_2(q)**2 / theta_3(q)**2."""
    ctx = resolve(ctx)
    with ctx.workdps(10):
        return theta(2, q, ctx) ** 2 / theta(3, q, ctx) ** 2


def _agm(a, b):
    eps = mpf(2) ** (-mp.prec + 4)
    for _ in range(10_000):
        if abs(a - b) <= eps * abs(a):
            return (a + b) / 2
        a, b = (a + b) / 2, mpmath.sqrt(a * b)
        if isinstance(b, mpc) and abs(a - b) > abs(a + b):
            b = -b
    raise DivergenceError("arithmetic-geometric mean failed to converge")


def _k_series(x2):
    eps = mpf(2) ** (-mp.prec)
    term = mpf(1)
    total = mpf(1)
    n = 0
    extra = 0
    while extra <= SAFETY_TERMS:
        term *= ((n + mpf(1) / 2) / (n + 1)) ** 2 * x2
        total += term
        n += 1
        if abs(term) <= eps * abs(total):
            extra += 1
        if n > MAX_SERIES_TERMS:
            raise DivergenceError("hypergeometric series for K did not converge")
    return mpmath.pi / 2 * total


def complete_K(x, ctx=None, *, kprime=None, method="auto"):
    """Complete elliptic integral of the first kind K(x), modulus convention.

    Uses the 2F1(1/2, 1/2; 1; x**2) series when |x|**2 <= 1/2 and the
    arithmetic-geometric mean otherwise.  ``kprime`` may supply an accurate
    complementary modulus sqrt(1 - x**2) when x is close to 1.
    """
    ctx = resolve(ctx)
    with ctx.workdps(10):
        x = mpmath.mpmathify(x)
        x2 = x * x
        if kprime is None and (x2 - 1) == 0:
            raise DivergenceError("K(x) diverges at x = +-1")
        if mpmath.im(x2) == 0 and mpmath.re(x2) > 1:
            raise DomainError("x**2 lies on the branch cut [1, oo) of K")
        if method == "series" or (method == "auto" and abs(x2) <= 0.5 and kprime is None):
            return _k_series(x2)
        kp = kprime if kprime is not None else mpmath.sqrt(1 - x2)
        if kp == 0:
            raise DivergenceError("K(x) diverges at x = +-1")
        return mpmath.pi / (2 * _agm(mpf(1), kp))


def _modulus_pair(t):
    """(x, x') = (e**t, 1) / sqrt(1 + e**(2t)); both accurate for any real t."""
    if t > 0:
        u = mpmath.exp(-t)
        s = mpmath.sqrt(1 + u * u)
        return 1 / s, u / s
    u = mpmath.exp(t)
    s = mpmath.sqrt(1 + u * u)
    return u / s, 1 / s


def period_ratio(x, xprime=None, ctx=None):
    """K(x') / K(x)."""
    ctx = resolve(ctx)
    with ctx.workdps(10):
        if xprime is None:
            xprime = mpmath.sqrt(1 - mpmath.mpmathify(x) ** 2)
        return complete_K(xprime, ctx, kprime=x) / complete_K(x, ctx, kprime=xprime)


def modulus_from_r(r, ctx=None):
    """Solve K(k')/K(k) = sqrt(r) for the singular modulus k_r by bisection.

    For r >= 100 (or r <= 1/100) the precision is raised automatically so that
    k_r ~ 4 exp(-pi sqrt(r) / 2) remains resolvable.
    """
    ctx = resolve(ctx)
    ctx = ctx.at_least(deep_nome_digits(_num(r)))
    digits = ctx.working_digits
    with ctx.workdps(10):
        rv = _num(r)
        if rv <= 0:
            raise DomainError(f"r must be positive, got {r}")
        target = mpmath.sqrt(rv)
        bound = mpmath.log(mpf(10)) * digits / 2
        lo, hi = -bound, bound
        width = mpf(10) ** (-digits - 2)

        def ratio_at(t):
            x, xp = _modulus_pair(t)
            return complete_K(xp, ctx, kprime=x) / complete_K(x, ctx, kprime=xp)

        if not ratio_at(hi) < target < ratio_at(lo):
            raise PrecisionError(
                f"k_{r} lies outside the representable bracket at {digits} digits",
                suggested_digits=digits * 2,
            )
        while hi - lo > width * max(1, abs(lo)):
            mid = (lo + hi) / 2
            if ratio_at(mid) > target:
                lo = mid
            else:
                hi = mid
        k, kp = _modulus_pair((lo + hi) / 2)
        ratio = complete_K(kp, ctx, kprime=k) / complete_K(k, ctx, kprime=kp)
        if abs(ratio ** 2 - rv) > ctx.tol * max(1, rv):
            raise PrecisionError("period-ratio inversion missed its residual target", suggested_digits=digits + 20)
        return EllipticContext(r=r, q=Nome.from_r(r), k=k, k_prime=kp, ratio=ratio)


def _rr_backward(Q, depth, prefactor):
    powers = [mpf(1)] * (depth + 1)
    p = mpf(1)
    for n in range(1, depth + 1):
        p = p * Q
        powers[n] = p
    f = mpf(1)
    for n in range(depth, 0, -1):
        if f == 0:
            raise PoleError("continued fraction hit a zero denominator")
        f = 1 + powers[n] / f
    if f == 0:
        raise PoleError("continued fraction hit a zero denominator")
    return prefactor / f


def rrcf(q, depth=None, ctx=None):
    """Rogers-Ramanujan continued fraction by backward recurrence.

    With an explicit ``depth`` the value at that depth is returned after
    checking it against twice the depth; without one the depth is doubled
    until two successive values agree to working precision.
    """
    ctx = resolve(ctx)
    nome = as_nome(q)
    with ctx.workdps(10):
        Q = nome.value()
        _check_nome(Q)
        if Q == 0:
            return RRCFValue(mpf(0), nome)
        pre = nome.power(Fraction(1, 5))
        if depth is not None:
            if depth < 1:
                raise ValueError("depth must be positive")
            v = _rr_backward(Q, depth, pre)
            w = _rr_backward(Q, 2 * depth, pre)
            if abs(v - w) > ctx.tol * abs(w):
                raise PrecisionError(
                    f"continued fraction not converged at depth {depth}",
                    suggested_depth=4 * depth,
                )
            return RRCFValue(v, nome)
        eps = mpf(2) ** (-mp.prec + 8)
        n = 8
        v = _rr_backward(Q, n, pre)
        while n <= MAX_CF_DEPTH:
            w = _rr_backward(Q, 2 * n, pre)
            if abs(v - w) <= eps * abs(w):
                return RRCFValue(w, nome)
            v, n = w, 2 * n
        raise PrecisionError("continued fraction did not converge at maximum depth")


def _q_product(Q, factor, eps):
    """prod_{n>=1} factor(n) where factor(n) -> 1 geometrically."""
    total = mpf(1)
    extra = 0
    for n in range(1, MAX_SERIES_TERMS):
        f = factor(n)
        total *= f
        if abs(f - 1) <= eps:
            extra += 1
            if extra > SAFETY_TERMS:
                return total
    raise PrecisionError("q-product did not converge")


def ramanujan_quantity(a, b, p, q, ctx=None):
    """R(a, b, p; q) = q**c * prod (1-q^(pn-p+a))(1-q^(pn-a)) / ((1-q^(pn-p+b))(1-q^(pn-b))).

    c = (b - a)(p - a - b) / (2p).  R(1, 2, 5; q) is the Rogers-Ramanujan
    continued fraction; R(1, 3, 10; q) is used by the conjectural validators.
    """
    ctx = resolve(ctx)
    nome = as_nome(q)
    with ctx.workdps(10):
        Q = nome.value()
        _check_nome(Q)
        if Q == 0:
            return mpf(0)
        eps = mpf(2) ** (-mp.prec)

        def factor(n):
            num = (1 - Q ** (p * n - p + a)) * (1 - Q ** (p * n - a))
            den = (1 - Q ** (p * n - p + b)) * (1 - Q ** (p * n - b))
            return num / den

        return nome.power(Fraction((b - a) * (p - a - b), 2 * p)) * _q_product(Q, factor, eps)


def rrcf_product(q, ctx=None):
    """R(q) from its product expansion; an independent route to :func:`rrcf`."""
    return ramanujan_quantity(1, 2, 5, q, ctx)


def dedekind_eta(tau, ctx=None):
    """prod_{n>=1} (1 - q**n) with q = exp(i pi tau).

    This is the bare product: the conventional q**(1/24) prefactor is *not*
    included, and the nome is exp(i pi tau) rather than exp(2 i pi tau).
    :func:`j_from_eta` supplies the matching q**(-+1/24) factors.
    """
    ctx = resolve(ctx)
    with ctx.workdps(10):
        tau = mpmath.mpmathify(tau)
        if mpmath.im(tau) <= 0:
            raise DomainError(f"eta needs Im(tau) > 0, got tau = {tau}")
        Q = mpmath.expjpi(tau)
        eps = mpf(2) ** (-mp.prec)
        powers = [Q]

        def factor(n):
            if n > 1:
                powers[0] = powers[0] * Q
            return 1 - powers[0]

        return _q_product(Q, factor, eps)


def j_from_modulus(k, ctx=None):
    """Klein's j = 256 (k**2 + k'**4)**3 / (k k')**4 with k'**2 = 1 - k**2."""
    ctx = resolve(ctx)
    with ctx.workdps(10):
        k = mpmath.mpmathify(k)
        k2 = k * k
        kp2 = 1 - k2
        if k2 == 0 or kp2 == 0:
            raise PoleError("j has a pole at k in {0, 1, -1}")
        return 256 * (k2 + kp2 * kp2) ** 3 / (k2 * k2 * kp2 * kp2)


def j_from_eta(tau, ctx=None):
    """j through the bare eta product at tau and 2 tau."""
    ctx = resolve(ctx)
    with ctx.workdps(10):
        tau = mpmath.mpmathify(tau)
        e1 = dedekind_eta(tau, ctx)
        e2 = dedekind_eta(2 * tau, ctx)
        q24 = mpmath.expjpi(tau / 24)
        return ((e1 / (q24 * e2)) ** 16 + 16 * (q24 * e2 / e1) ** 8) ** 3


def eta_power8_from_modulus(r, ctx=None):
    """2**(8/3) / pi**4 * q**(-1/3) * k**(2/3) * k'**(8/3) * K(k)**4 at q = exp(-pi sqrt(r))."""
    ctx = resolve(ctx)
    ec = modulus_from_r(r, ctx)
    with ctx.workdps(10):
        q = ec.q.value()
        return (
            mpf(2) ** (mpf(8) / 3) / mpmath.pi ** 4 * q ** (-mpf(1) / 3)
            * ec.k ** (mpf(2) / 3) * ec.k_prime ** (mpf(8) / 3)
            * complete_K(ec.k, ctx, kprime=ec.k_prime) ** 4
        )


__all__ = [
    "EllipticContext",
    "Nome",
    "RRCFValue",
    "as_nome",
    "complete_K",
    "dedekind_eta",
    "eta_power8_from_modulus",
    "j_from_eta",
    "j_from_modulus",
    "modulus_from_r",
    "period_ratio",
    "ramanujan_quantity",
    "rrcf",
    "rrcf_product",
    "singular_modulus",
    "theta",
]
