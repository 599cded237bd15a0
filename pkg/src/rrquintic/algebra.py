"""Dense polynomials and closed-form cubic / quartic solvers."""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf

from .numeric import DegenerateInputError, principal_root


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with complex coefficients in ascending order."""

    coeffs: tuple

    def __post_init__(self):
        cs = [mpmath.mpmathify(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs or (len(cs) == 1 and cs[0] == 0):
            raise DegenerateInputError("the zero polynomial has no degree")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_descending(cls, coeffs):
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def from_roots(cls, roots):
        cs = [mpc(1)]
        for z in roots:
            nxt = [mpc(0)] * (len(cs) + 1)
            for i, c in enumerate(cs):
                nxt[i + 1] += c
                nxt[i] -= z * c
            cs = nxt
        return cls(tuple(cs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def descending(self):
        return list(reversed(self.coeffs))

    def __call__(self, x):
        acc = mpc(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def value_and_derivative(self, x):
        p = mpc(0)
        dp = mpc(0)
        for c in reversed(self.coeffs):
            dp = dp * x + p
            p = p * x + c
        return p, dp

    def derivative(self):
        if self.degree == 0:
            raise DegenerateInputError("derivative of a constant is the zero polynomial")
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def monic(self):
        lead = self.leading
        return Polynomial(tuple(c / lead for c in self.coeffs))

    def deflate(self, root):
        """Synthetic division by (x - root); returns (quotient, remainder)."""
        desc = self.descending()
        out = [desc[0]]
        for c in desc[1:]:
            out.append(c + out[-1] * root)
        rem = out.pop()
        return Polynomial.from_descending(out), rem

    def scaled_residual(self, x):
        """|p(x)| / max(1, |x|**deg), the acceptance metric for roots."""
        return abs(self(x)) / max(mpf(1), abs(x) ** self.degree)

    def __repr__(self):
        return f"Polynomial({[mpmath.nstr(c, 8) for c in self.coeffs]})"


def _newton_refine(coeffs_desc, x, iterations=4):
    """A few guarded Newton steps; keeps the iterate only while |p| decreases."""
    def ev(z):
        p = mpc(0)
        dp = mpc(0)
        for c in coeffs_desc:
            dp = dp * z + p
            p = p * z + c
        return p, dp

    p, dp = ev(x)
    for _ in range(iterations):
        if p == 0 or dp == 0:
            break
        y = x - p / dp
        py, dpy = ev(y)
        if abs(py) >= abs(p):
            break
        x, p, dp = y, py, dpy
    return x


def quadratic_roots(a, b, c):
    """Roots of a x**2 + b x + c without cancellation."""
    if a == 0:
        raise DegenerateInputError("leading coefficient of quadratic vanishes")
    disc = mpmath.sqrt(mpc(b) * b - 4 * a * c)
    # pick the sign that avoids cancellation in -b -+ disc
    if mpmath.re(mpmath.conj(b) * disc) < 0:
        disc = -disc
    big = -(b + disc) / 2
    if big == 0:
        return [mpc(0), mpc(0)]
    return [big / a, c / big]


def solve_cubic(a, b):
    """The three roots of x**3 = 3 a x + b.

    With x = A**(1/3) + B**(1/3) where A + B = b and A B = a**3, the cube
    roots are paired so that A**(1/3) * B**(1/3) = a.
    """
    a = mpc(a)
    b = mpc(b)
    A, B = quadratic_roots(mpf(1), -b, a ** 3)
    if abs(B) > abs(A):
        A, B = B, A
    if A == 0:
        return [mpc(0)] * 3
    cA = principal_root(A, 3)
    cB = a / cA
    w = mpmath.expjpi(mpf(2) / 3)
    w2 = mpmath.conj(w)
    roots = [cA + cB, cA * w + cB * w2, cA * w2 + cB * w]
    desc = [mpc(1), mpc(0), -3 * a, -b]
    return [_newton_refine(desc, z) for z in roots]


def cubic_roots(c2, c1, c0):
    """Roots of the monic cubic x**3 + c2 x**2 + c1 x + c0 via :func:`solve_cubic`."""
    c2, c1, c0 = mpc(c2), mpc(c1), mpc(c0)
    shift = c2 / 3
    P = c1 - c2 * shift
    Q = c0 - c1 * shift + 2 * shift ** 3
    zs = solve_cubic(-P / 3, -Q)
    desc = [mpc(1), c2, c1, c0]
    return [_newton_refine(desc, z - shift) for z in zs]


def solve_quartic(p):
    """All four roots of a degree-4 polynomial by Ferrari's method."""
    if not isinstance(p, Polynomial):
        p = Polynomial(tuple(p))
    if p.degree != 4:
        raise ValueError(f"solve_quartic needs degree 4, got {p.degree}")
    m = p.monic()
    e, d, c, b = (mpc(x) for x in m.coeffs[:4])
    shift = b / 4
    # depressed y**4 + P y**2 + Q y + R with x = y - b/4
    P = c - 6 * shift ** 2
    Q = d - 2 * c * shift + 8 * shift ** 3
    R = e - d * shift + c * shift ** 2 - 3 * shift ** 4
    scale = max(mpf(1), abs(P), abs(Q) ** (mpf(1) / 3), abs(R) ** (mpf(1) / 4))
    if abs(Q) <= mpf(2) ** (-mp.prec + 8) * scale ** 3:
        ys = []
        for z in quadratic_roots(mpf(1), P, R):
            s = mpmath.sqrt(z)
            ys += [s, -s]
    else:
        ms = cubic_roots(P, (P * P - 4 * R) / 4, -Q * Q / 8)
        mm = max(ms, key=abs)
        s = mpmath.sqrt(2 * mm)
        half = Q / (2 * s)
        ys = quadratic_roots(mpf(1), -s, P / 2 + mm + half) + quadratic_roots(mpf(1), s, P / 2 + mm - half)
    desc = m.descending()
    return [_newton_refine(desc, y - shift) for y in ys]


def power_sums(monic_coeffs_asc, count):
    """Power sums p_1..p_count of the roots of a monic polynomial (Newton's identities)."""
    n = len(monic_coeffs_asc) - 1
    # a_j is the coefficient of x**(n - j)
    a = [monic_coeffs_asc[n - j] for j in range(n + 1)]
    ps = [mpc(n)]
    for k in range(1, count + 1):
        s = mpc(0)
        for j in range(1, min(k - 1, n) + 1):
            s += a[j] * ps[k - j]
        if k <= n:
            s += k * a[k]
        ps.append(-s)
    return ps


def _poly_mul(f, g):
    out = [mpc(0)] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x == 0:
            continue
        for j, y in enumerate(g):
            out[i + j] += x * y
    return out


def image_polynomial(poly, transform):
    """Monic polynomial whose roots are transform(x_i) over the roots x_i of ``poly``.

    Computed from power sums of the x_i, so no root of ``poly`` is needed.
    Both arguments take ascending coefficients (``poly`` may be a Polynomial).
    """
    cs = list(poly.monic().coeffs) if isinstance(poly, Polynomial) else list(Polynomial(tuple(poly)).monic().coeffs)
    n = len(cs) - 1
    t = [mpc(x) for x in transform]
    deg_t = len(t) - 1
    ps = power_sums(cs, n * deg_t)
    P = [mpc(n)]
    tm = [mpc(1)]
    for _ in range(n):
        tm = _poly_mul(tm, t)
        P.append(sum(c * ps[k] for k, c in enumerate(tm)))
    # elementary symmetric functions e_1..e_n from the power sums
    e = [mpc(1)]
    for m in range(1, n + 1):
        acc = mpc(0)
        for i in range(1, m + 1):
            acc += (-1) ** (i - 1) * e[m - i] * P[i]
        e.append(acc / m)
    desc = [(-1) ** j * e[j] for j in range(n + 1)]
    return Polynomial.from_descending(desc)


def coefficient_scale(poly):
    """max(1, |c_{n-j}|**(1/j)) for a monic polynomial: a bound on the root size."""
    m = poly.monic()
    n = m.degree
    s = mpf(1)
    for j in range(1, n + 1):
        c = abs(m.coeffs[n - j])
        if c:
            s = max(s, c ** (mpf(1) / j))
    return s
