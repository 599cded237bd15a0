from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mpf, sqrt, pi, exp

from rrquintic.numeric import (
    DivergenceError,
    DomainError,
    NumericContext,
    PoleError,
    PrecisionError,
)
from rrquintic.special import (
    Nome,
    complete_K,
    dedekind_eta,
    eta_power8_from_modulus,
    j_from_eta,
    j_from_modulus,
    modulus_from_r,
    period_ratio,
    ramanujan_quantity,
    rrcf,
    rrcf_product,
    singular_modulus,
    theta,
)

TIGHT = mpf(10) ** -34


def k5_closed():
    s5 = sqrt(5)
    return sqrt((9 + 4 * s5 - 2 * sqrt(38 + 17 * s5)) / (18 + 8 * s5))


# theta ----------------------------------------------------------------------

def test_theta_at_zero(ctx):
    assert theta(3, 0, ctx) == 1
    assert theta(2, 0, ctx) == 0


@pytest.mark.parametrize("sel", [2, 3, 4])
@pytest.mark.parametrize("q", ["0.1", "0.5", "-0.3", "0.2+0.4j"])
def test_theta_matches_jtheta(ctx, sel, q):
    q = mpmath.mpmathify(q)
    assert abs(theta(sel, q, ctx) - mpmath.jtheta(sel, 0, q)) < TIGHT


def test_theta_rejects_outside_disk(ctx):
    with pytest.raises(DomainError):
        theta(3, 1, ctx)


def test_theta_ratio_known_moduli(ctx):
    assert abs(theta(2, exp(-pi), ctx) ** 2 / theta(3, exp(-pi), ctx) ** 2 - 1 / sqrt(2)) < TIGHT
    # k_2 belongs to q = exp(-pi sqrt 2); exp(-2 pi) gives k_4
    q2 = exp(-pi * sqrt(2))
    assert abs(theta(2, q2, ctx) ** 2 / theta(3, q2, ctx) ** 2 - (sqrt(2) - 1)) < TIGHT
    assert abs(theta(2, exp(-2 * pi), ctx) ** 2 / theta(3, exp(-2 * pi), ctx) ** 2 - (3 - 2 * sqrt(2))) < TIGHT


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.001, max_value=0.8))
def test_jacobi_quartic_identity(q):
    ctx = NumericContext(40)
    t2, t3, t4 = (theta(s, mpf(q), ctx) for s in (2, 3, 4))
    assert abs(t3 ** 4 - t2 ** 4 - t4 ** 4) < mpf(10) ** -32 * t3 ** 4


# singular modulus and K ---------------------------------------------------------

def test_singular_modulus_examples(ctx):
    assert abs(singular_modulus(exp(-2 * pi), ctx) - (3 - 2 * sqrt(2))) < TIGHT
    assert abs(singular_modulus(exp(-pi * sqrt(3)), ctx) - sqrt(2 - sqrt(3)) / 2) < TIGHT
    q = mpf(10) ** -12
    assert singular_modulus(q, ctx) / (4 * sqrt(q)) == pytest.approx(1, abs=1e-10)


def test_complete_K_values(ctx):
    assert abs(complete_K(0, ctx) - pi / 2) < TIGHT
    x = 1 / sqrt(2)
    oracle = mpmath.quad(lambda phi: 1 / sqrt(1 - mpmath.sin(phi) ** 2 / 2), [0, pi / 2])
    assert abs(complete_K(x, ctx) - oracle) < TIGHT
    assert abs(complete_K(x, ctx) - mpmath.ellipk(x * x)) < TIGHT


@pytest.mark.parametrize("x", ["0.3", "0.6", "0.7", "0.2+0.3j"])
def test_complete_K_methods_agree(ctx, x):
    x = mpmath.mpmathify(x)
    assert abs(complete_K(x, ctx, method="series") - complete_K(x, ctx, method="agm")) < TIGHT


def test_complete_K_errors(ctx):
    with pytest.raises(DivergenceError):
        complete_K(1, ctx)
    with pytest.raises(DomainError):
        complete_K(2, ctx)


def test_period_ratio_at_k2(ctx):
    assert abs(period_ratio(sqrt(2) - 1, ctx=ctx) - sqrt(2)) < TIGHT


def test_modulus_from_r_closed_forms(ctx):
    assert abs(modulus_from_r(1, ctx).k - 1 / sqrt(2)) < TIGHT
    k1p = 1 / sqrt(2)
    assert abs(modulus_from_r(4, ctx).k - (1 - k1p) / (1 + k1p)) < TIGHT
    assert abs(modulus_from_r(5, ctx).k - k5_closed()) < TIGHT


def test_modulus_from_r_rejects_nonpositive(ctx):
    with pytest.raises(DomainError):
        modulus_from_r(0, ctx)


def test_deep_modulus_escalates(ctx):
    # k_625 ~ 4 exp(-25 pi / 2) needs more than 40 digits to resolve
    ec = modulus_from_r(625, ctx)
    with mpmath.workdps(80):
        oracle = singular_modulus(Nome.from_r(625), NumericContext(80))
    assert abs(ec.k - oracle) / oracle < mpf(10) ** -30


@settings(max_examples=20, deadline=None)
@given(st.fractions(min_value=Fraction(1, 20), max_value=60, max_denominator=50))
def test_modulus_from_r_invariants(r):
    ctx = NumericContext(40)
    ec = modulus_from_r(r, ctx)
    assert abs(ec.k ** 2 + ec.k_prime ** 2 - 1) < ctx.tol
    assert abs(ec.ratio ** 2 - mpf(r.numerator) / r.denominator) < ctx.tol * max(1, r)
    assert abs(ec.k - singular_modulus(Nome.from_r(r), ctx)) < ctx.tol


# Rogers-Ramanujan continued fraction ------------------------------------------

def test_rrcf_closed_form(ctx):
    value = rrcf(exp(-2 * pi), ctx=ctx).v
    assert abs(value - (-(1 + sqrt(5)) / 2 + sqrt((5 + sqrt(5)) / 2))) < TIGHT
    assert 0 < value < 1


def test_rrcf_small_nome(ctx):
    q = mpf(10) ** -20
    assert rrcf(q, ctx=ctx).v / q ** (mpf(1) / 5) == pytest.approx(1, abs=1e-15)
    assert rrcf(0, ctx=ctx).v == 0


def test_rrcf_fifth_power_relation(ctx):
    R = rrcf(exp(-2 * pi), ctx=ctx).v
    R5 = rrcf(Nome.from_r(Fraction(4, 25)), ctx=ctx).v
    assert abs(R5 ** 5 - R * (1 - 2 * R + 4 * R ** 2 - 3 * R ** 3 + R ** 4) / (1 + 3 * R + 4 * R ** 2 + 2 * R ** 3 + R ** 4)) < TIGHT


def test_rrcf_depth_doubling_and_product(ctx):
    q = mpf("0.3")
    a = rrcf(q, depth=400, ctx=ctx).v
    b = rrcf(q, depth=800, ctx=ctx).v
    assert abs(a - b) < TIGHT
    assert abs(a - rrcf_product(q, ctx)) < TIGHT


def test_rrcf_shallow_depth_is_flagged(ctx):
    with pytest.raises(PrecisionError):
        rrcf(mpf("0.9"), depth=3, ctx=ctx)


@settings(max_examples=20, deadline=None)
@given(st.floats(min_value=0.01, max_value=0.6))
def test_rrcf_two_routes(q):
    ctx = NumericContext(40)
    assert abs(rrcf(mpf(q), ctx=ctx).v - rrcf_product(mpf(q), ctx)) < ctx.tol


def test_ramanujan_quantity_is_rrcf(ctx):
    # R(q) = q**(1/5) prod (1 - q**(5n-1))(1 - q**(5n-4)) / ((1 - q**(5n-2))(1 - q**(5n-3)))
    q = mpf("0.2")
    assert abs(ramanujan_quantity(1, 2, 5, q, ctx) - rrcf(q, ctx=ctx).v) < TIGHT


# eta and j ---------------------------------------------------------------------

def test_eta_is_bare_product(ctx):
    tau = mpmath.mpc(0, 1)
    assert abs(dedekind_eta(tau, ctx) - mpmath.qp(exp(-pi))) < TIGHT
    assert abs(dedekind_eta(mpmath.mpc(0, 60), ctx) - 1) < TIGHT
    with pytest.raises(DomainError):
        dedekind_eta(mpmath.mpc(0.5, 0), ctx)


def test_eta_power8_two_routes(ctx):
    lhs = dedekind_eta(mpmath.mpc(0, 1), ctx) ** 8
    assert abs(lhs - eta_power8_from_modulus(1, ctx)) < TIGHT


def test_j_values(ctx):
    assert abs(j_from_modulus(1 / sqrt(2), ctx) - 1728) < mpf(10) ** -30
    assert abs(j_from_eta(mpmath.mpc(0, 1), ctx) - 1728) < mpf(10) ** -30
    # j(i sqrt 2) = 20**3 and j(2i) = 66**3, by both routes
    k2 = sqrt(2) - 1
    assert abs(j_from_modulus(k2, ctx) - 20 ** 3) < mpf(10) ** -28
    assert abs(j_from_eta(mpmath.mpc(0, sqrt(2)), ctx) - 20 ** 3) < mpf(10) ** -28
    k4 = 3 - 2 * sqrt(2)
    assert abs(j_from_modulus(k4, ctx) - 66 ** 3) < mpf(10) ** -28
    assert abs(j_from_eta(mpmath.mpc(0, 2), ctx) - 66 ** 3) < mpf(10) ** -28


def test_j_symmetric_and_poles(ctx):
    k = mpf("0.3")
    assert abs(j_from_modulus(k, ctx) - j_from_modulus(sqrt(1 - k * k), ctx)) < mpf(10) ** -30
    for bad in (0, 1, -1):
        with pytest.raises(PoleError):
            j_from_modulus(bad, ctx)


# nome bookkeeping ---------------------------------------------------------------

def test_nome_branches():
    n = Nome.from_r(4)
    assert abs(n.value() - exp(-2 * pi)) < TIGHT
    assert n.raised(Fraction(1, 5)).r == Fraction(4, 25)
    neg = n.negated()
    assert abs(neg.value() + exp(-2 * pi)) < TIGHT
    # fractional powers follow tau rather than the principal branch
    assert abs(neg.power(Fraction(1, 5)) - mpmath.expjpi((neg.tau_value()) / 5)) < TIGHT
    with pytest.raises(DomainError):
        Nome.from_r(-1)
