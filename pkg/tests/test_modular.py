from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mpf, sqrt

from rrquintic import modular as mod
from rrquintic.numeric import (
    BranchError,
    ExperimentalError,
    NumericContext,
    PrecisionError,
)
from rrquintic.special import (
    Nome,
    j_from_modulus,
    modulus_from_r,
    ramanujan_quantity,
    rrcf,
    singular_modulus,
)

TIGHT = mpf(10) ** -34


def R(r, ctx):
    return rrcf(Nome.from_r(r), ctx=ctx).v


def test_t1_doubles_the_nome(ctx):
    assert abs(mod.t1(R(4, ctx), ctx) - R(16, ctx)) < TIGHT


def test_t7_halves_the_nome(ctx):
    x = rrcf(mpf("0.2"), ctx=ctx).v
    w = mod.t7(x, ctx)
    assert abs(w - rrcf(sqrt(mpf("0.2")), ctx=ctx).v) < TIGHT
    assert abs(mod.t1(w, ctx) - x) < TIGHT


def test_t1_real_in_real_out(ctx):
    y = mod.t1(rrcf(mpf("0.1"), ctx=ctx).v, ctx)
    assert isinstance(y, mpmath.mpf)


@pytest.mark.parametrize("r", [1, 2, 4, 5])
def test_t2_gives_j(ctx, r):
    j = mod.t2(mod.t1(R(r, ctx), ctx), ctx)
    expected = j_from_modulus(modulus_from_r(r, ctx).k, ctx)
    assert abs(j - expected) < mpf(10) ** -30 * max(1, abs(expected))


@pytest.mark.parametrize("r", [2, 4, 5, 16])
def test_t3_small_modulus_chain(ctx, r):
    k = mod.t3(mod.t2(mod.t1(R(r, ctx), ctx), ctx), mod.TBranch.T34, ctx)
    assert abs(k - modulus_from_r(r, ctx).k) < mpf(10) ** -30


def test_t3_at_1728_needs_doubled_digits():
    # j = 1728 is a double point of j(k); the radical loses half the digits there
    wide = NumericContext(80)
    with mpmath.workdps(80):
        k = mod.t3(mod.t2(mod.t1(R(1, wide), wide), wide), mod.TBranch.T34, wide)
        assert abs(k - 1 / sqrt(2)) < mpf(10) ** -35


def test_t3_large_modulus_branch(ctx):
    r = Fraction(1, 4)
    k = mod.t3(mod.t2(mod.t1(R(r, ctx), ctx), ctx), mod.TBranch.T33, ctx)
    assert abs(k - modulus_from_r(r, ctx).k) < mpf(10) ** -30


def test_t3_bad_branch_raises(ctx):
    j = j_from_modulus(modulus_from_r(4, ctx).k, ctx)
    with pytest.raises(BranchError):
        mod.t3(j, mod.TBranch.T31, ctx)
    best = mod.t3_candidates(j, ctx)[0]
    assert best.residual < ctx.tol


def test_real_modulus_orbit(ctx):
    k = modulus_from_r(16, ctx).k
    for member in mod.modulus_orbit(k):
        assert abs(mod.real_modulus(member, False, ctx) - k) < TIGHT


def test_t4_fifth_root_of_nome(ctx):
    assert abs(mod.t4(R(4, ctx), ctx) - R(Fraction(4, 25), ctx)) < TIGHT


def test_t5_negated_nome(ctx):
    k = modulus_from_r(4, ctx).k
    assert abs(mod.t5(k, ctx) - singular_modulus(Nome.from_r(4).negated(), ctx)) < TIGHT


def test_f1_solves_u_relation(ctx):
    q = mpf("0.1")
    v = rrcf(q, ctx=ctx).v
    u = ramanujan_quantity(1, 3, 10, q, ctx)
    assert abs(u ** 3 - u * v + u ** 2 * v ** 3 + v ** 4) < TIGHT
    w = mod.f1(v, ctx)
    assert abs(w ** 3 - w * v + w ** 2 * v ** 3 + v ** 4) < mpf(10) ** -30


def test_t6_is_opt_in(ctx):
    with pytest.raises(ExperimentalError):
        mod.t6(R(4, ctx))


def test_t6_magnitude_matches_negated_nome(ctx):
    for q in ("0.03", "0.1", "0.3"):
        nome = Nome(q=mpf(q))
        x = rrcf(nome, ctx=ctx).v
        assert abs(abs(mod.t6(x, experimental=True, ctx=ctx)) - abs(rrcf(nome.negated(), ctx=ctx).v)) < mpf(10) ** -30


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.1, max_value=1.5))
def test_u_star_inverts_u_fwd(X):
    ctx = NumericContext(40)
    X = mpf(X)
    Y = mod.u_fwd(X, ctx)
    assert mod.u_relation_residual(X, Y) < ctx.tol
    assert abs(mod.u_star(Y, ctx) - X) < mpf(10) ** -30


def test_u_star_golden():
    g = (sqrt(5) - 1) / 2
    assert abs(mod.u_star(g) ** 6 - (sqrt(5) - 2)) < TIGHT


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=-5, max_value=5))
def test_alpha_p_roundtrip(alpha):
    a = mpf(alpha)
    assert abs(mod.alpha_from_p(mod.p_from_alpha(a)) - a) < mpf(10) ** -30


def test_y_roots_solve_cubic():
    s = mpmath.mpc("0.7", "0.2")
    for Y in mod.y_roots(s):
        assert abs(Y ** 3 + 5 / s * Y ** 2 - s * Y - 1) < mpf(10) ** -30


@pytest.mark.parametrize("r", [1, 2, 3])
def test_psi_against_theta(ctx, r):
    k, kd = modulus_from_r(r, ctx).k, modulus_from_r(Fraction(r, 25), ctx).k
    up = mod.psi(k, kd, ctx)
    expected = modulus_from_r(25 * r, ctx).k
    assert abs(up - expected) / expected < mpf(10) ** -28


def test_psi_k625():
    c70 = NumericContext(70)
    with mpmath.workdps(70):
        k1, k25, k625 = (modulus_from_r(r, c70).k for r in (1, 25, 625))
        st_ = mod.psi_state(k25, k1, c70)
        assert abs(st_.k_up - k625) / k625 < mpf(10) ** -60
        assert abs(mod.ascend_25n(k25, k1, 1, c70)[0] - st_.k_up) < mpf(10) ** -80


def test_ascent_flags_missing_digits():
    c50 = NumericContext(50)
    with mpmath.workdps(50):
        k1, k25 = (modulus_from_r(r, c50).k for r in (1, 25))
        with pytest.raises(PrecisionError) as info:
            mod.ascend_25n(k25, k1, 2, c50)
    assert info.value.suggested_digits > 50


@pytest.mark.parametrize("digits, gate", [(70, 60), (130, 120)])
def test_ascend_two_levels(digits, gate):
    c = NumericContext(digits)
    with mpmath.workdps(digits):
        k1, k25 = (modulus_from_r(r, c).k for r in (1, 25))
        ks = mod.ascend_25n(k25, k1, 2, c)
    with mpmath.workdps(digits + 40):
        target = singular_modulus(Nome.from_r(15625), NumericContext(digits + 40))
        assert abs(ks[1] - target) / target < mpf(10) ** -gate


@pytest.mark.parametrize("r", [1, 2, 5])
def test_modular_equations(ctx, r):
    k = modulus_from_r(r, ctx).k
    K = modulus_from_r(25 * r, ctx).k
    assert abs(mod.modular5_residual(k, K)) < mpf(10) ** -30
    assert abs(mod.depressed_residual(K ** (mpf(1) / 4), k ** (mpf(1) / 4))) < mpf(10) ** -30


def test_rrcf_degree2_residual_at_known(ctx):
    assert abs(mod.rrcf_degree2_residual(R(1, ctx), R(4, ctx))) < TIGHT
