import mpmath
import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mpf

from rrquintic.algebra import Polynomial
from rrquintic.bring import (
    all_roots,
    br,
    br_lambert_euler,
    branch_radius,
    bring_radical,
    bring_series,
    lambert_euler,
    nested_radical,
    newton_polish,
)
from rrquintic.numeric import (
    ContinuationError,
    ConvergenceError,
    DivergenceError,
    NumericContext,
    PolishError,
)

BR1 = "-0.754877666246692760049508896358528691894606617772793143989"


def cubic_factor_root():
    # x**5 + x + 1 = (x**2 + x + 1)(x**3 - x**2 + 1)
    return mpmath.findroot(lambda x: x ** 3 - x ** 2 + 1, mpf("-0.75"))


def residual(x, t):
    return abs(x ** 5 + x + t)


def test_br_at_zero(ctx):
    assert br(0, ctx) == 0


def test_br_small(ctx):
    x, diag = bring_radical(mpf("0.1"), ctx)
    assert diag.method == "series" and diag.converged
    assert residual(x, mpf("0.1")) < ctx.tol
    assert abs(x - (-mpf("0.1") + mpf("0.1") ** 5)) < mpf(10) ** -8


def test_br_one_matches_cubic_factor(ctx):
    x, diag = bring_radical(1, ctx)
    assert diag.method == "polished-continuation"
    assert abs(x - cubic_factor_root()) < mpf(10) ** -35
    assert abs(x - mpf(BR1)) < mpf(10) ** -35


def test_series_diverges_outside_disk():
    with pytest.raises(DivergenceError):
        bring_series(mpf(1))


def test_near_branch_point_is_reported(ctx):
    # |t| just above 4 * 5**(-5/4) on the ray through a branch point
    t = mpmath.expjpi(mpf(1) / 4) * branch_radius() * (1 + mpf(10) ** -12)
    with pytest.raises(ContinuationError):
        bring_radical(t, ctx)


@pytest.mark.parametrize("t", ["2+3j", "10", "-10j", "1e6", "0.3+0.3j"])
def test_br_continuation(ctx, t):
    t = mpmath.mpmathify(t)
    x = br(t, ctx)
    assert residual(x, t) / max(1, abs(x) ** 5) < ctx.tol


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0, max_value=0.5), st.floats(min_value=-3.2, max_value=3.2))
def test_series_region_property(rho, phi):
    ctx = NumericContext(40)
    t = mpf(rho) * mpmath.expj(mpf(phi))
    x, diag = bring_radical(t, ctx)
    assert diag.method in ("series", "trivial")
    assert residual(x, t) < mpf(10) ** -30


def test_lambert_euler_examples(ctx):
    assert lambert_euler(3, 7, 0, 1, ctx) == 1
    assert abs(lambert_euler(1, 2, mpf("0.1"), 1, ctx) - (mpmath.sqrt(mpf("1.01")) - mpf("0.1"))) < mpf(10) ** -34


def test_lambert_euler_reproduces_br(ctx):
    t = mpf("0.2")
    assert abs(br_lambert_euler(t, ctx) - br(t, ctx)) < mpf(10) ** -34


def test_lambert_euler_divergence(ctx):
    with pytest.raises(DivergenceError):
        lambert_euler(5, 1, 1, 1, ctx)


def test_nested_radical(ctx):
    assert abs(nested_radical(0, -1, ctx=ctx) - 1) < mpf(10) ** -35
    x = nested_radical(1, -3, ctx=ctx)
    assert abs(x ** 5 + x - 3) < ctx.tol
    with pytest.raises(ConvergenceError):
        nested_radical(1, 1, ctx=ctx)


def test_newton_polish(ctx):
    p = Polynomial.from_descending([1, -1, 0, 1])
    exact = cubic_factor_root()
    res = newton_polish(p, exact, ctx=ctx)
    # unchanged up to rounding to working precision
    assert res.converged and res.iterations == 0 and abs(res.root - exact) < mpf(10) ** -45
    res = newton_polish(p, mpf("-0.7"), ctx=ctx)
    assert abs(res.root - exact) < mpf(10) ** -35
    with pytest.raises(PolishError):
        newton_polish(Polynomial((1, 0, 1)), 0, ctx=ctx)


def test_polish_gain_at_series_edge(ctx):
    t = mpf("0.5")
    with mpmath.workdps(20):
        rough, _ = bring_series(t)
    before = residual(rough, t)
    after = residual(newton_polish(Polynomial((t, 1, 0, 0, 0, 1)), rough, ctx=ctx).root, t)
    assert after * 10 ** 6 <= before


def test_all_roots_t_zero(ctx):
    roots = all_roots(0, ctx)
    assert roots[0] == 0
    assert all(abs(z ** 4 + 1) < mpf(10) ** -35 for z in roots[1:])


def test_all_roots_t_one(ctx):
    roots = all_roots(1, ctx)
    assert abs(roots[0] - mpf(BR1)) < mpf(10) ** -35
    cofactor = [z for z in roots[1:] if abs(z ** 2 + z + 1) < mpf(10) ** -30]
    assert len(cofactor) == 2


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0, max_value=10), st.floats(min_value=-3.2, max_value=3.2))
def test_all_roots_property(rho, phi):
    ctx = NumericContext(40)
    t = mpf(rho) * mpmath.expj(mpf(phi))
    roots = all_roots(t, ctx)
    assert len(roots) == 5
    assert max(residual(z, t) / max(1, abs(z) ** 5) for z in roots) < ctx.tol
    assert abs(sum(roots)) < mpf(10) ** -30 * max(1, abs(t))


@pytest.mark.parametrize("t", ["0.5", "-0.49", "0.3+0.35j", "0.01j"])
def test_series_alone_reaches_working_precision(t):
    # no Newton polish here: the summed series itself must be accurate
    with mpmath.workdps(50):
        t = mpmath.mpmathify(t)
        x, _ = bring_series(t)
        assert abs(x ** 5 + x + t) < mpf(10) ** -45
