import mpmath
import pytest
from hypothesis import example, given, settings, strategies as st
from mpmath import mpc, mpf

from rrquintic.algebra import (
    Polynomial,
    cubic_roots,
    image_polynomial,
    power_sums,
    quadratic_roots,
    solve_cubic,
    solve_quartic,
)
from rrquintic.numeric import DegenerateInputError, NumericContext, principal_root

from conftest import resultant_image

coord = st.floats(min_value=-3, max_value=3, allow_nan=False, allow_infinity=False)
points = st.builds(complex, coord, coord)


def close_sets(found, expected, tol):
    left = list(expected)
    for z in found:
        i = min(range(len(left)), key=lambda j: abs(left[j] - z))
        if abs(left[i] - z) > tol:
            return False
        left.pop(i)
    return not left


def test_zero_polynomial_rejected():
    with pytest.raises(DegenerateInputError):
        Polynomial((0, 0))


def test_trailing_zeros_stripped():
    p = Polynomial((1, 2, 0, 0))
    assert p.degree == 1


def test_deflate_exact_root():
    p = Polynomial.from_roots([1, 2, 3])
    q, rem = p.deflate(2)
    assert abs(rem) < mpf(10) ** -50
    assert close_sets(quadratic_roots(q.coeffs[2], q.coeffs[1], q.coeffs[0]), [1, 3], 1e-40)
    assert q.degree == 2


def test_quadratic_cancellation():
    # roots 1e20 and 1e-20: the small one must not be lost
    r = quadratic_roots(1, -(mpf(10) ** 20 + mpf(10) ** -20), 1)
    assert min(abs(z) for z in r) == pytest.approx(1e-20, rel=1e-30)


def test_depressed_cubic_examples():
    # x**3 = 3 a x + b with a = 1, b = 2: x**3 - 3x - 2 = (x - 2)(x + 1)**2
    assert close_sets(solve_cubic(1, 2), [2, -1, -1], 1e-18)
    # a = 0: cube roots of b
    roots = solve_cubic(0, 8)
    assert close_sets(roots, [2 * w for w in (1, mpmath.expjpi(mpf(2) / 3), mpmath.expjpi(mpf(-2) / 3))], 1e-40)


def test_quartic_fourth_roots_of_unity():
    roots = solve_quartic(Polynomial((-1, 0, 0, 0, 1)))
    assert close_sets(roots, [1, -1, 1j, -1j], 1e-40)


def test_image_of_squares():
    p = Polynomial.from_roots([1, 2, 3, 4, 5])
    img = image_polynomial(p, [0, 0, 1])
    expected = Polynomial.from_roots([1, 4, 9, 16, 25])
    assert max(abs(a - b) for a, b in zip(img.coeffs, expected.coeffs)) < mpf(10) ** -35


def test_power_sums_of_roots():
    roots = [mpc(1, 2), mpc(-3), mpc(0.5, -1)]
    p = Polynomial.from_roots(roots)
    sums = power_sums(p.coeffs, 4)
    for k in range(1, 5):
        assert abs(sums[k] - sum(z ** k for z in roots)) < mpf(10) ** -40


@settings(max_examples=40, deadline=None)
@given(st.lists(points, min_size=3, max_size=3))
@example([0.5j, 3 + 3j, 3 + 3j])
def test_cubic_roots_recover_constructed(roots):
    p = Polynomial.from_roots([mpc(z) for z in roots])
    found = cubic_roots(p.coeffs[2], p.coeffs[1], p.coeffs[0])
    assert all(p.scaled_residual(z) < mpf(10) ** -30 for z in found)
    # a double root is only resolved to sqrt(eps), hence the headroom on the sum
    scale = max(1, max(abs(z) for z in roots))
    assert abs(sum(found) - sum(mpc(z) for z in roots)) < mpf(10) ** -28 * scale


@settings(max_examples=40, deadline=None)
@given(st.lists(points, min_size=4, max_size=4))
def test_quartic_residuals(roots):
    p = Polynomial.from_roots([mpc(z) for z in roots])
    found = solve_quartic(p)
    assert len(found) == 4
    assert max(p.scaled_residual(z) for z in found) < mpf(10) ** -25


@settings(max_examples=25, deadline=None)
@given(st.lists(points, min_size=5, max_size=5), st.lists(points, min_size=3, max_size=3))
def test_image_matches_resultant(roots, transform):
    """Power-sum images agree with the Sylvester-resultant oracle."""
    p = Polynomial.from_roots([mpc(z) for z in roots])
    T = [mpc(c) for c in transform]
    ours = image_polynomial(p, T)
    theirs = resultant_image(list(p.descending()), T[::-1])
    scale = max(1, max(abs(c) for c in theirs))
    assert max(abs(a - b) for a, b in zip(ours.descending(), theirs)) < mpf(10) ** -30 * scale


def test_principal_root_branch():
    assert principal_root(-8, 3) == pytest.approx(complex(1, 3 ** 0.5))
    assert principal_root(16, 4) == 2
    assert principal_root(0, 5) == 0


def test_context_defaults():
    ctx = NumericContext(40)
    assert ctx.tol == mpf(10) ** -34
    with pytest.raises(ValueError):
        NumericContext(10)
    with pytest.raises(ValueError):
        NumericContext(40, tol=2)
    assert ctx.with_digits(60).tol == mpf(10) ** -54
