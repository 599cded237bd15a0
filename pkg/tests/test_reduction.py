import random

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mpc, mpf

from rrquintic.algebra import Polynomial, coefficient_scale
from rrquintic.numeric import DegenerateInputError
from rrquintic.reduction import (
    PrincipalQuintic,
    back_map,
    reduce_quintic,
    taylor_shift,
    to_bring,
    to_bring_jerrard,
    to_principal,
)

from conftest import random_monic_quintics, resultant_image, unit_disk

coord = st.floats(min_value=-1, max_value=1, allow_nan=False)
disk = st.builds(complex, coord, coord).filter(lambda z: abs(z) <= 1)


def small(values, scale, gate):
    return all(abs(v) <= gate * scale for v in values)


def test_taylor_shift():
    p = Polynomial.from_roots([1, 2, 3, 4, 5])
    shifted = taylor_shift(p, 1)
    assert abs(shifted(0) - p(1)) < mpf(10) ** -40
    q = Polynomial.from_roots([0, 1, 2, 3, 4])
    assert max(abs(a - b) for a, b in zip(shifted.coeffs, q.coeffs)) < mpf(10) ** -40


@pytest.mark.parametrize("coeffs", random_monic_quintics(5, seed=11))
def test_principal_stage_against_resultant(ctx, coeffs):
    p = Polynomial(tuple(coeffs))
    pq, quad = to_principal(p, ctx)
    A, B = quad
    img = resultant_image(list(p.descending()), [1, A, B])
    s = coefficient_scale(p)
    assert abs(img[1]) < mpf(10) ** -30 * s and abs(img[2]) < mpf(10) ** -30 * s ** 2
    for got, want in zip((pq.c2, pq.c1, pq.c0), img[3:]):
        assert abs(got - want) <= mpf(10) ** -28 * max(1, abs(want))


@pytest.mark.parametrize("seed", range(5))
def test_bring_jerrard_stage_against_resultant(ctx, seed):
    rng = random.Random(seed)
    pq = PrincipalQuintic(*(mpc(unit_disk(rng)) for _ in range(3)))
    bj, (k, l, m, n) = to_bring_jerrard(pq, ctx)
    img = resultant_image(list(pq.polynomial().descending()), [1, k, l, m, n])
    scale = max(1, max(abs(c) for c in img))
    assert small(img[1:4], scale, mpf(10) ** -28)
    assert abs(img[4] - bj.A2) <= mpf(10) ** -25 * max(1, abs(bj.A2))
    assert abs(img[5] - bj.B2) <= mpf(10) ** -25 * max(1, abs(bj.B2))


def test_to_bring_scaling(ctx):
    from rrquintic.reduction import BringJerrard

    bj = BringJerrard(mpc(16), mpc(64))
    form, lam = to_bring(bj, ctx)
    assert lam == 2
    assert abs(form.t - 2) < mpf(10) ** -40
    assert to_bring(BringJerrard(mpc(0), mpc(3)), ctx) == (None, None)


def test_already_principal_skips(ctx):
    red = reduce_quintic(Polynomial((1, 1, 0, 0, 0, 1)), ctx)
    assert red.chain.quad is None and red.chain.quartic is None
    assert abs(red.bring.t - 1) < mpf(10) ** -40


def test_degree_check(ctx):
    with pytest.raises(DegenerateInputError):
        reduce_quintic(Polynomial((1, 0, 1)), ctx)


def _roundtrip(coeffs, ctx):
    from rrquintic.bring import all_roots

    p = Polynomial(tuple(coeffs))
    red = reduce_quintic(p, ctx)
    u = all_roots(red.bring, ctx) if red.bring is not None else None
    return p, back_map(u, red.chain, p, ctx, bj=red.bring_jerrard)


@pytest.mark.parametrize("roots", [[1, 2, 3, 4, 5], [0, 1j, -1j, 2, -2], [0.5, -0.25, 3, 1 + 1j, 1 - 1j]])
def test_back_map_recovers_constructed_roots(ctx, roots):
    p, found = _roundtrip(Polynomial.from_roots([mpc(r) for r in roots]).coeffs, ctx)
    left = [mpc(r) for r in roots]
    for z in found:
        i = min(range(len(left)), key=lambda j: abs(left[j] - z))
        assert abs(left.pop(i) - z) < mpf(10) ** -30


def test_fifth_roots_of_unity(ctx):
    p, found = _roundtrip([-1, 0, 0, 0, 0, 1], ctx)
    assert all(abs(z ** 5 - 1) < mpf(10) ** -35 for z in found)
    assert min(abs(z - 1) for z in found) < mpf(10) ** -35


@settings(max_examples=15, deadline=None)
@given(st.lists(disk, min_size=5, max_size=5))
def test_reduction_roundtrip_property(coeffs):
    from rrquintic.numeric import NumericContext

    ctx = NumericContext(40)
    p, found = _roundtrip([mpc(c) for c in coeffs] + [mpc(1)], ctx)
    assert len(found) == 5
    assert max(p.scaled_residual(z) for z in found) < mpf(10) ** -30


def test_shift_retry_on_degenerate_denominator(ctx):
    # x**5 + a x**4 + b x**3 + ... with 2 a**2 = 5 b zeroes both quadratic-stage denominators
    a = mpc(1)
    coeffs = [mpc("0.3"), mpc("-0.2"), mpc("0.7"), 2 * a * a / 5, a, mpc(1)]
    red = reduce_quintic(Polynomial(tuple(coeffs)), ctx)
    assert red.chain.shift != 0
    assert any("shift retry" in note for note in red.chain.notes)
    p, found = _roundtrip(coeffs, ctx)
    assert max(p.scaled_residual(z) for z in found) < mpf(10) ** -30
