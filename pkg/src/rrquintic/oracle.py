"""Independent root finder used for differential testing.

Thin wrapper over mpmath's Durand-Kerner implementation (``polyroots``); it
shares no code with the reduction and Bring-radical path.
"""

from __future__ import annotations

from itertools import permutations

import mpmath
from mpmath import mpc

from .algebra import Polynomial
from .numeric import ConvergenceError, resolve


def oracle_roots(poly, ctx=None, *, maxsteps=400, extraprec=None):
    """All roots of ``poly`` (ascending coefficients or a Polynomial)."""
    ctx = resolve(ctx)
    if not isinstance(poly, Polynomial):
        poly = Polynomial(tuple(poly))
    extraprec = extraprec if extraprec is not None else 4 * mpmath.mp.prec
    with ctx.workdps(10):
        try:
            roots = mpmath.polyroots(list(poly.descending()), maxsteps=maxsteps, extraprec=extraprec)
        except mpmath.libmp.NoConvergence as exc:
            raise ConvergenceError(f"oracle root finder did not converge: {exc}", stage="oracle") from exc
        return [mpc(r) for r in roots]


def match_roots(found, reference):
    """min over permutations pi of max_i |found_i - reference_pi(i)| (exhaustive, at most 6 roots)."""
    found = list(found)
    reference = list(reference)
    if len(found) != len(reference):
        raise ValueError("root lists differ in length")
    if len(found) > 6:
        raise ValueError("match_roots is exhaustive and limited to 6 roots")
    best = None
    for perm in permutations(range(len(reference))):
        worst = max(abs(found[i] - reference[j]) for i, j in enumerate(perm))
        if best is None or worst < best:
            best = worst
    return best


__all__ = ["match_roots", "oracle_roots"]
