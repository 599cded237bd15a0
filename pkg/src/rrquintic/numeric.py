"""Precision context, error types and small complex-arithmetic helpers."""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass, field, replace

import mpmath
from mpmath import mp, mpc, mpf


class QuinticError(Exception):
    """Base class for every numerical failure raised by this package."""

    stage = None

    def __init__(self, message, *, stage=None, **details):
        super().__init__(message)
        if stage is not None:
            self.stage = stage
        self.details = details


class DomainError(QuinticError, ValueError):
    pass


class PoleError(QuinticError, ZeroDivisionError):
    pass


class DivergenceError(QuinticError):
    pass


class BranchError(QuinticError):
    pass


class PrecisionError(QuinticError):
    def __init__(self, message, *, suggested_digits=None, **kw):
        super().__init__(message, suggested_digits=suggested_digits, **kw)
        self.suggested_digits = suggested_digits


class ConvergenceError(QuinticError):
    pass


class ContinuationError(QuinticError):
    pass


class PolishError(QuinticError):
    pass


class DegenerateInputError(QuinticError):
    pass


class ReductionError(QuinticError):
    pass


class NoSolutionError(QuinticError):
    pass


class ExperimentalError(QuinticError):
    """Raised when a conjectural identity is used without opting in."""


@dataclass(frozen=True)
class NumericContext:
    """Working precision in decimal digits plus the acceptance tolerance.

    ``tol`` defaults to ``10**(6 - working_digits)``.
    """

    working_digits: int = 40
    tol: mpf = field(default=None)

    def __post_init__(self):
        if int(self.working_digits) != self.working_digits or self.working_digits < 16:
            raise ValueError(f"working_digits must be an integer >= 16, got {self.working_digits!r}")
        if self.tol is None:
            object.__setattr__(self, "tol", mpf(10) ** (6 - self.working_digits))
        else:
            object.__setattr__(self, "tol", mpf(self.tol))
        if not 0 < self.tol < 1:
            raise ValueError(f"tol must lie in (0, 1), got {self.tol}")

    @property
    def eps(self):
        return mpf(10) ** (-self.working_digits)

    def workdps(self, extra=0):
        return mp.workdps(self.working_digits + extra)

    def with_digits(self, digits):
        """Same context at ``digits`` precision; the default tolerance follows."""
        digits = int(digits)
        if digits == self.working_digits:
            return self
        default = mpf(10) ** (6 - self.working_digits)
        tol = None if abs(self.tol - default) <= default * 1e-10 else self.tol
        return replace(self, working_digits=digits, tol=tol)

    def at_least(self, digits):
        return self if digits <= self.working_digits else self.with_digits(digits)


DEFAULT_CONTEXT = NumericContext()


def resolve(ctx):
    return DEFAULT_CONTEXT if ctx is None else ctx


def deep_nome_digits(r):
    """Digits needed to resolve k_r for large (or tiny) r; 0 when no escalation is needed."""
    r = float(r)
    if r >= 100:
        return int(math.ceil(math.pi * math.sqrt(r) / math.log(10) + 30))
    if 0 < r <= 0.01:
        return int(math.ceil(math.pi / math.sqrt(r) / math.log(10) + 30))
    return 0


@contextmanager
def guarded(ctx, extra):
    """Evaluate at ``ctx`` precision plus ``extra`` guard digits."""
    with mp.workdps(ctx.working_digits + max(0, int(extra))):
        yield


def cplx(z):
    """Coerce numbers and numeric strings to an mpc at the current precision."""
    if isinstance(z, mpc):
        return +z
    if isinstance(z, str):
        z = mpmath.mpmathify(z.replace(" ", ""))
    return mpc(z)


def principal_root(z, n):
    """Principal n-th root, exp(log(z)/n); zero maps to zero."""
    z = mpmath.mpmathify(z)
    if z == 0:
        return mpc(0) if isinstance(z, mpc) else mpf(0)
    if isinstance(z, mpf) and z > 0:
        return mpmath.root(z, n)
    return mpc(z) ** (mpf(1) / n)


def unity_roots(n):
    return [mpmath.expjpi(mpf(2 * j) / n) for j in range(n)]


def is_small(z, scale=1):
    return abs(z) <= mpf(10) ** (-mp.dps // 2) * max(1, abs(scale))


def log10_abs(z):
    z = abs(z)
    return float(mpmath.log10(z)) if z else -float(mp.dps)


def to_pair(z, digits=None):
    """[re, im] as decimal strings, the JSON wire format for complex numbers."""
    z = mpc(z)
    d = digits or mp.dps
    return [mpmath.nstr(z.real, d, strip_zeros=False), mpmath.nstr(z.imag, d, strip_zeros=False)]


def from_pair(pair):
    if isinstance(pair, (list, tuple)):
        re_, im_ = pair
        return mpc(mpf(re_), mpf(im_))
    return cplx(pair)
