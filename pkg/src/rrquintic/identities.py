"""Numeric validators for the modular identities used by the solver.

Both sides of every identity are computed independently (moduli by
period-ratio inversion, R(q) by its continued fraction, Ramanujan quantities
by q-products) and the residual is reported against the context tolerance.

Samples are singular parameters r for the modulus identities (tags starting
with ``k-``, ``depressed`` and ``j-routes``) and nomes q for everything else.
The conjectural tags are informational: they are evaluated and reported but
never gate anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf

from . import modular as mod
from .numeric import QuinticError, principal_root, resolve
from .special import (
    Nome,
    as_nome,
    j_from_eta,
    j_from_modulus,
    modulus_from_r,
    ramanujan_quantity,
    rrcf,
    theta,
)

R_TAGS = ("k-degree2", "k-degree3", "k-degree5", "depressed", "j-routes")
Q_TAGS = ("rrcf-degree2", "rrcf-degree3", "rrcf-degree5", "theta-jacobi")
CONJECTURAL_TAGS = ("u-v-relation", "u-duplication", "v-negated-nome", "u-product", "rrcf-negated-nome")
MODULAR_SUITE = ("k-degree2", "k-degree3", "k-degree5", "depressed", "rrcf-degree2", "rrcf-degree3", "rrcf-degree5")

DEFAULT_SAMPLES = {
    "k-degree2": (1, 2, 3, 5),
    "k-degree3": (1, 2),
    "k-degree5": (1,),
    "depressed": (1,),
    "j-routes": (1, 2),
    "rrcf-degree2": ("0.05", "0.1", "0.2"),
    "rrcf-degree3": ("0.05", "0.1", "0.2"),
    "rrcf-degree5": ("0.05", "0.1", "0.2"),
    "theta-jacobi": ("0.1", "0.3", "0.5"),
}
CONJECTURAL_SAMPLES = ("0.03", "0.05", "0.1")


@dataclass(frozen=True)
class IdentityRow:
    tag: str
    sample: str
    residual: mpf
    passed: bool
    informational: bool
    note: str = ""

    def to_dict(self, digits=6):
        return {
            "tag": self.tag,
            "sample": self.sample,
            "residual": mpmath.nstr(self.residual, digits),
            "passed": self.passed,
            "informational": self.informational,
            "note": self.note,
        }


@dataclass(frozen=True)
class IdentityReport:
    tag: str
    rows: tuple

    @property
    def max_residual(self):
        return max((r.residual for r in self.rows), default=mpf(0))

    @property
    def passed(self):
        return all(r.passed or r.informational for r in self.rows)


def _r_value(r):
    if isinstance(r, str) and "/" in r:
        return Fraction(r)
    return r


def _k(r, ctx):
    ec = modulus_from_r(r, ctx)
    return ec.k, ec.k_prime


def _scaled_r(r, factor):
    if isinstance(r, (int, Fraction)):
        return Fraction(r) * factor
    return mpmath.mpmathify(r) * factor


def _residual(tag, sample, ctx):
    if tag == "k-degree2":
        k4, _ = _k(_scaled_r(sample, 4), ctx)
        _, kp = _k(sample, ctx)
        return abs(k4 - (1 - kp) / (1 + kp))
    if tag == "k-degree3":
        k, kp = _k(sample, ctx)
        k9, k9p = _k(_scaled_r(sample, 9), ctx)
        return abs(mpmath.sqrt(k * k9) + mpmath.sqrt(kp * k9p) - 1)
    if tag == "k-degree5":
        k, _ = _k(sample, ctx)
        K, _ = _k(_scaled_r(sample, 25), ctx)
        return abs(mod.modular5_residual(k, K))
    if tag == "depressed":
        k, _ = _k(sample, ctx)
        K, _ = _k(_scaled_r(sample, 25), ctx)
        return abs(mod.depressed_residual(principal_root(K, 4), principal_root(k, 4)))
    if tag == "j-routes":
        k, _ = _k(sample, ctx)
        nome = Nome.from_r(sample)
        j1 = j_from_modulus(k, ctx)
        j2 = mod.t2(mod.t1(rrcf(nome, ctx=ctx).v, ctx), ctx)
        j3 = j_from_eta(nome.tau_value(), ctx)
        return max(abs(a - b) for a, b in ((j1, j2), (j1, j3), (j2, j3))) / max(1, abs(j1))

    nome = as_nome(mpmath.mpmathify(sample) if isinstance(sample, str) else sample)
    if tag == "theta-jacobi":
        t2, t3, t4 = (theta(s, nome, ctx) for s in (2, 3, 4))
        return abs(t3 ** 4 - t2 ** 4 - t4 ** 4)
    R = rrcf(nome, ctx=ctx).v
    if tag == "rrcf-degree2":
        return abs(mod.rrcf_degree2_residual(R, rrcf(nome.raised(2), ctx=ctx).v))
    if tag == "rrcf-degree3":
        R3 = rrcf(nome.raised(3), ctx=ctx).v
        return abs((R3 - R ** 3) * (1 + R * R3 ** 3) - 3 * R ** 2 * R3 ** 2)
    if tag == "rrcf-degree5":
        R5 = rrcf(nome.raised(Fraction(1, 5)), ctx=ctx).v
        return abs(R5 ** 5 - mod.rrcf_degree5_rhs(R))
    if tag == "u-v-relation":
        u = ramanujan_quantity(1, 3, 10, nome, ctx)
        return abs(u ** 3 - u * R + u ** 2 * R ** 3 + R ** 4)
    if tag == "u-duplication":
        u = ramanujan_quantity(1, 3, 10, nome, ctx)
        u_neg = ramanujan_quantity(1, 3, 10, nome.negated(), ctx)
        u2 = ramanujan_quantity(1, 3, 10, nome.raised(2), ctx)
        return abs(u * abs(u_neg) - u2)
    if tag == "v-negated-nome":
        v = R
        w = abs(rrcf(nome.negated(), ctx=ctx).v)
        e = mpmath.expjpi(mpf(1) / 5)
        lhs = (
            -v + e * w - e * v ** 5 * w + 5 * e ** 2 * v ** 4 * w ** 2 - 10 * e ** 3 * v ** 3 * w ** 3
            + 5 * e ** 4 * v ** 2 * w ** 4 + v * w ** 5 + v ** 6 * w ** 5 - e * v ** 5 * w ** 6
        )
        return abs(lhs)
    if tag == "u-product":
        u = ramanujan_quantity(1, 3, 10, nome, ctx)
        return abs(u - R * rrcf(nome.raised(2), ctx=ctx).v)
    if tag == "rrcf-negated-nome":
        return abs(abs(mod.t6(R, experimental=True, ctx=ctx)) - abs(rrcf(nome.negated(), ctx=ctx).v))
    raise ValueError(f"unknown identity tag {tag!r}")


def validate_identity(tag, samples=None, ctx=None):
    """Evaluate one identity at each sample and report residual rows."""
    ctx = resolve(ctx)
    informational = tag in CONJECTURAL_TAGS
    if tag not in R_TAGS + Q_TAGS + CONJECTURAL_TAGS:
        raise ValueError(f"unknown identity tag {tag!r}")
    if samples is None:
        samples = CONJECTURAL_SAMPLES if informational else DEFAULT_SAMPLES[tag]
    rows = []
    for sample in samples:
        s = _r_value(sample) if tag in R_TAGS else sample
        note = ""
        with ctx.workdps():
            try:
                res = _residual(tag, s, ctx)
            except QuinticError as exc:
                res, note = mpf(mpmath.inf), f"{type(exc).__name__}: {exc}"
        rows.append(IdentityRow(tag, str(sample), res, bool(res <= ctx.tol), informational, note))
    return IdentityReport(tag, tuple(rows))


def modular_suite(ctx=None):
    return [validate_identity(tag, ctx=ctx) for tag in MODULAR_SUITE]


def conjectural_suite(ctx=None, samples=CONJECTURAL_SAMPLES):
    return [validate_identity(tag, samples, ctx) for tag in CONJECTURAL_TAGS]


__all__ = [
    "CONJECTURAL_TAGS",
    "IdentityReport",
    "IdentityRow",
    "MODULAR_SUITE",
    "conjectural_suite",
    "modular_suite",
    "validate_identity",
]
