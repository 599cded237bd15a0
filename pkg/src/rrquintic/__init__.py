"""Quintic roots through Tschirnhausen reduction, Bring radicals and elliptic modular functions."""

from .bring import all_roots, br
from .hermite import hermite_root, main_theorem_pipeline
from .numeric import DEFAULT_CONTEXT, NumericContext, QuinticError
from .reduction import reduce_quintic
from .solver import SolveReport, solve
from .special import Nome, modulus_from_r, rrcf, singular_modulus, theta

__all__ = [
    "DEFAULT_CONTEXT",
    "Nome",
    "NumericContext",
    "QuinticError",
    "SolveReport",
    "all_roots",
    "br",
    "hermite_root",
    "main_theorem_pipeline",
    "modulus_from_r",
    "reduce_quintic",
    "rrcf",
    "singular_modulus",
    "solve",
    "theta",
]
