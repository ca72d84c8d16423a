"""Exact stochastic Baxterisation of the fused Hecke algebra.

All arithmetic is over :class:`fractions.Fraction`; nothing in the core
modules touches floating point.
"""

from fractions import Fraction

from .errors import DegenerateError, ReductionError, StochasticRegimeError

__all__ = ["Fraction", "DegenerateError", "ReductionError", "StochasticRegimeError"]
__version__ = "0.1.0"
