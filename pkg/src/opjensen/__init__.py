"""Numerical verification of refined Jensen-type operator inequalities."""

from .errors import (ConvexityError, DimensionError, DomainError, EigenSolverError, GenerationError,
                     HypothesisError, NormalizationError, NotHermitianError, OpJensenError)
from .functions import Interval, ScalarFunction
from .instance import Instance, run_instance
from .maps import MapFamily, PositiveLinearMap, compression_map, identity_map
from .refine import delta_f, delta_f_n, lemma1_bound, secant, tilde
from .report import InequalityReport, Link
from .spectral import HermitianMatrix, LoewnerVerdict, Ordering, apply_function, loewner_compare

__version__ = "0.1.0"

__all__ = [
    "ConvexityError", "DimensionError", "DomainError", "EigenSolverError", "GenerationError",
    "HypothesisError", "NormalizationError", "NotHermitianError", "OpJensenError",
    "Interval", "ScalarFunction", "Instance", "run_instance",
    "MapFamily", "PositiveLinearMap", "compression_map", "identity_map",
    "delta_f", "delta_f_n", "lemma1_bound", "secant", "tilde",
    "InequalityReport", "Link",
    "HermitianMatrix", "LoewnerVerdict", "Ordering", "apply_function", "loewner_compare",
]
