"""Exact computation of Milnor numbers and critical values at infinity.

Typical use::

    from critinf import QQ, PolyRing, analyze
    R = PolyRing(QQ, ("x", "y"))
    report = analyze(R.parse("x^2*y+x"))
    report.multi_integer   # (mu, #B_aff, lambda, #B_inf, #B)
"""

from .crit import (
    ChartCoverageFailure,
    CritReport,
    HypothesisViolation,
    MilnorMultiInteger,
    NonIsolatedAffineSingularities,
    NonIsolatedInfinitySingularities,
    affine_critical_values,
    affine_milnor_number,
    analyze,
    analyze_with_splitting,
    critical_values_at_infinity,
    fiber_milnor_number,
    lambda_at_value,
)
from .family import DegreeNotConstant, FamilySpec, GenericNonIsolated, ParCritReport, par_crit
from .fields import QQ, AlgebraicField, RationalFunctionField
from .groebner import BACKEND, Ideal, groebner_basis
from .parser import ParseError, parse_poly
from .poly import Polynomial, PolyRing

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "QQ",
    "AlgebraicField",
    "RationalFunctionField",
    "PolyRing",
    "Polynomial",
    "Ideal",
    "groebner_basis",
    "ParseError",
    "parse_poly",
    "HypothesisViolation",
    "NonIsolatedAffineSingularities",
    "NonIsolatedInfinitySingularities",
    "ChartCoverageFailure",
    "CritReport",
    "MilnorMultiInteger",
    "affine_milnor_number",
    "affine_critical_values",
    "fiber_milnor_number",
    "critical_values_at_infinity",
    "lambda_at_value",
    "analyze",
    "analyze_with_splitting",
    "FamilySpec",
    "ParCritReport",
    "GenericNonIsolated",
    "DegreeNotConstant",
    "par_crit",
]
