"""Gröbner bases by Buchberger's algorithm, with normal forms and quotient dimensions."""

from ._kernels import BACKEND
from .basis import (
    INFINITE,
    GroebnerBasis,
    Ideal,
    InfiniteDimensional,
    groebner_basis,
    is_member,
    normal_form,
    quotient_dimension,
    standard_monomials,
)
from .buchberger import Stats

__all__ = [
    "BACKEND",
    "INFINITE",
    "GroebnerBasis",
    "Ideal",
    "InfiniteDimensional",
    "Stats",
    "groebner_basis",
    "is_member",
    "normal_form",
    "quotient_dimension",
    "standard_monomials",
]
