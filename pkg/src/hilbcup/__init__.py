"""Graded cup product on class functions of symmetric groups and the cohomology
ring of Hilbert schemes of points in the plane."""

from .classalg import (
    ClassFunction,
    convolve,
    cup,
    epsilon,
    epsilon_component,
    induce_r,
    restrict,
    structure_constants,
    tau,
    unit,
)
from .hilbert import betti, presentation, relation_poly
from .symfun import PPoly, phi, phi_inverse

__all__ = [
    "ClassFunction",
    "PPoly",
    "betti",
    "convolve",
    "cup",
    "epsilon",
    "epsilon_component",
    "induce_r",
    "phi",
    "phi_inverse",
    "presentation",
    "relation_poly",
    "restrict",
    "structure_constants",
    "tau",
    "unit",
]
