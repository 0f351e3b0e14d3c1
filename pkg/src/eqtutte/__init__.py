"""Exact computation and cross-verification of the equivariant Tutte polynomial."""

from .invariants import (
    classical_tutte,
    equivariant_charpoly,
    equivariant_tutte,
    equivariant_tutte_dc,
    f_polynomial,
    f_polynomial_dc,
    multivariate_tutte,
    p_polynomial,
)
from .gkm import verify_pushforward_theorem, xi_class
from .matroid import Graph, Matroid, graphic, matroid_from_bases, uniform
from .poly import MultiPoly, PolyFraction

__all__ = [
    "Graph",
    "Matroid",
    "MultiPoly",
    "PolyFraction",
    "classical_tutte",
    "equivariant_charpoly",
    "equivariant_tutte",
    "equivariant_tutte_dc",
    "f_polynomial",
    "f_polynomial_dc",
    "graphic",
    "matroid_from_bases",
    "multivariate_tutte",
    "p_polynomial",
    "uniform",
    "verify_pushforward_theorem",
    "xi_class",
]
