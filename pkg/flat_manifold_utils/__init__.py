"""
Flat Manifold Utils
===================

Exact lattice-coordinate computations for Bieberbach groups: invariant
L-subspaces, compact-leaf foliations and intersection numbers.
"""

from .errors import FlatManifoldError
from .lattice import Ambient, Sublattice, FiniteAbelian
from .invariant import MatrixGroup, close_group
from .bieberbach import AffineElement, BieberbachGroup, build
from .foliation import FoliationContext, LeafGroup, OrbifoldData
from .intersect import IntersectionReport, intersection_numbers
from .corpus import klein_bottle, regular_rep, torus

__all__ = [
    # Errors
    "FlatManifoldError",

    # Values
    "Ambient",
    "Sublattice",
    "FiniteAbelian",
    "MatrixGroup",
    "AffineElement",
    "BieberbachGroup",
    "FoliationContext",
    "LeafGroup",
    "OrbifoldData",
    "IntersectionReport",

    # Entry points
    "close_group",
    "build",
    "intersection_numbers",
    "klein_bottle",
    "regular_rep",
    "torus",
]
