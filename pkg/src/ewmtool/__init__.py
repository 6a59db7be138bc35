"""Exact computation of extended weight monoids of spherical homogeneous
spaces, with a brute-force branching oracle for cross-validation."""

from .rootlat import RootSystem, Weight, build_root_system
from .sphdata import Color, SphericalDatum, validate
from .ewm import GeneratorTable, PCharSpace, RestrictionContext, solve_generators

__all__ = [
    "RootSystem",
    "Weight",
    "build_root_system",
    "Color",
    "SphericalDatum",
    "validate",
    "GeneratorTable",
    "PCharSpace",
    "RestrictionContext",
    "solve_generators",
]

__version__ = "0.1.0"
