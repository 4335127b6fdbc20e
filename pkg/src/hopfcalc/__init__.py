"""Exact Hopf-monoid computations on generalized permutahedra and their
combinatorial families: antipodes (closed formulas and Takeuchi's sum),
polynomial invariants with reciprocity, and polytopal series inversion."""

from .core import (
    Character,
    HopfFamily,
    character_inverse,
    convolve,
    polynomial_invariant,
    reciprocity_eval,
    takeuchi_antipode,
)
from .formal import FormalSum
from .polynomial import PolynomialQ
from .submodular import GP, BooleanFn, enumerate_faces, permutahedron

__version__ = "0.1.0"

__all__ = [
    "BooleanFn",
    "Character",
    "FormalSum",
    "GP",
    "HopfFamily",
    "PolynomialQ",
    "character_inverse",
    "convolve",
    "enumerate_faces",
    "permutahedron",
    "polynomial_invariant",
    "reciprocity_eval",
    "takeuchi_antipode",
]
