"""Spatial model checking and minimisation on polyhedral and poset models."""
from .core import (KripkeModel, PolyhedralModel, SimplicialComplex,
                   close_under_faces, letters_of, validate_complex,
                   validate_kripke)
from .geometry import barycentre, build_cell_poset, locate_point, realize_down_path

__version__ = "0.1.0"

__all__ = [
    "KripkeModel", "PolyhedralModel", "SimplicialComplex", "barycentre",
    "build_cell_poset", "close_under_faces", "letters_of", "locate_point",
    "realize_down_path", "validate_complex", "validate_kripke",
]
