"""Hexagonal lattice diagrams on the central torus of the standard trisection of CP^2."""

from .diagram import (
    Arc, Family, LatticeDiagram, check_transverse, equivalent, invariants, shadow_slide, validate,
)
from .homology import Basis, HomClass, pair
from .synth import family, from_classes

__version__ = "0.1.0"

__all__ = [
    "Arc", "Basis", "Family", "HomClass", "LatticeDiagram", "check_transverse", "equivalent",
    "family", "from_classes", "invariants", "pair", "shadow_slide", "validate",
]
