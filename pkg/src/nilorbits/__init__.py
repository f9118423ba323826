"""Exact computations with nilpotent orbits and ad-nilpotent ideals."""

__version__ = "0.1.0"

from .rootsys import SimpleType, RootSystem, build_root_system
from .chevalley import DEFAULT_SEED, build_structure_constants, bracket, ad_matrix
from .orbits import (
    OrbitLabel,
    Partition,
    WeightedDynkinDiagram,
    build_catalog,
    grading_data,
    identify_orbit,
    induce,
    richardson_orbit,
)
from .centralizers import centralizer_data, intermediate_orbit, is_extreme, sl2_through
from .ideals import AdNilpotentIdeal, classify, enumerate_ideals, is_lonely
from .analysis import TypeAnalysis, analyze

__all__ = [
    "SimpleType", "RootSystem", "build_root_system",
    "DEFAULT_SEED", "build_structure_constants", "bracket", "ad_matrix",
    "OrbitLabel", "Partition", "WeightedDynkinDiagram", "build_catalog", "grading_data",
    "identify_orbit", "induce", "richardson_orbit",
    "centralizer_data", "intermediate_orbit", "is_extreme", "sl2_through",
    "AdNilpotentIdeal", "classify", "enumerate_ideals", "is_lonely",
    "TypeAnalysis", "analyze",
]
