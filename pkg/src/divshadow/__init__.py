"""Divides, their doubled curves, shadows with gleams, and the Lefschetz
fibrations and monodromies read off from them."""

from .divide import Divide, DVertex, check_admissibility, classify_free, trace_regions
from .doubling import OrientedDivide, double, double_free
from .fibration import Monodromy, alexander_compare, torus_alexander
from .fileio import emit, load, parse
from .lf import LFStructure, NoLFStructure, collapse, find_lf
from .pipeline import Result, run, run_free
from .shadow import ShadowedPolyhedron, build_polyhedron

__all__ = [
    "DVertex", "Divide", "LFStructure", "Monodromy", "NoLFStructure", "OrientedDivide",
    "Result", "ShadowedPolyhedron", "alexander_compare", "build_polyhedron",
    "check_admissibility", "classify_free", "collapse", "double", "double_free", "emit",
    "find_lf", "load", "parse", "run", "run_free", "torus_alexander", "trace_regions",
]
__version__ = "0.1.0"
