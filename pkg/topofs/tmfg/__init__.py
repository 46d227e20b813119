"""Triangulated Maximally Filtered Graph construction and structural checks."""

from .builder import build_tmfg, maximum_gain, select_initial_tetrahedron
from .graph import DegreeVector, InsertionRecord, TmfgGraph
from .validators import (
    degree_centrality,
    degree_histogram,
    is_chordal,
    is_connected,
    structural_checks,
)

__all__ = [
    "DegreeVector",
    "InsertionRecord",
    "TmfgGraph",
    "build_tmfg",
    "degree_centrality",
    "degree_histogram",
    "is_chordal",
    "is_connected",
    "maximum_gain",
    "select_initial_tetrahedron",
    "structural_checks",
]
