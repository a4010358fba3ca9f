"""Universal cycles for graph families: construction and exhaustive verification."""

from .families import FamilyDescriptor, IsoClassCode
from .ordered_graph import OrderedPartialGraph, WindowRef, graph
from .report import CoverageReport
from .words import PartialWord

__all__ = [
    "CoverageReport",
    "FamilyDescriptor",
    "IsoClassCode",
    "OrderedPartialGraph",
    "PartialWord",
    "WindowRef",
    "graph",
]
