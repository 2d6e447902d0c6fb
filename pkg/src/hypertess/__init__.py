"""hypertess: navigation, numeration and rendering for hyperbolic tessellations.

The heptagrid {7,3} and pentagrid {5,4} are addressed through the tree
spanning each angular sector; n-trigrids (recursive triangular subdivisions)
get linear-time neighbour computation; a Poincare-disc oracle built purely
from reflections validates the whole coordinate algebra.
"""

from .numeration import Basis, basis, beta, decode, encode, is_regular_language_case
from .fibtree import NodeInfo, branch_class, level_bounds, node_info
from .tiling import CENTRAL, TileCoord, Tiling
from .trigrid import TriCoord, Trigrid
from .geometry import (Motion, PlacedPolygon, PlacedTriangle, adjacency_report,
                       central_polygon, generate, place, place_tri)
from .ca import Region, Rule, build_region, parse_rule, run, step
from .svg import RenderOptions, Scene, render_svg

__all__ = [
    "Basis", "basis", "beta", "decode", "encode", "is_regular_language_case",
    "NodeInfo", "branch_class", "level_bounds", "node_info",
    "CENTRAL", "TileCoord", "Tiling", "TriCoord", "Trigrid",
    "Motion", "PlacedPolygon", "PlacedTriangle", "adjacency_report",
    "central_polygon", "generate", "place", "place_tri",
    "Region", "Rule", "build_region", "parse_rule", "run", "step",
    "RenderOptions", "Scene", "render_svg",
]

__version__ = "0.1.0"
