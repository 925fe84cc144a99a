"""rayweave: exact combinatorics of rays and loops on the plane minus a
Cantor set, with machine verification of an inductively embedded tree of
pairwise-disjoint rays."""

from .surface import (MarkedSurface, build_canonical_surface, refine_with_vertex,
                      segments_in_disk)
from .codes import (LoopCode, RayCode, Terminus, begins_like, canonical_key,
                    format_code, parse_code, tighten, validate)
from .engine import (Realization, crossing_matrix, disjoint, intersection_number,
                     is_simple, realize, self_intersection)
from .oracle import oracle_intersection, oracle_self

__all__ = [
    "MarkedSurface", "build_canonical_surface", "refine_with_vertex",
    "segments_in_disk",
    "LoopCode", "RayCode", "Terminus", "begins_like", "canonical_key",
    "format_code", "parse_code", "tighten", "validate",
    "Realization", "crossing_matrix", "disjoint", "intersection_number",
    "is_simple", "realize", "self_intersection",
    "oracle_intersection", "oracle_self",
]

__version__ = "0.1.0"
