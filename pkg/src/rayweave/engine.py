"""Exact geometric intersection numbers for families of reduced codes.

``realize`` puts a family in minimal position (no removable crossing
between any two strands and none within a strand); crossing numbers are
then the interleaved same-hemisphere chord pairs.  Codes sharing the
ideal endpoint at infinity are pushed off into distinct slots whose
order around the cluster is chosen, like every other order, by the
forced-nesting comparison, which realizes the minimum over push-offs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import backend
from .codes import (AT_POINT, Code, CodeError, LoopCode, ON_SEGMENT, OPEN,
                    RayCode, is_reduced)
from .surface import MarkedSurface


class EngineError(ValueError):
    pass


RealizationError = backend.KernelError


@dataclass(frozen=True)
class Realization:
    surface: MarkedSurface
    codes: tuple[Code, ...]
    orders: dict          # location index -> [global node index, ...]
    positions: tuple      # global node index -> circle position
    chords: tuple         # (posA, posB, hemisphere, strand, chord index)
    counts: tuple         # upper-triangular crossing matrix, diag = self
    flags: frozenset[str]

    def crossing_count(self, i: int, j: int) -> int:
        lo, hi = (i, j) if i <= j else (j, i)
        return self.counts[lo][hi]


def _loc_of_point(s: MarkedSurface, pid: str) -> int:
    return 2 * s.position(pid)


def _loc_of_segment(s: MarkedSurface, sid: str) -> int:
    return 2 * s.segment_index(sid) + 1


def _strand(s: MarkedSurface, c: Code) -> tuple[list[int], int, bool]:
    locs = [_loc_of_point(s, s.infinity_id)]
    for sid in c.crossings:
        locs.append(_loc_of_segment(s, sid))
    hemi0 = 0 if c.first_hemisphere == "N" else 1
    if isinstance(c, LoopCode):
        locs.append(_loc_of_point(s, s.infinity_id))
        return locs, hemi0, True
    t = c.terminus
    if t.kind == ON_SEGMENT:
        locs.append(_loc_of_segment(s, t.id))
        return locs, hemi0, True
    if t.kind == AT_POINT:
        locs.append(_loc_of_point(s, t.id))
        return locs, hemi0, True
    return locs, hemi0, False  # open stub: last crossing is the last node


def realize(s: MarkedSurface, codes: list[Code] | tuple[Code, ...]) -> Realization:
    """Minimal-position realization of a family of reduced codes.

    An ordering contradiction (impossible on reduced input) raises
    ``RealizationError`` rather than being silently repaired.
    """
    codes = tuple(codes)
    for c in codes:
        if not is_reduced(s, c):
            raise EngineError(f"code not reduced: {c}")
    strand_locs, hemi0s, has_ends = [], [], []
    for c in codes:
        locs, h0, has_end = _strand(s, c)
        strand_locs.append(locs)
        hemi0s.append(h0)
        has_ends.append(has_end)
    n_loc = 2 * s.n_points()
    orders, positions, chords, flags, total = backend.realize_kernel(
        n_loc, strand_locs, hemi0s, has_ends)
    counts = backend.count_crossings(chords, len(codes), total)
    return Realization(surface=s, codes=codes, orders=orders,
                       positions=tuple(positions), chords=tuple(chords),
                       counts=tuple(tuple(row) for row in counts),
                       flags=frozenset(flags))


def intersection_number(s: MarkedSurface, a: Code, b: Code) -> int:
    """Minimal crossing number between the two codes (push-offs at shared
    endpoints; interior crossings only).  Symmetric."""
    r = realize(s, (a, b))
    return r.crossing_count(0, 1)


def self_intersection(s: MarkedSurface, a: Code) -> int:
    r = realize(s, (a,))
    return r.crossing_count(0, 0)


def is_simple(s: MarkedSurface, a: Code) -> bool:
    return self_intersection(s, a) == 0


def crossing_matrix(s: MarkedSurface, codes: list[Code] | tuple[Code, ...]
                    ) -> Realization:
    """One realization of the whole family; pairwise counts in ``counts``."""
    return realize(s, codes)


def disjoint(s: MarkedSurface, a: Code, b: Code) -> bool:
    return intersection_number(s, a, b) == 0
