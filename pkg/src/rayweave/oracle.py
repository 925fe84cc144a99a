"""Brute-force crossing-number oracle, independent of the realization
engine.

Instead of computing forced orders, it enumerates every total order of
the events in every location (all push-offs, all shuffles), counts the
interleaved chord pairs of each configuration, and minimizes.  The
reported pair count is the minimum over configurations in which each
code separately attains its own minimal self-crossing count, i.e. both
curves are taut.  Exponential: test use only.
"""

from __future__ import annotations

import itertools

from .codes import (AT_POINT, Code, LoopCode, ON_SEGMENT,
                    validate_ids_only)
from .surface import MarkedSurface


class OracleBoundError(ValueError):
    pass


_MAX_CONFIGS = 2_000_000


def _strand_nodes(s: MarkedSurface, c: Code):
    locs = [2 * s.position(s.infinity_id)]
    for sid in c.crossings:
        locs.append(2 * s.segment_index(sid) + 1)
    if isinstance(c, LoopCode):
        locs.append(2 * s.position(s.infinity_id))
    else:
        t = c.terminus
        if t.kind == ON_SEGMENT:
            locs.append(2 * s.segment_index(t.id) + 1)
        elif t.kind == AT_POINT:
            locs.append(2 * s.position(t.id))
    hemi0 = 0 if c.first_hemisphere == "N" else 1
    return locs, hemi0


def _crosses(a1, a2, b1, b2, total):
    lo = a1
    span = (a2 - lo) % total
    x = (b1 - lo) % total
    y = (b2 - lo) % total
    return (0 < x < span) != (0 < y < span)


def _config_counts(per_loc_orders, node_info, n_codes, total):
    pos = {}
    p = 0
    for _loc, nodes in per_loc_orders:
        for g in nodes:
            pos[g] = p
            p += 1
    chords = []
    for k, (locs, hemi0, base) in enumerate(node_info):
        for j in range(len(locs) - 1):
            chords.append((pos[base + j], pos[base + j + 1], hemi0 ^ (j & 1), k))
    counts = [[0] * n_codes for _ in range(n_codes)]
    m = len(chords)
    for i in range(m):
        a1, a2, ha, ka = chords[i]
        for j in range(i + 1, m):
            b1, b2, hb, kb = chords[j]
            if ha != hb:
                continue
            if _crosses(a1, a2, b1, b2, total):
                lo, hi = (ka, kb) if ka <= kb else (kb, ka)
                counts[lo][hi] += 1
    return counts


def _enumerate_counts(s: MarkedSurface, codes):
    for c in codes:
        validate_ids_only(s, c)
    node_info = []
    base = 0
    all_nodes_by_loc: dict[int, list[int]] = {}
    for k, c in enumerate(codes):
        locs, hemi0 = _strand_nodes(s, c)
        node_info.append((locs, hemi0, base))
        for j, location in enumerate(locs):
            all_nodes_by_loc.setdefault(location, []).append(base + j)
        base += len(locs)
    total = base

    locations = sorted(all_nodes_by_loc)
    n_configs = 1
    for location in locations:
        k = len(all_nodes_by_loc[location])
        for f in range(2, k + 1):
            n_configs *= f
        if n_configs > _MAX_CONFIGS:
            raise OracleBoundError("too many event orders for the oracle")

    option_lists = [list(itertools.permutations(all_nodes_by_loc[location]))
                    for location in locations]
    for choice in itertools.product(*option_lists):
        per_loc = list(zip(locations, choice))
        yield _config_counts(per_loc, node_info, len(codes), total)


def oracle_self(s: MarkedSurface, a: Code) -> int:
    """Minimal self-crossing count over all event orders."""
    return min(c[0][0] for c in _enumerate_counts(s, (a,)))


def oracle_intersection(s: MarkedSurface, a: Code, b: Code) -> int:
    """Minimal crossing count between taut representatives of a and b."""
    best_self_a = None
    best_self_b = None
    configs = []
    for c in _enumerate_counts(s, (a, b)):
        sa, sb, x = c[0][0], c[1][1], c[0][1]
        configs.append((sa, sb, x))
        if best_self_a is None or sa < best_self_a:
            best_self_a = sa
        if best_self_b is None or sb < best_self_b:
            best_self_b = sb
    return min(x for sa, sb, x in configs
               if sa == best_self_a and sb == best_self_b)
