"""Finite combinatorial model of the sphere minus ({infinity} + Cantor chunks).

The equator is an oriented circle carrying marked points: one point at
infinity, finitely many Cantor "chunk" points grouped into nested disk
levels, and vertex anchors created when tree vertices land on the equator.
Consecutive marked points bound equatorial segments; everything downstream
(ray codes, intersection counts) is phrased in terms of these segments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


class SurfaceError(ValueError):
    pass


INFINITY = "infinity"
CHUNK = "chunk"
VERTEX = "vertex"


@dataclass(frozen=True)
class MarkedPoint:
    id: str
    kind: str  # one of INFINITY, CHUNK, VERTEX
    level: int | None = None   # chunk level (exterior chunk gets K+1)
    index: int | None = None   # chunk index within its level
    address: str | None = None  # vertex anchors only

    def is_infinity(self) -> bool:
        return self.kind == INFINITY


@dataclass(frozen=True)
class Segment:
    id: str
    left: str   # marked-point id, start in the positive direction
    right: str  # marked-point id, end in the positive direction


@dataclass(frozen=True)
class DiskInterval:
    level: int
    members: tuple[str, ...]  # point ids, contiguous in cyclic order


class MarkedSurface:
    """Immutable marked equator circle.

    ``points`` is the cyclic order (positive direction); ``segments[i]``
    joins ``points[i]`` to ``points[i+1]``.  Refinement never mutates a
    surface: it returns a new one plus an id translation map.
    """

    def __init__(self, points: Iterable[MarkedPoint], segments: Iterable[Segment],
                 disks: Iterable[DiskInterval], truncation_level: int,
                 seg_parent: Mapping[str, str] | None = None):
        self.points: tuple[MarkedPoint, ...] = tuple(points)
        self.segments: tuple[Segment, ...] = tuple(segments)
        self.disks: tuple[DiskInterval, ...] = tuple(disks)
        self.truncation_level = truncation_level
        self.seg_parent: dict[str, str] = dict(seg_parent or {})
        if len(self.points) != len(self.segments):
            raise SurfaceError("points and segments must alternate around the circle")
        self._pos = {p.id: i for i, p in enumerate(self.points)}
        if len(self._pos) != len(self.points):
            raise SurfaceError("duplicate point id")
        self._seg_pos = {s.id: i for i, s in enumerate(self.segments)}
        if len(self._seg_pos) != len(self.segments):
            raise SurfaceError("duplicate segment id")
        infs = [p for p in self.points if p.kind == INFINITY]
        if len(infs) != 1:
            raise SurfaceError("exactly one infinity point required")
        self.infinity_id = infs[0].id
        for i, s in enumerate(self.segments):
            if s.left != self.points[i].id or s.right != self.points[(i + 1) % len(self.points)].id:
                raise SurfaceError(f"segment {s.id} out of cyclic order")
        self._disk_sets = {d.level: frozenset(d.members) for d in self.disks}

    # -- lookups ---------------------------------------------------------

    def n_points(self) -> int:
        return len(self.points)

    def point(self, pid: str) -> MarkedPoint:
        try:
            return self.points[self._pos[pid]]
        except KeyError:
            raise SurfaceError(f"unknown point id {pid!r}") from None

    def has_point(self, pid: str) -> bool:
        return pid in self._pos

    def position(self, pid: str) -> int:
        try:
            return self._pos[pid]
        except KeyError:
            raise SurfaceError(f"unknown point id {pid!r}") from None

    def segment(self, sid: str) -> Segment:
        try:
            return self.segments[self._seg_pos[sid]]
        except KeyError:
            raise SurfaceError(f"unknown segment id {sid!r}") from None

    def has_segment(self, sid: str) -> bool:
        return sid in self._seg_pos

    def segment_index(self, sid: str) -> int:
        try:
            return self._seg_pos[sid]
        except KeyError:
            raise SurfaceError(f"unknown segment id {sid!r}") from None

    def segment_between(self, left_pid: str, right_pid: str) -> Segment:
        seg = self.segments[self.position(left_pid)]
        if seg.right != right_pid:
            raise SurfaceError(f"no segment from {left_pid!r} to {right_pid!r}")
        return seg

    def incident_segments(self, pid: str) -> tuple[Segment, Segment]:
        """Segments (before, after) the point in the positive direction."""
        i = self.position(pid)
        return self.segments[i - 1], self.segments[i]

    def is_incident(self, sid: str, pid: str) -> bool:
        seg = self.segment(sid)
        return pid in (seg.left, seg.right)

    def seg_ancestors(self, sid: str) -> list[str]:
        out = []
        cur = sid
        while cur in self.seg_parent:
            cur = self.seg_parent[cur]
            out.append(cur)
        return out

    def seg_descends_from(self, sid: str, ancestor: str) -> bool:
        if sid == ancestor:
            return True
        return ancestor in self.seg_ancestors(sid)

    # -- disk queries ----------------------------------------------------

    def disk_members(self, k: int) -> frozenset[str]:
        if k not in self._disk_sets:
            raise SurfaceError(f"no disk at level {k}")
        return self._disk_sets[k]

    def exterior_chunk_id(self) -> str:
        top = self.disk_members(self.truncation_level)
        out = [p.id for p in self.points if p.kind == CHUNK and p.id not in top]
        if len(out) != 1:
            raise SurfaceError("expected exactly one chunk outside the top disk")
        return out[0]


def segments_in_disk(s: MarkedSurface, k: int) -> frozenset[str]:
    """Ids of the segments whose both endpoints lie in the level-k disk."""
    if not (1 <= k <= s.truncation_level):
        raise SurfaceError(f"disk level {k} out of range 1..{s.truncation_level}")
    members = s.disk_members(k)
    return frozenset(seg.id for seg in s.segments
                     if seg.left in members and seg.right in members)


def build_canonical_surface(K: int, chunks_per_vertex: int = 4) -> MarkedSurface:
    """Deterministic layout: walking positively from infinity, the right
    chunks of each level in level order, the single exterior chunk, then
    the left chunks from the top level back down to level 1.  Every disk
    is then a contiguous interval centered on infinity.
    """
    if K < 1:
        raise SurfaceError("truncation level must be >= 1")
    if chunks_per_vertex < 2:
        raise SurfaceError("need at least 2 chunks per vertex")

    def half_count(k: int) -> int:
        # level 1 always has 2 chunks per vertex as drawn; higher levels
        # carry chunks_per_vertex per vertex, i.e. cpv * 2^k points total.
        return 2 if k == 1 else chunks_per_vertex * (2 ** (k - 1))

    def chunk(k: int, i: int) -> MarkedPoint:
        return MarkedPoint(id=f"c{k}_{i}", kind=CHUNK, level=k, index=i)

    right: list[MarkedPoint] = []
    left: list[MarkedPoint] = []
    for k in range(1, K + 1):
        h = half_count(k)
        right.extend(chunk(k, i) for i in range(h))
        # left side mirrored: positive order runs from index 2h-1 down to h
        left[:0] = [chunk(k, i) for i in range(2 * h - 1, h - 1, -1)]
    ext = MarkedPoint(id="cext", kind=CHUNK, level=K + 1, index=0)
    pts = [MarkedPoint(id="inf", kind=INFINITY)] + right + [ext] + left

    segs = [Segment(id=f"s{i}", left=pts[i].id, right=pts[(i + 1) % len(pts)].id)
            for i in range(len(pts))]

    disks = []
    for k in range(1, K + 1):
        ids = {p.id for p in pts if p.kind == CHUNK and p.level is not None and p.level <= k}
        ids.add("inf")
        # contiguous interval: start at the first left chunk of level k
        order = [p.id for p in pts]
        start = order.index(f"c{k}_{2 * half_count(k) - 1}")
        members = []
        i = start
        while True:
            if order[i] in ids:
                members.append(order[i])
            else:
                break
            if order[i] == f"c{k}_{half_count(k) - 1}":
                break
            i = (i + 1) % len(order)
        if set(members) != ids:
            raise SurfaceError("canonical disk interval is not contiguous")
        disks.append(DiskInterval(level=k, members=tuple(members)))

    return MarkedSurface(pts, segs, disks, truncation_level=K)


def refine_with_vertex(s: MarkedSurface, seg_id: str, address: str
                       ) -> tuple[MarkedSurface, dict[str, tuple[str, str]]]:
    """Split ``seg_id`` at a fresh vertex anchor for ``address``.

    Returns the new surface and the translation map
    ``{old segment id: (left half id, right half id)}``.
    """
    seg = s.segment(seg_id)
    vid = f"v{address}"
    if s.has_point(vid):
        raise SurfaceError(f"vertex anchor for address {address!r} already exists")
    anchor = MarkedPoint(id=vid, kind=VERTEX, address=address)

    i = s.segment_index(seg_id)
    pts = list(s.points)
    pts.insert(i + 1, anchor)
    left_half = Segment(id=f"{seg_id}L", left=seg.left, right=vid)
    right_half = Segment(id=f"{seg_id}R", left=vid, right=seg.right)
    segs = list(s.segments)
    segs[i:i + 1] = [left_half, right_half]

    disks = []
    for d in s.disks:
        mem = set(d.members)
        if seg.left in mem and seg.right in mem:
            new_members = []
            for pid in d.members:
                new_members.append(pid)
                if pid == seg.left:
                    new_members.append(vid)
            disks.append(DiskInterval(level=d.level, members=tuple(new_members)))
        else:
            disks.append(d)

    parent = dict(s.seg_parent)
    parent[left_half.id] = seg_id
    parent[right_half.id] = seg_id
    new = MarkedSurface(pts, segs, disks, s.truncation_level, parent)
    return new, {seg_id: (left_half.id, right_half.id)}


# -- JSON ----------------------------------------------------------------
#
# Schema (round-trip exact):
#   {"truncation": K,
#    "points": [{"id": str, "kind": "infinity"|"chunk"|"vertex",
#                "level": int?, "index": int?, "address": str?}, ...],
#    "segments": [str, ...],                  # ids, cyclic order
#    "seg_parent": {child: parent, ...},      # refinement ancestry
#    "disks": [{"level": int, "members": [str, ...]}, ...]}

def surface_to_dict(s: MarkedSurface) -> dict:
    pts = []
    for p in s.points:
        d: dict = {"id": p.id, "kind": p.kind}
        if p.level is not None:
            d["level"] = p.level
        if p.index is not None:
            d["index"] = p.index
        if p.address is not None:
            d["address"] = p.address
        pts.append(d)
    return {
        "truncation": s.truncation_level,
        "points": pts,
        "segments": [seg.id for seg in s.segments],
        "seg_parent": dict(sorted(s.seg_parent.items())),
        "disks": [{"level": d.level, "members": list(d.members)} for d in s.disks],
    }


def surface_from_dict(data: dict) -> MarkedSurface:
    pts = [MarkedPoint(id=d["id"], kind=d["kind"], level=d.get("level"),
                       index=d.get("index"), address=d.get("address"))
           for d in data["points"]]
    ids = [d["id"] for d in data["points"]]
    seg_ids = data["segments"]
    segs = [Segment(id=seg_ids[i], left=ids[i], right=ids[(i + 1) % len(ids)])
            for i in range(len(ids))]
    disks = [DiskInterval(level=d["level"], members=tuple(d["members"]))
             for d in data["disks"]]
    return MarkedSurface(pts, segs, disks, data["truncation"],
                         data.get("seg_parent", {}))
