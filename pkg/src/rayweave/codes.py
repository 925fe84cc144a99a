"""Codes for rays and loops: first hemisphere + crossed equatorial segments.

A ray starts at infinity; each crossing flips hemisphere, so the hemisphere
of every chord is implied by its index and never stored.  A code is reduced
when no retraction rule applies; reduced codes are the canonical names for
isotopy classes and everything else (intersection counts, enumeration,
verification) consumes reduced codes only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .surface import MarkedSurface, SurfaceError

N = "N"
S = "S"

OPEN = "open"
ON_SEGMENT = "segment"
AT_POINT = "point"


class CodeError(ValueError):
    pass


@dataclass(frozen=True)
class Terminus:
    kind: str  # OPEN | ON_SEGMENT | AT_POINT
    id: str | None = None

    def __post_init__(self):
        if self.kind == OPEN and self.id is not None:
            raise CodeError("open terminus carries no id")
        if self.kind in (ON_SEGMENT, AT_POINT) and not self.id:
            raise CodeError(f"{self.kind} terminus needs an id")


@dataclass(frozen=True)
class RayCode:
    first_hemisphere: str
    crossings: tuple[str, ...]
    terminus: Terminus = field(default_factory=lambda: Terminus(OPEN))

    def __post_init__(self):
        if self.first_hemisphere not in (N, S):
            raise CodeError("hemisphere must be N or S")

    def chord_hemisphere(self, j: int) -> str:
        """Hemisphere of chord j (chord 0 leaves infinity)."""
        if j % 2 == 0:
            return self.first_hemisphere
        return S if self.first_hemisphere == N else N


@dataclass(frozen=True)
class LoopCode:
    first_hemisphere: str
    crossings: tuple[str, ...]

    def __post_init__(self):
        if self.first_hemisphere not in (N, S):
            raise CodeError("hemisphere must be N or S")

    def chord_hemisphere(self, j: int) -> str:
        if j % 2 == 0:
            return self.first_hemisphere
        return S if self.first_hemisphere == N else N


Code = RayCode | LoopCode


def validate(s: MarkedSurface, c: Code) -> None:
    """Raise CodeError unless all ids exist and the terminus is well formed."""
    for sid in c.crossings:
        if not s.has_segment(sid):
            raise CodeError(f"unknown segment id {sid!r} in crossings")
    if isinstance(c, LoopCode):
        if not c.crossings:
            raise CodeError("trivial loop")
        return
    t = c.terminus
    if t.kind == ON_SEGMENT:
        if not s.has_segment(t.id):
            raise CodeError(f"unknown terminus segment {t.id!r}")
    elif t.kind == AT_POINT:
        if not s.has_point(t.id):
            raise CodeError(f"unknown terminus point {t.id!r}")
        if t.id == s.infinity_id:
            raise CodeError("ray terminus at infinity; use a LoopCode")


def _incident_to_infinity(s: MarkedSurface, sid: str) -> bool:
    return s.is_incident(sid, s.infinity_id)


def tighten(s: MarkedSurface, c: Code) -> Code:
    """Apply retraction rules until none applies; the result is reduced.

    Rules: an immediately repeated segment bounds an empty disk and cancels;
    a first crossing on a segment touching infinity retracts across it and
    flips the starting hemisphere; a last crossing equal to (or touching)
    the anchored terminus retracts.  Open ends are truncation artifacts and
    are never retracted from the open side.
    """
    validate_ids_only(s, c)
    first = c.first_hemisphere
    xs = list(c.crossings)
    is_loop = isinstance(c, LoopCode)

    changed = True
    while changed:
        changed = False
        # repeated-segment cancellation, leftmost pair first
        i = 0
        while i + 1 < len(xs):
            if xs[i] == xs[i + 1]:
                del xs[i:i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
        # initial retraction at infinity
        if xs and _incident_to_infinity(s, xs[0]):
            del xs[0]
            first = S if first == N else N
            changed = True
            continue
        if is_loop:
            # loops are anchored at infinity at both ends
            if xs and _incident_to_infinity(s, xs[-1]):
                del xs[-1]
                changed = True
            continue
        t = c.terminus
        if t.kind == ON_SEGMENT and xs and xs[-1] == t.id:
            del xs[-1]
            changed = True
        elif t.kind == AT_POINT and xs and s.is_incident(xs[-1], t.id):
            del xs[-1]
            changed = True

    if is_loop:
        return LoopCode(first, tuple(xs))
    return RayCode(first, tuple(xs), c.terminus)


def validate_ids_only(s: MarkedSurface, c: Code) -> None:
    for sid in c.crossings:
        if not s.has_segment(sid):
            raise CodeError(f"unknown segment id {sid!r} in crossings")
    if isinstance(c, RayCode):
        t = c.terminus
        if t.kind == ON_SEGMENT and not s.has_segment(t.id):
            raise CodeError(f"unknown terminus segment {t.id!r}")
        if t.kind == AT_POINT:
            if not s.has_point(t.id):
                raise CodeError(f"unknown terminus point {t.id!r}")
            if t.id == s.infinity_id:
                raise CodeError("ray terminus at infinity; use a LoopCode")


def is_reduced(s: MarkedSurface, c: Code) -> bool:
    return tighten(s, c) == c


def is_boundary_whisker(s: MarkedSurface, c: Code) -> bool:
    """A crossing-free pinned ray landing on a segment next to infinity.

    Such an arc cobounds an empty disk with the equator and represents no
    essential ray; enumeration emits it (it is a valid reduced code) but the
    forcing checks skip it.
    """
    return (isinstance(c, RayCode) and not c.crossings
            and c.terminus.kind == ON_SEGMENT
            and _incident_to_infinity(s, c.terminus.id))


def _segment_matches(s: MarkedSurface, sid: str, landing: str) -> bool:
    # crossing a descendant of the landing segment counts as crossing it
    return s.seg_descends_from(sid, landing)


def _point_adjacent_to_landing(s: MarkedSurface, pid: str, landing: str) -> bool:
    for seg in s.segments:
        if pid in (seg.left, seg.right) and s.seg_descends_from(seg.id, landing):
            return True
    return False


def begins_like(s: MarkedSurface, r: RayCode, b: RayCode) -> bool:
    """Does ray ``r`` start with branch ``b``'s crossings and then meet the
    segment where ``b`` ends?

    ``b`` must be a finite branch (terminus on a segment).  If that segment
    was later refined, any descendant half counts.  An open ``r`` that stops
    exactly at the prefix gives insufficient evidence and returns False.
    """
    if b.terminus.kind != ON_SEGMENT:
        raise CodeError("begins_like needs a finite branch ending on a segment")
    if r.first_hemisphere != b.first_hemisphere:
        return False
    n = len(b.crossings)
    if len(r.crossings) < n:
        return False
    for i in range(n):
        if not _segment_matches(s, r.crossings[i], b.crossings[i]):
            return False
    landing = b.terminus.id
    if len(r.crossings) > n:
        return _segment_matches(s, r.crossings[n], landing)
    # r ends exactly at the prefix: only an anchored end on the landing
    # segment (or at a point touching it) counts
    t = r.terminus
    if t.kind == ON_SEGMENT:
        return _segment_matches(s, t.id, landing)
    if t.kind == AT_POINT:
        return _point_adjacent_to_landing(s, t.id, landing)
    return False


def canonical_key(c: Code) -> bytes:
    """Injective, deterministic key for a reduced code over a fixed surface."""
    if isinstance(c, LoopCode):
        head = b"L|" + c.first_hemisphere.encode()
        tail = b"|@inf"
    else:
        head = b"R|" + c.first_hemisphere.encode()
        t = c.terminus
        if t.kind == OPEN:
            tail = b"|@open"
        elif t.kind == ON_SEGMENT:
            tail = b"|@s:" + t.id.encode()
        else:
            tail = b"|@p:" + t.id.encode()
    return head + b"|" + ",".join(c.crossings).encode() + tail


def format_code(c: Code) -> str:
    """One-liner form, e.g. ``N:s3,s7,s3;@s9`` or ``S:s1,s4;@loop``."""
    body = ",".join(c.crossings)
    if isinstance(c, LoopCode):
        return f"{c.first_hemisphere}:{body};@loop"
    t = c.terminus
    if t.kind == OPEN:
        suffix = "@open"
    elif t.kind == ON_SEGMENT:
        suffix = f"@{t.id}"
    else:
        suffix = f"@pt:{t.id}"
    return f"{c.first_hemisphere}:{body};{suffix}"


def parse_code(text: str) -> Code:
    try:
        hem, rest = text.split(":", 1)
        body, suffix = rest.rsplit(";", 1)
    except ValueError:
        raise CodeError(f"malformed code literal {text!r}") from None
    hem = hem.strip()
    crossings = tuple(x.strip() for x in body.split(",") if x.strip())
    suffix = suffix.strip()
    if suffix == "@loop":
        return LoopCode(hem, crossings)
    if suffix == "@open":
        return RayCode(hem, crossings, Terminus(OPEN))
    if suffix.startswith("@pt:"):
        return RayCode(hem, crossings, Terminus(AT_POINT, suffix[4:]))
    if suffix.startswith("@"):
        return RayCode(hem, crossings, Terminus(ON_SEGMENT, suffix[1:]))
    raise CodeError(f"malformed code terminus in {text!r}")


def code_to_dict(c: Code) -> dict:
    if isinstance(c, LoopCode):
        return {"first": c.first_hemisphere, "crossings": list(c.crossings),
                "terminus": {"kind": "loop"}}
    t = c.terminus
    td: dict = {"kind": t.kind}
    if t.id is not None:
        td["id"] = t.id
    return {"first": c.first_hemisphere, "crossings": list(c.crossings),
            "terminus": td}


def code_from_dict(d: dict) -> Code:
    t = d["terminus"]
    if t["kind"] == "loop":
        return LoopCode(d["first"], tuple(d["crossings"]))
    if t["kind"] == OPEN:
        term = Terminus(OPEN)
    else:
        term = Terminus(t["kind"], t["id"])
    return RayCode(d["first"], tuple(d["crossings"]), term)
