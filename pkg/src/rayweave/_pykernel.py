"""Pure-Python realization kernel.

Flat integer model shared with the compiled twin (``_ckernel``):

* locations: marked point i -> 2i ("cluster" of arc endpoints at the
  point), segment i -> 2i+1; all indices around the circle in the
  positive direction.
* strand: one code; node 0 is its start slot in the infinity cluster,
  nodes 1..m its crossing events, plus one final node when the code is
  anchored (pin on a segment, marked point, or the infinity cluster for
  loops).  Chord j joins nodes j and j+1 and lies in hemisphere
  ``hemi0 ^ (j & 1)``.

The kernel orders, within every location, the nodes lying there so that
no two chords cross unless forced, then counts forced crossings as
interleaved same-hemisphere chord pairs.

Ordering works on corridor chains.  Two co-located nodes form a pair;
following both strands across their chords on one side either leaves the
pair (traces split into different locations, giving a verdict: the
strand whose far stop is nearer in the positive direction must sit
later), reaches another co-located pair (the strands run parallel for a
hop; the required order flips), or runs out (an end of a strand).  A
maximal run of pairs is resolved as one unit:

* verdicts at both ends agreeing (after flips): forced order throughout;
* verdicts disagreeing: the strands genuinely cross once somewhere in
  the corridor; orders follow one end and the single crossing
  materializes at the other (which end is a deterministic convention --
  the count is the same);
* no verdict at all: a parallel bundle (push-off copies, free ends); the
  order is chosen once at a canonical end of the corridor and carried
  back with alternating sign, keeping bundles flat.

Within a location the resolved pair orders are assembled into a total
order; forced relations that cannot be totalized raise KernelError
(possible only on unreduced input).
"""

from __future__ import annotations


class KernelError(RuntimeError):
    pass


# pair classes (soft-edge priority: bundle flatness outranks crossing
# hosting, because breaking a bundle braids parallel strands -- an extra
# crossing -- while a hosting can slide along its corridor for free)
_HARD = 4       # forced (verdict-backed) order
_BUNDLE = 3     # parallel bundle preference
_CROSS_PREF = 2  # frustrated corridor: preferred hosting of its crossing
_FREE = 1       # no shared hemisphere: order immaterial


class _PairResolver:
    def __init__(self, locs, offsets, node_strand, hemi0, has_end, n_loc, flags):
        self.locs = locs
        self.offsets = offsets
        self.node_strand = node_strand
        self.hemi0 = hemi0
        self.has_end = has_end
        self.n_loc = n_loc
        self.flags = flags
        self.cache: dict[tuple[int, int], tuple[int, int]] = {}

    def _far(self, g, side):
        offsets, node_strand, hemi0 = self.offsets, self.node_strand, self.hemi0
        k = node_strand[g]
        i = g - offsets[k]
        n_nodes = offsets[k + 1] - offsets[k]
        if i - 1 >= 0 and (hemi0[k] ^ ((i - 1) & 1)) == side:
            return g - 1
        if i < n_nodes - 1 and (hemi0[k] ^ (i & 1)) == side:
            return g + 1
        return -1

    def _is_stub(self, g):
        k = self.node_strand[g]
        i = g - self.offsets[k]
        last = self.offsets[k + 1] - self.offsets[k] - 1
        return i == last and not self.has_end[k] and last > 0

    def resolve(self, u, v):
        """(class, r) with r = -1 iff u sits before v (positive order)."""
        if u > v:
            klass, r = self.resolve(v, u)
            return klass, -r
        key = (u, v)
        hit = self.cache.get(key)
        if hit is None:
            self._resolve_chain(key)
            hit = self.cache[key]
        return hit

    def _resolve_chain(self, seed):
        locs, n_loc = self.locs, self.n_loc
        pairs: dict[tuple[int, int], int] = {seed: 1}
        ends = []
        hops_total = 0
        for direction in (0, 1):
            a, b = seed
            parity = 1
            side = direction
            while True:
                fa = self._far(a, side)
                fb = self._far(b, side)
                if fa < 0 or fb < 0:
                    ends.append(("stop", a, b, parity))
                    break
                la, lb = locs[fa], locs[fb]
                if la != lb:
                    cur = locs[a]
                    da = (la - cur) % n_loc
                    db = (lb - cur) % n_loc
                    if da == 0 or db == 0:
                        raise KernelError(
                            "chord stays in its location; input not reduced")
                    r = 1 if da < db else -1   # nearer far end sits later
                    key = (min(a, b), max(a, b), side)
                    ends.append(("div", parity * r, key))
                    break
                if fa == fb:
                    raise KernelError("traces merged; corrupt strand data")
                a, b = fa, fb
                parity = -parity
                side ^= 1
                hops_total += 1
                k2 = (fa, fb) if fa < fb else (fb, fa)
                q = parity if fa < fb else -parity
                if k2 not in pairs:
                    pairs[k2] = q

        kinds = (ends[0][0], ends[1][0])
        if kinds == ("div", "div"):
            r0, r1 = ends[0][1], ends[1][1]
            if r0 == r1:
                klass, r_seed = _HARD, r0
            else:
                # frustrated corridor: the strands cross once inside it.
                # Preferred hosting: honor the lexicographically smaller
                # divergence end (the crossing lands at the other one);
                # the topological sort may slide the hosting if other
                # forced relations demand it -- the count stays one.
                klass = _CROSS_PREF
                r_seed = r0 if ends[0][2] <= ends[1][2] else r1
        elif "div" in kinds:
            klass = _HARD
            r_seed = ends[0][1] if kinds[0] == "div" else ends[1][1]
        else:
            # no verdict anywhere: bundle (or two chord-free nodes)
            if hops_total == 0:
                a, b = seed
                self.cache[seed] = (_FREE, -1)
                return
            e0 = (min(ends[0][1], ends[0][2]), max(ends[0][1], ends[0][2]))
            e1 = (min(ends[1][1], ends[1][2]), max(ends[1][1], ends[1][2]))
            chosen = ends[0] if e0 <= e1 else ends[1]
            _tag, ea, eb, parity = chosen
            for g in (ea, eb):
                if self._is_stub(g):
                    self.flags.add("truncation-ambiguous")
            base = -1 if ea < eb else 1
            klass, r_seed = _BUNDLE, parity * base
        for k2, q in pairs.items():
            self.cache[k2] = (klass, q * r_seed)


def _order_location(nodes, resolver):
    """Total order extending all forced pair orders; bundle preferences
    steer the remaining freedom.  Raises on a forced cycle."""
    n = len(nodes)
    if n == 1:
        return list(nodes)
    adj = [[False] * n for _ in range(n)]
    soft = []
    for i in range(n):
        for j in range(i + 1, n):
            klass, r = resolver.resolve(nodes[i], nodes[j])
            u, v = (i, j) if r < 0 else (j, i)
            if klass == _HARD:
                adj[u][v] = True
            elif klass in (_CROSS_PREF, _BUNDLE):
                soft.append((-klass, u, v))

    def reaches(src, dst):
        seen = [False] * n
        stack = [src]
        while stack:
            x = stack.pop()
            if x == dst:
                return True
            row = adj[x]
            for y in range(n):
                if row[y] and not seen[y]:
                    seen[y] = True
                    stack.append(y)
        return False

    for i in range(n):
        for j in range(n):
            if adj[i][j] and reaches(j, i):
                raise KernelError("ordering contradiction while realizing family")

    soft.sort()
    for _prio, u, v in soft:
        if not adj[u][v] and not reaches(v, u):
            adj[u][v] = True

    indeg = [0] * n
    for i in range(n):
        for j in range(n):
            if adj[i][j]:
                indeg[j] += 1
    out = []
    used = [False] * n
    for _ in range(n):
        best = -1
        for i in range(n):
            if not used[i] and indeg[i] == 0 and (best < 0 or nodes[i] < nodes[best]):
                best = i
        if best < 0:
            raise KernelError("ordering contradiction while realizing family")
        used[best] = True
        out.append(nodes[best])
        for j in range(n):
            if adj[best][j] and not used[j]:
                indeg[j] -= 1
    return out


def realize_kernel(n_loc, strand_locs, strand_hemi0, strand_has_end):
    """Order all nodes and lay out chords.

    Returns (orders, positions, chords, flags, total):
      orders: {loc: [global node, ...]} in positive order
      positions: list, circle position of each global node
      chords: list of (posA, posB, hemisphere, strand, chord_index)
      flags: set of strings
    """
    offsets = [0]
    locs = []
    for sl in strand_locs:
        locs.extend(sl)
        offsets.append(len(locs))
    node_strand = []
    for k, sl in enumerate(strand_locs):
        node_strand.extend([k] * len(sl))

    by_loc: dict[int, list[int]] = {}
    for g, location in enumerate(locs):
        by_loc.setdefault(location, []).append(g)

    flags: set[str] = set()
    resolver = _PairResolver(locs, offsets, node_strand, list(strand_hemi0),
                             list(strand_has_end), n_loc, flags)

    orders: dict[int, list[int]] = {}
    for location in sorted(by_loc):
        orders[location] = _order_location(by_loc[location], resolver)

    positions = [0] * len(locs)
    pos = 0
    for location in range(n_loc):
        for g in orders.get(location, ()):
            positions[g] = pos
            pos += 1
    total = pos

    chords = []
    for k in range(len(strand_locs)):
        start, end = offsets[k], offsets[k + 1]
        for j in range(end - start - 1):
            h = strand_hemi0[k] ^ (j & 1)
            chords.append((positions[start + j], positions[start + j + 1],
                           h, k, j))
    return orders, positions, chords, flags, total


def _interleaves(a1, a2, b1, b2, total):
    """Do chords {a1,a2} and {b1,b2} cross (endpoints alternate)?"""
    span = (a2 - a1) % total
    x = (b1 - a1) % total
    y = (b2 - a1) % total
    return (0 < x < span) != (0 < y < span)


def count_crossings(chords, n_strands, total):
    """Upper-triangular matrix of forced crossing counts; the diagonal
    holds self-crossings."""
    counts = [[0] * n_strands for _ in range(n_strands)]
    m = len(chords)
    for i in range(m):
        a1, a2, ha, ka, _ = chords[i]
        for j in range(i + 1, m):
            b1, b2, hb, kb, _ = chords[j]
            if ha != hb:
                continue
            if _interleaves(a1, a2, b1, b2, total):
                lo, hi = (ka, kb) if ka <= kb else (kb, ka)
                counts[lo][hi] += 1
    return counts
