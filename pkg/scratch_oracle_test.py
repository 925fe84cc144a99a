"""Dev scratch: randomized engine-vs-oracle comparison."""
import itertools
import random
import sys

import rayweave as rw
from rayweave.codes import RayCode, LoopCode, Terminus, OPEN, ON_SEGMENT, AT_POINT
from rayweave.oracle import oracle_intersection, oracle_self, OracleBoundError

random.seed(int(sys.argv[1]) if len(sys.argv) > 1 else 1)

s = rw.build_canonical_surface(1, 4)
seg_ids = [g.id for g in s.segments]
pt_ids = [p.id for p in s.points if p.kind != "infinity"]


def random_code(max_len, allow_loop=True):
    while True:
        hem = random.choice("NS")
        n = random.randrange(max_len + 1)
        xs = []
        for _ in range(n):
            xs.append(random.choice(seg_ids))
        kind = random.choice(["open", "seg", "pt", "loop"] if allow_loop else ["open", "seg", "pt"])
        if kind == "loop":
            c = LoopCode(hem, tuple(xs))
        elif kind == "open":
            c = RayCode(hem, tuple(xs), Terminus(OPEN))
        elif kind == "seg":
            c = RayCode(hem, tuple(xs), Terminus(ON_SEGMENT, random.choice(seg_ids)))
        else:
            c = RayCode(hem, tuple(xs), Terminus(AT_POINT, random.choice(pt_ids)))
        c = rw.tighten(s, c)
        if isinstance(c, LoopCode) and not c.crossings:
            continue
        return c


n_trials = 300
mismatch = 0
for t in range(n_trials):
    a = random_code(4)
    b = random_code(4)
    try:
        want = oracle_intersection(s, a, b)
    except OracleBoundError:
        continue
    got = rw.intersection_number(s, a, b)
    if got != want:
        mismatch += 1
        print("MISMATCH", rw.format_code(a), "|", rw.format_code(b), "engine", got, "oracle", want)
        if mismatch > 8:
            break
print("pair trials done, mismatches:", mismatch)

mismatch = 0
for t in range(n_trials):
    a = random_code(5)
    try:
        want = oracle_self(s, a)
    except OracleBoundError:
        continue
    got = rw.self_intersection(s, a)
    if got != want:
        mismatch += 1
        print("SELF MISMATCH", rw.format_code(a), "engine", got, "oracle", want)
        if mismatch > 8:
            break
print("self trials done, mismatches:", mismatch)
