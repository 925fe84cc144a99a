"""Dev loop: test a candidate level-2 family: simplicity, disjointness,
and a mini prefix-forcing audit (paper-style begins-like: no hemisphere
requirement; landing-half pins conform; flank pins trivial)."""
import sys
import rayweave as rw
from rayweave.codes import RayCode, Terminus, ON_SEGMENT
from rayweave.surface import refine_with_vertex

s = rw.build_canonical_surface(2, 4)
s, _ = refine_with_vertex(s, 's1', '0')
s, _ = refine_with_vertex(s, 's20', '1')
A, h0a, h0b, B = 's0','s1L','s1R','s2'
h1a, h1b, Z, C = 's20L','s20R','s21','s19'
halves = {h0a, h0b, h1a, h1b}
flanks = {A, Z}
all_segs = [g.id for g in s.segments]

def check_family(courses_pins, L=4, verbose=True):
    fam = [RayCode('N', tuple(xs), Terminus(ON_SEGMENT, p)) for xs, p in courses_pins]
    for i, c in enumerate(fam):
        if rw.tighten(s, c) != c:
            print('NOT REDUCED', i, rw.format_code(c)); return None
        si = rw.self_intersection(s, c)
        if si:
            print('SELF-CROSSING', i, rw.format_code(c), si); return None
    r = rw.crossing_matrix(s, fam)
    bad = [(i, j, r.counts[i][j]) for i in range(len(fam)) for j in range(i+1, len(fam)) if r.counts[i][j]]
    if bad:
        print('NOT DISJOINT', bad); return None

    def disjoint_all(c):
        return all(rw.intersection_number(s, c, b) == 0 for b in fam)

    witnesses = []
    stats = {'conform':0, 'excused':0, 'trivial':0}
    branch_prefixes = [tuple(xs) for xs, p in courses_pins]
    def prefix_compat(xs):
        return any(tuple(xs) == bp[:len(xs)] for bp in branch_prefixes)

    def begins_like_level1(xs, term_seg):
        # paper-style: first crossing in a landing half, or the ray ends on one
        if xs:
            return xs[0] in halves
        return term_seg in halves

    def dfs(hem, xs, L):
        if xs:
            c = RayCode(hem, tuple(xs))
            if rw.self_intersection(s, c) != 0: return
            if not disjoint_all(c): return
            if begins_like_level1(xs, None):
                stats['conform'] += 1
                return
            if prefix_compat(xs):
                stats['excused'] += 1   # open, still completable
            else:
                witnesses.append(rw.format_code(c))
        else:
            stats['excused'] += 1  # bare stub
        if len(xs) >= L: return
        for t in all_segs:
            if xs and t == xs[-1]: continue
            if not xs and s.is_incident(t, 'inf'): continue
            dfs(hem, xs + [t], L)

    for hem in 'NS':
        dfs(hem, [], L)
    print('stats:', stats, 'witnesses:', len(witnesses))
    if verbose:
        for w in witnesses[:25]: print('    ', w)
    return witnesses

if __name__ == '__main__':
    fam = [
        ([h0a, h0b, h1b, h1a, C], 's13'),
        ([h0a, h0b, h1b, h1a, C], 's17'),
        ([h1b, h1a, C, h1a, C, 's3'], 's4'),
        ([h1b, h1a, C, h1a, C, h0b], 's8'),
    ]
    check_family(fam, L=int(sys.argv[1]) if len(sys.argv) > 1 else 4)
