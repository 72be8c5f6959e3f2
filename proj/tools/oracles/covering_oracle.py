#!/usr/bin/env python3
"""Independent reference for the covering test, the bar/cover translations,
and the bisection steppers. Exact rational arithmetic via fractions.Fraction.

The covering check here is the grid oracle itself (membership of every
rational with denominator <= 64 strictly inside some segment), NOT a chain
search, so agreement with the library's chain-based test is a real check.
"""
import json
from fractions import Fraction as F


def grid_covers(cover, lo, hi, maxden=64):
    # every rational lo <= a/b <= hi with b <= maxden must be strictly inside
    # some cover segment; this includes the endpoints themselves
    for b in range(1, maxden + 1):
        a = -(-lo.numerator * b // lo.denominator)  # ceil(lo*b)
        while F(a, b) <= hi:
            q = F(a, b)
            if not any(u[0] < q < u[1] for u in cover):
                return False, q
            a += 1
    return True, None


def bfs_chain(cover, lo, hi):
    # minimal chain: first segment straddles lo, consecutive overlap (touching
    # relation, strict on both sides), last segment straddles hi
    n = len(cover)
    starts = [i for i in range(n) if cover[i][0] < lo < cover[i][1]]
    from collections import deque
    prev = {}
    dq = deque(starts)
    seen = set(starts)
    while dq:
        i = dq.popleft()
        if cover[i][0] < hi < cover[i][1]:
            chain = [i]
            while chain[0] not in starts or len(chain) == 1 and chain[0] in prev:
                if chain[0] in prev:
                    chain.insert(0, prev[chain[0]])
                else:
                    break
            # rebuild cleanly
            chain = [i]
            while chain[0] in prev:
                chain.insert(0, prev[chain[0]])
            return chain
        for j in range(n):
            if j not in seen and cover[i][0] < cover[j][1] and cover[j][0] < cover[i][1]:
                seen.add(j)
                prev[j] = i
                dq.append(j)
    return None


def bar_to_cover(members, horizon, pad_den=None):
    # members: list of binary tuples; emits boundary-straddling spans
    if pad_den is None:
        pad_den = 2 ** (horizon + 2)
    pad = F(1, pad_den)
    ms = set(tuple(m) for m in members)
    if () in ms:
        return [(-pad, 1 + pad)]
    segs = []
    for n in range(1, horizon + 1):
        if tuple([0] * n) in ms:
            segs.append((-pad, F(1, 2 ** n) - pad))
        if tuple([1] * n) in ms:
            segs.append((1 - F(1, 2 ** n) + pad, 1 + pad))
    def window(c):
        lo, hi = F(0), F(1)
        for bit in c:
            mid = (lo + hi) / 2
            lo, hi = (lo, mid) if bit == 0 else (mid, hi)
        return lo, hi
    for m in ms:
        # interpret m as c*<0>*1^j; find partners c*<1>*0^k
        for cut in range(len(m)):
            if m[cut] == 0 and all(b == 1 for b in m[cut + 1:]):
                c = m[:cut]
                for k in range(0, horizon - len(c)):
                    v = c + (1,) + (0,) * k
                    if v in ms:
                        lo, hi = window(c)
                        q = (lo + hi) / 2
                        segs.append((q - F(1, 2 ** len(m)) + pad,
                                     q + F(1, 2 ** len(v)) - pad))
    segs = sorted(set(segs))
    return segs


def oi_delta(stages, path):
    lo, hi = F(0), F(1)
    decisions = []
    for n in path:
        mid = (lo + hi) / 2
        cover = stages[n]
        ok, _ = grid_covers(cover, lo, mid) if cover else (False, None)
        if ok and bfs_chain(cover, lo, mid) is None:
            ok = False  # grid and chain agree on these instances; belt+braces
        if ok:
            decisions.append("R")
            lo = mid
        else:
            decisions.append("L")
            hi = mid
    return (lo, hi), decisions


def endec(member, start_hi, steps):
    lo, hi = F(0), F(start_hi)
    traj = [(lo, hi)]
    for _ in range(steps):
        mid = (lo + hi) / 2
        if member(mid):
            lo = mid
        else:
            hi = mid
        traj.append((lo, hi))
    return traj


def s(x):
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def main():
    out = {}
    pos = [(F(-1, 4), F(3, 4)), (F(1, 2), F(5, 4))]
    neg = [(F(-1, 4), F(1, 2)), (F(1, 2), F(5, 4))]
    out["two_segment_positive"] = {
        "grid_covers": grid_covers(pos, F(0), F(1))[0],
        "chain": bfs_chain(pos, F(0), F(1)),
    }
    out["touching_negative"] = {
        "grid_covers": grid_covers(neg, F(0), F(1))[0],
        "chain": bfs_chain(neg, F(0), F(1)),
    }
    out["single_segment"] = {
        "chain": bfs_chain([(F(-1, 4), F(5, 4))], F(0), F(1)),
    }

    for depth in (1, 2, 3):
        members = []
        def gen(prefix):
            if len(prefix) == depth:
                members.append(tuple(prefix))
                return
            gen(prefix + [0]); gen(prefix + [1])
        gen([])
        segs = bar_to_cover(members, depth)
        ok, bad = grid_covers(segs, F(0), F(1))
        out[f"uniform_depth{depth}_cover"] = {
            "segments": [[s(a), s(b)] for a, b in segs],
            "grid_covers_unit": ok,
        }
    out["root_bar"] = {
        "segments": [[s(a), s(b)] for a, b in bar_to_cover([()], 0)],
    }
    # a non-uniform thin bar: {<0>, <1,0>, <1,1>}
    segs = bar_to_cover([(0,), (1, 0), (1, 1)], 2)
    out["mixed_bar"] = {
        "segments": [[s(a), s(b)] for a, b in segs],
        "grid_covers_unit": grid_covers(segs, F(0), F(1))[0],
    }

    stage0 = [(F(-1, 8), F(5, 8))]
    seg, dec = oi_delta([stage0], [0])
    out["oi_stage_example"] = {"segment": [s(seg[0]), s(seg[1])], "decisions": dec}
    seg, dec = oi_delta([[]], [0, 0, 0])
    out["oi_empty_stages"] = {"segment": [s(seg[0]), s(seg[1])], "decisions": dec}

    out["endec_always_false"] = [[s(a), s(b)] for a, b in endec(lambda q: False, 1, 3)]
    out["endec_always_true"] = [[s(a), s(b)] for a, b in endec(lambda q: True, 1, 3)]
    out["endec_below_half"] = [[s(a), s(b)] for a, b in
                               endec(lambda q: q < F(1, 2), 1, 2)]
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
