#!/usr/bin/env python3
"""Independent reference for the thin-bar tower, the embeddings, the mesh
computation, and jump detection. Values frozen into the C++ tests.
"""
import json
from fractions import Fraction as F
from itertools import product


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


PRIMES = primes_upto(6000)


def decode(a):
    if a == 0:
        return []
    n = a + 1
    length = 0
    for i, p in enumerate(PRIMES):
        if p > n:
            break
        if n % p == 0:
            length = i + 1
    out = []
    for j in range(length):
        p = PRIMES[j]
        e = 0
        m = n
        while m % p == 0:
            e += 1
            m //= p
        out.append(e - 1 if j == length - 1 else e)
    return out


def level_member(s, level):
    # level 0: exactly the length-1 sequences; level k+1: <m>*t where t is a
    # concatenation of m level-k members (dp over split points)
    if level == 0:
        return len(s) == 1
    if not s:
        return False
    m, t = s[0], s[1:]
    reach = {(0, 0)}
    for pos in range(len(t) + 1):
        for cnt in range(m + 1):
            if (pos, cnt) not in reach:
                continue
            for end in range(pos + 1, len(t) + 1):
                if cnt + 1 <= m and level_member(t[pos:end], level - 1):
                    reach.add((end, cnt + 1))
    return (len(t), m) in reach


def mesh(primes_list):
    # greatest d with union of [A_i, B_i - d] covering [0, 1-d], clipped,
    # capped at 1; candidates are endpoint differences
    clipped = [(max(a, F(0)), min(b, F(1))) for a, b in primes_list]
    ends = [F(0), F(1)] + [x for ab in clipped for x in ab]
    cands = sorted({b - a for a in ends for b in ends if 0 < b - a <= 1})

    def valid(d):
        # one merged component of the shrunk intervals must contain [0, 1-d]
        ivs = sorted((a, b - d) for a, b in clipped if b - d >= a)
        cur_lo = cur_hi = None
        for a, b in ivs:
            if cur_lo is None or a > cur_hi:
                cur_lo, cur_hi = a, b
            else:
                cur_hi = max(cur_hi, b)
            if cur_lo <= 0 and cur_hi >= 1 - d:
                return True
        return False

    best = None
    for d in cands:
        if valid(d):
            best = d
    return best


def sstr(x):
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def main():
    out = {}
    members = [a for a in range(5000) if (lambda s: len(s) >= 1 and len(s) == s[0] + 1)(decode(a))]
    seqs = [tuple(decode(a)) for a in members]
    thin = all(
        not (len(p) < len(q) and q[: len(p)] == p)
        for p in seqs for q in seqs if p != q
    )
    out["level1_codes_below_5000"] = {"count": len(members), "thin": thin,
                                      "first_ten": members[:10]}
    out["level1_spot"] = {
        "[2,5,7]": level_member((2, 5, 7), 1),
        "[2,5]": level_member((2, 5), 1),
        "[0]": level_member((0,), 1),
        "[1,9]": level_member((1, 9), 1),
    }
    out["level2_spot"] = {
        "[0]": level_member((0,), 2),
        "[1,0]": level_member((1, 0), 2),          # t=<0> is level-1
        "[1,1]": level_member((1, 1), 2),          # t=<1> is not level-1
        "[2,0,1,9]": level_member((2, 0, 1, 9), 2),  # <0> * <1,9>
        "[1,2,5,7]": level_member((1, 2, 5, 7), 2),  # single level-1 piece
    }
    # epsilon0 itself: u = <n>*t with t a level-n member
    def eps0_member(s):
        return len(s) >= 1 and level_member(s[1:], s[0])
    out["eps0_direct"] = {
        "[0,7]": eps0_member((0, 7)),      # t=<7> level-0 member -> true
        "[1,1,0]": eps0_member((1, 1, 0)),  # t=<1,0> level-1? len 2 = 1+1 -> true
        "[2,5,7]": eps0_member((2, 5, 7)),  # t=<5,7> level-2? needs 5 pieces -> false
        "[0]": eps0_member((0,)),           # t=<> not length-1 -> false
    }

    out["mesh_two_primes"] = sstr(mesh([(F(-1, 4), F(3, 4)), (F(1, 2), F(5, 4))]))
    out["mesh_single_dominating"] = sstr(mesh([(F(-1, 4), F(5, 4))]))
    out["mesh_canonical_level1_grid"] = sstr(
        mesh([(F(z, 4), F(z, 4) + F(1, 2)) for z in range(-1, 4)])
    )

    def fan_embed(s):
        out = []
        for n in s:
            out += [0] * n + [1]
        return out
    def tau(s):
        out = []
        for n in s:
            out += [0] * (n + 1) + [1]
        return out
    out["fan_embed"] = {"[2]": fan_embed([2]), "[1,0]": fan_embed([1, 0])}
    out["tau"] = {"[0]": tau([0]), "[1,0]": tau([1, 0]), "[1,1,1]": tau([1, 1, 1])}

    def rat_of_bin(a, plus1):
        q = F(0)
        for i, bit in enumerate(a):
            q += F(2 * bit + 1, 5 ** (i + 1 if plus1 else i))
        return q
    out["rat_of_bin"] = {
        "[1]_iplus1": sstr(rat_of_bin([1], True)),
        "[0,1]_iplus1": sstr(rat_of_bin([0, 1], True)),
        "[0,1]_i": sstr(rat_of_bin([0, 1], False)),
        "[]_iplus1": sstr(rat_of_bin([], True)),
    }

    def bin_approx(q, n):
        a, partial = [], F(0)
        for i in range(n):
            step = F(1, 2 ** (i + 1))
            if q <= partial + step:
                a.append(0)
            else:
                a.append(1)
                partial += step
        assert partial <= q <= partial + F(1, 2 ** n)
        return a
    out["bin_approx"] = {
        "(1/3,2)": bin_approx(F(1, 3), 2),
        "(1/2,1)": bin_approx(F(1, 2), 1),
        "(0,3)": bin_approx(F(0), 3),
        "(2/3,4)": bin_approx(F(2, 3), 4),
    }

    def find_jump(values, schedule):
        for n in range(len(schedule) - 1):
            if abs(values[schedule[n + 1]] - values[schedule[n]]) > F(1, 2 ** n):
                return n
        return None
    out["find_jump"] = {
        "alternating01": find_jump([F(i % 2) for i in range(8)], list(range(8))),
        "constant": find_jump([F(1, 3)] * 8, list(range(8))),
        "halving": find_jump([F(1, 2 ** k) for k in range(8)], list(range(8))),
    }

    # sibling-count embedding with the even-first-entry law, s = <4>
    # admitted younger siblings of 4 at the root: 0 and 2
    out["sibling_embed_even_law_[4]"] = [0] * 2 + [1]
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
