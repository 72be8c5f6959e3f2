#!/usr/bin/env python3
"""Independent reference for the finite Ramsey / relatively-large witness
machinery. Brute force only; values frozen into the C++ tests.
"""
import json
from itertools import combinations, product


def ksubsets(m, k):
    return list(combinations(range(m), k))


def colex_key(t):
    return tuple(reversed(t))


def homogeneous_sets(m, coloring, k, n, large):
    # coloring: dict over k-subsets of range(m); yields witnesses s with
    # |s| >= n, all k-subsets of s monochromatic, and |s| >= s[0] when large
    for l in range(n, m + 1):
        for cand in combinations(range(m), l):
            if large and l < cand[0]:
                continue
            cols = {coloring[t] for t in combinations(cand, k)}
            if len(cols) <= 1:
                yield cand


def every_coloring_admits(m, k, r, n, large):
    subs = sorted(ksubsets(m, k), key=colex_key)
    for assignment in product(range(r), repeat=len(subs)):
        coloring = dict(zip(subs, assignment))
        if next(homogeneous_sets(m, coloring, k, n, large), None) is None:
            return False, list(assignment)
    return True, None


def ph_min_witness(n, k, r, mmax=12):
    for m in range(1, mmax + 1):
        ok, _ = every_coloring_admits(m, k, r, n, True)
        if ok:
            return m
    return None


def er_tree(A, B, k, steps):
    # phi(0) = <>; phi(n+1) = phi(j)*<n>, j largest i <= n keeping the node
    # (k+1)-homogeneous for A,B
    def homog(s):
        for t in combinations(range(len(s)), k):
            for i in range(t[k - 1] + 1, len(s)):
                for j in range(t[k - 1] + 1, len(s)):
                    a = tuple(s[x] for x in t)
                    if (a + (s[i],) in A) != (a + (s[j],) in A):
                        return False
                    if (a + (s[i],) in B) != (a + (s[j],) in B):
                        return False
        return True

    phi = [()]
    for n in range(steps):
        for i in range(n, -1, -1):
            cand = phi[i] + (n,)
            if homog(cand):
                phi.append(cand)
                break
    return phi


def gamma(n, k):
    from math import comb
    g = 1
    for i in range(n):
        g *= 4 ** comb(i, k)
    return g


def main():
    out = {}
    out["ph_min_witness_2_1_2"] = ph_min_witness(2, 1, 2)
    out["ph_check_2_1_2_by_M"] = {
        m: every_coloring_admits(m, 1, 2, 2, True)[0] for m in range(1, 6)
    }

    ok6, _ = every_coloring_admits(6, 2, 2, 3, False)
    out["all_2colorings_of_6_have_mono_triple"] = ok6
    ok5, cex5 = every_coloring_admits(5, 2, 2, 3, False)
    out["all_2colorings_of_5_have_mono_triple"] = ok5
    out["first_counterexample_M5_colex_mixed_radix"] = cex5

    # the pentagon coloring: color 0 on cycle edges {i,i+1 mod 5}, else 1
    subs5 = sorted(ksubsets(5, 2), key=colex_key)
    cyc = {frozenset((i, (i + 1) % 5)) for i in range(5)}
    pent = [0 if frozenset(t) in cyc else 1 for t in subs5]
    coloring = dict(zip(subs5, pent))
    out["pentagon_assignment_colex"] = pent
    out["pentagon_has_mono_triple"] = (
        next(homogeneous_sets(5, coloring, 2, 3, False), None) is not None
    )

    # ER tree for k=1, A = even-sum pairs, B = everything, 4 steps
    A = {t for t in product(range(10), repeat=2) if sum(t) % 2 == 0}
    B = {t for t in product(range(10), repeat=2)}
    out["er_even_sum_4steps"] = [list(s) for s in er_tree(A, B, 1, 4)]

    out["gamma"] = {
        "k1": [gamma(n, 1) for n in range(7)],
        "k2": [gamma(n, 2) for n in range(7)],
    }

    # almost-full surrogate: X = pairs with gap >= 2, N=4, L=3
    def af(Xpred, k, N, L):
        for cand in combinations(range(N), L):
            if not any(Xpred(t) for t in combinations(cand, k)):
                return list(cand)
        return None
    out["almostfull_gap2_N4_L3"] = af(lambda t: t[1] - t[0] >= 2, 2, 4, 3)
    out["almostfull_empty_N4_L3"] = af(lambda t: False, 2, 4, 3)

    # intersection witness: X = even-sum pairs, Y = pairs containing 0, N=3
    wit = None
    for t in combinations(range(3), 2):
        if sum(t) % 2 == 0 and 0 in t:
            wit = list(t)
            break
    out["intersection_even_contains0_N3"] = wit
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
