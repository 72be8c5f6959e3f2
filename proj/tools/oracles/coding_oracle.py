#!/usr/bin/env python3
"""Independent reference for the prime-power sequence coding and Cantor pairing.

Values printed here are frozen into the C++ unit tests. This script shares no
code with the library; it exists so the tests compare against an independently
derived answer.
"""
import json
from itertools import product


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


PRIMES = primes_upto(100000)  # PRIMES[0] = 2 = p(0)


def encode(seq):
    if not seq:
        return 0
    a = 1
    k = len(seq)
    for i, m in enumerate(seq):
        e = m + 1 if i == k - 1 else m
        a *= PRIMES[i] ** e
    return a - 1


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


def pair(m, n):
    return (m + n) * (m + n + 1) // 2 + n


def unpair(c):
    w = 0
    while (w + 1) * (w + 2) // 2 <= c:
        w += 1
    t = w * (w + 1) // 2
    n = c - t
    return (w - n, n)


def main():
    out = {
        "encode": {
            "[]": encode([]),
            "[0]": encode([0]),
            "[1,2]": encode([1, 2]),
            "[1]": encode([1]),
            "[0,1]": encode([0, 1]),
            "[2,5,7]": encode([2, 5, 7]),
            "[1,2,3]": encode([1, 2, 3]),
        },
        "decode": {
            "0": decode(0),
            "8": decode(8),
            "4": decode(4),
            "53": decode(53),
            "13": decode(13),
        },
        "pair": {"(0,0)": pair(0, 0), "(1,2)": pair(1, 2), "(3,4)": pair(3, 4)},
        "unpair": {"8": unpair(8), "24": unpair(24)},
    }
    # round-trip sanity for the ranges the tests will sweep
    assert all(encode(decode(a)) == a for a in range(10000))
    for k in range(5):
        for s in product(range(5), repeat=k):
            assert decode(encode(list(s))) == list(s)
    assert all(pair(*unpair(c)) == c for c in range(10000))
    out["roundtrips"] = "ok (a<10^4, len<=4 entries<=4, paircodes<10^4)"
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
