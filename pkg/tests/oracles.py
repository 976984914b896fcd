"""Deliberately naive reference implementations used only by the tests."""

import itertools
import math

INF = math.inf


def naive_otimes(a, b):
    """Double-loop min-plus product on plain lists (``math.inf`` for EPS)."""
    if not a or not b:
        return []
    out = [INF] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = min(out[i + j], x + y)
    return strip(out)


def naive_oplus(a, b):
    n = max(len(a), len(b))
    a = list(a) + [INF] * (n - len(a))
    b = list(b) + [INF] * (n - len(b))
    return strip([min(x, y) for x, y in zip(a, b)])


def strip(v):
    v = list(v)
    while v and v[-1] == INF:
        v.pop()
    return v


def all_factorizations(target, d1, d2, bound):
    """Every (a, b) in [0, bound] with a ⊗ b = target, by plain enumeration."""
    target = list(target)
    hits = []
    for a in itertools.product(range(bound + 1), repeat=d1 + 1):
        for b in itertools.product(range(bound + 1), repeat=d2 + 1):
            if naive_otimes(list(a), list(b)) == target:
                hits.append((a, b))
    return hits


def digest_bits_oracle(digest: bytes, d: int, b: int):
    """Slice a '0'/'1' string; independent of the integer-shift encoder."""
    bits = "".join(format(byte, "08b") for byte in digest)
    while len(bits) < (d + 1) * b:
        bits += "".join(format(byte, "08b") for byte in digest)
    return [int(bits[b * j : b * j + b], 2) for j in range(d + 1)]
