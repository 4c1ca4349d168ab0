"""Bitset-packed GF(2) vectors for the brute-force enumerations.

A vector of F_2^n is an int whose bit j is coordinate j, so vector
addition is XOR.  Only the oracle-scale filters need this: enumerating
every subspace of F_2^9 is millions of candidates, which tuple arithmetic
would make painfully slow.
"""

from __future__ import annotations

import itertools
from typing import Iterator


def pack(vec: tuple[int, ...]) -> int:
    value = 0
    for j, x in enumerate(vec):
        if x:
            value |= 1 << j
    return value


def unpack(value: int, n: int) -> tuple[int, ...]:
    return tuple((value >> j) & 1 for j in range(n))


def bitset_rank(rows: list[int]) -> int:
    """Rank over GF(2) by elimination on int bitsets."""
    basis: list[int] = []
    for v in rows:
        for b in basis:
            low = b & -b
            if v & low:
                v ^= b
        if v:
            basis.append(v)
    return len(basis)


def enumerate_rref_bitsets(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """RREF bases of every d-dim subspace of F_2^n, as tuples of bitsets.

    Same order as the generic enumerator: pivot sets lexicographically,
    then free entries row-major.
    """
    if d == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(n), d):
        pivot_set = set(pivots)
        free = [(i, j) for i in range(d) for j in range(pivots[i] + 1, n)
                if j not in pivot_set]
        base = [1 << p for p in pivots]
        for bits in itertools.product((0, 1), repeat=len(free)):
            rows = base.copy()
            for (i, j), bit in zip(free, bits):
                if bit:
                    rows[i] |= 1 << j
            yield tuple(rows)


def bitset_span_max_rank(rows: tuple[int, ...], rank_of: list[int],
                         cap: int) -> int | None:
    """Maximum of rank_of over the span of `rows`, or None as soon as some
    element exceeds `cap` (early exit)."""
    best = 0
    for b in rows:
        r = rank_of[b]
        if r > cap:
            return None
        if r > best:
            best = r
    vecs = [0]
    for b in rows:
        new = []
        for v in vecs:
            w = v ^ b
            r = rank_of[w]
            if r > cap:
                return None
            if r > best:
                best = r
            new.append(w)
        vecs.extend(new)
    return best
