"""Shared brute-force oracles for the test suite.

Everything here recomputes quantities from first principles (set
definitions, dense eigensolvers, pair scans) so the library paths under
test are checked against independent routes.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np


def set_binary_less(s: set, t: set) -> bool:
    """The definitional binary order on index sets: S < T iff the largest
    element of the symmetric difference lies in T."""
    if s == t:
        return False
    return max(s ^ t) in t


def mask_to_set(mask: int) -> set:
    return {j + 1 for j in range(64) if mask >> j & 1}


def cube_edges(d: int) -> list[tuple[int, int]]:
    return [(u, u ^ (1 << b)) for u in range(1 << d) for b in range(d)
            if u < u ^ (1 << b)]


def brute_edges(members, d: int) -> list[tuple[int, int]]:
    """Edge list by scanning all pairs for Hamming distance 1."""
    ms = sorted(members)
    return [(u, v) for u, v in itertools.combinations(ms, 2)
            if (u ^ v).bit_count() == 1]


def brute_lambda1(members, d: int) -> float:
    """Spectral radius via a dense symmetric eigensolver."""
    ms = sorted(members)
    if not ms:
        return 0.0
    index = {v: k for k, v in enumerate(ms)}
    mat = np.zeros((len(ms), len(ms)))
    for u, v in brute_edges(ms, d):
        mat[index[u], index[v]] = mat[index[v], index[u]] = 1.0
    return float(np.linalg.eigvalsh(mat)[-1])


def brute_count_subcubes(members, d: int, d_prime: int) -> int:
    """Subcube count by trying every (corner, direction set) pair."""
    members = set(members)
    if d_prime == 0:
        return len(members)
    count = 0
    for dirs in itertools.combinations(range(d), d_prime):
        dir_mask = 0
        for b in dirs:
            dir_mask |= 1 << b
        for base in members:
            if base & dir_mask:
                continue
            if all(base | sub in members for sub in _submasks(dir_mask)):
                count += 1
    return count


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def brute_is_compressed(members, d: int) -> bool:
    """Definitional check: down-closed and stable under every swap of a
    larger element for a smaller absent one."""
    members = set(members)
    for s in members:
        for b in range(d):
            if s >> b & 1:
                if s ^ (1 << b) not in members:
                    return False
                for a in range(b):
                    if not s >> a & 1 and (s ^ (1 << b)) | (1 << a) not in members:
                        return False
    return True


def all_subsets_of_cube(d: int, n: int):
    """All n-subsets of V(Q_d) as tuples of masks."""
    return itertools.combinations(range(1 << d), n)


def ball_size(d: int, i: int) -> int:
    return sum(comb(d, j) for j in range(i + 1))
