"""Compressed-family enumeration and the extremal search."""

import itertools
from math import sqrt

import pytest

from conftest import brute_is_compressed, brute_lambda1
from cubespectra.compress import is_compressed
from cubespectra.core import VertexFamily, vertex_of
from cubespectra.search import enumerate_compressed, max_lambda1, verify_star_regime


def test_enumeration_base_cases():
    assert [f.members for f in enumerate_compressed(1, 1)] == [frozenset([0])]
    assert [f.members for f in enumerate_compressed(2, 3)] == [frozenset([0, 1])]
    with pytest.raises(ValueError):
        list(enumerate_compressed(5, 2))   # 5 > 2^2


def test_enumeration_matches_brute_filter():
    # oracle: filter all down-closed shift-stable n-subsets of P({1..4})
    for n in range(1, 9):
        brute = sorted(
            frozenset(combo)
            for combo in itertools.combinations(range(16), n)
            if brute_is_compressed(combo, 4)
        )
        enum = sorted(f.members for f in enumerate_compressed(n, 4))
        assert enum == brute, n


def test_enumeration_families_are_compressed_and_unique():
    for n in (6, 9, 12):
        seen = set()
        for fam in enumerate_compressed(n, n - 1):
            assert len(fam) == n
            assert is_compressed(fam)[0]
            assert fam.members not in seen
            seen.add(fam.members)
        # members use elements <= n-1 and sizes <= log2 n
        for members in seen:
            assert all(v < (1 << (n - 1)) for v in members)
            assert max(v.bit_count() for v in members) <= n.bit_length()


def test_max_lambda1_examples():
    res = max_lambda1(4, 4)
    assert abs(res.best_lambda1 - 2.0) < 1e-8
    assert res.maximizer.members == frozenset([0, 1, 2, 3])   # the 4-cycle
    assert not res.restricted and res.complete
    res = max_lambda1(2, 5)
    assert abs(res.best_lambda1 - 1.0) < 1e-9


def test_max_lambda1_against_full_brute_force():
    # every 5-subset of Q_4 versus the compressed search
    best = max(brute_lambda1(combo, 4)
               for combo in itertools.combinations(range(16), 5))
    res = max_lambda1(5, 4)
    assert abs(best - res.best_lambda1) < 1e-8


def test_max_lambda1_monotone_in_n():
    values = [max_lambda1(n, 5).best_lambda1 for n in range(1, 11)]
    for a, b in zip(values, values[1:]):
        assert b >= a - 1e-9


def test_restricted_and_budget_flags():
    res = max_lambda1(6, 4)    # d < n - 1: compressed search is Q_4-local
    assert res.restricted
    res = max_lambda1(6, 6, max_families=1)
    assert not res.complete
    assert res.search_space_size == 1


def test_runner_ups_ordering():
    res = max_lambda1(4, 4, top_k=2)
    assert len(res.runner_ups) == 1      # only two compressed 4-families
    value, fam = res.runner_ups[0]
    assert abs(value - sqrt(3)) < 1e-8
    assert fam.members == frozenset([0, 1, 2, 4])


def test_verify_star_regime():
    rows = verify_star_regime(range(2, 9), 8)
    by_n = {row["n"]: row for row in rows}
    assert by_n[2]["star_is_maximizer"]
    assert abs(by_n[2]["best_lambda1"] - 1.0) < 1e-9
    # n = 4: the 4-cycle beats the star
    assert not by_n[4]["star_is_maximizer"]
    assert abs(by_n[4]["best_lambda1"] - 2.0) < 1e-8
    assert by_n[4]["winner"] == (0, 1, 2, 3)
    # n = 8: the winner is the full 3-cube, eigenvalue 3
    assert by_n[8]["winner"] == tuple(range(8))
    assert abs(by_n[8]["best_lambda1"] - 3.0) < 1e-8
    with pytest.raises(ValueError):
        verify_star_regime([9], 8)


def test_search_space_counts_are_stable():
    # frozen sizes of the compressed search space (canonical generation)
    counts = {n: sum(1 for _ in enumerate_compressed(n, min(16, n - 1)))
              for n in range(2, 14)}
    assert counts == {2: 1, 3: 1, 4: 2, 5: 2, 6: 3, 7: 4, 8: 6, 9: 7,
                      10: 10, 11: 13, 12: 18, 13: 23}
