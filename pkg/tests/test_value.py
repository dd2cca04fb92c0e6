from fractions import Fraction

import pytest

from mpparity.core import GameGraph, subgame, lift_ids
from mpparity.generate import gen_random
from mpparity.measure import Stats
from mpparity.oracle import brute_force_mp_values
from mpparity.value import (
    BOTTOM,
    CapacityError,
    candidate_set,
    partition_at,
    solve_values,
    threshold_at,
)

from conftest import corpus, loop

F = Fraction


def all_even(count, max_n=6, W=3, start=0):
    for seed in range(start, start + count):
        n = 1 + seed % max_n
        yield gen_random(n, 3, W, (0.25, 0.4, 0.55)[seed % 3], seed, priorities=(0, 2, 4))


def test_candidate_set_examples():
    assert candidate_set(1, 1) == (-1, 0, 1)
    assert candidate_set(2, 1) == (-1, F(-1, 2), 0, F(1, 2), 1)
    assert candidate_set(2, 2) == (-2, F(-3, 2), -1, F(-1, 2), 0, F(1, 2), 1, F(3, 2), 2)


def test_candidate_set_matches_definition():
    for n in range(1, 6):
        for W in range(0, 4):
            S = candidate_set(n, W)
            brute = sorted({F(y, z) for z in range(1, n + 1) for y in range(-z * W, z * W + 1)})
            assert list(S) == brute
            assert S[0] == -W and S[-1] == W
            assert len(S) <= n * (2 * W * n + 1)


def test_candidate_set_budget():
    with pytest.raises(CapacityError):
        candidate_set(1000, 1000, budget=10**6)


def test_threshold_at_examples():
    g = loop(1)
    assert threshold_at(g, 1) == {0}
    assert threshold_at(g, F(1, 2)) == {0}
    assert threshold_at(g, F(3, 2)) == frozenset()


def test_threshold_at_matches_brute_force():
    for g in all_even(300):
        values = brute_force_mp_values(g)
        for mu in candidate_set(g.n, g.max_abs_weight)[::3]:
            assert threshold_at(g, mu) == {v for v, x in values.items() if x >= mu}


def test_partition_examples():
    g = loop(1)
    S = candidate_set(1, 1)
    assert partition_at(g, 1, S) == (frozenset(), {0}, frozenset())
    assert partition_at(g, 0, S) == (frozenset(), frozenset(), {0})
    with pytest.raises(ValueError):
        partition_at(g, F(1, 3), S)


def test_partition_matches_brute_force():
    for g in all_even(150):
        values = brute_force_mp_values(g)
        S = candidate_set(g.n, g.max_abs_weight)
        for mu in S[::2]:
            below, equal, above = partition_at(g, mu, S)
            assert below == {v for v, x in values.items() if x < mu}
            assert equal == {v for v, x in values.items() if x == mu}
            assert above == {v for v, x in values.items() if x > mu}


def test_solve_values_examples():
    assert solve_values(loop(1)) == {0: 1}
    assert solve_values(loop(1, priority=1)) == {0: BOTTOM}
    cycle = GameGraph.build([1, 1], [0, 0], [[(1, 0)], [(0, 1)]])
    assert solve_values(cycle) == {0: F(1, 2), 1: F(1, 2)}


def test_values_match_brute_force():
    for g in all_even(500):
        assert solve_values(g) == brute_force_mp_values(g)


def test_odd_priority_values_self_consistent():
    for seed, g in corpus(300, max_n=5, max_d=3):
        S = candidate_set(g.n, g.max_abs_weight)
        for v, x in solve_values(g).items():
            if x == BOTTOM:
                assert v not in threshold_at(g, -g.max_abs_weight)
                continue
            assert x in S
            assert v in threshold_at(g, x)
            nxt = S.successor(x)
            assert nxt is None or v not in threshold_at(g, nxt)


def test_split_subgames_keep_values():
    for seed, g in corpus(200, max_n=6, max_d=3):
        parts = []
        values = solve_values(g, on_split=parts.append)
        for part in parts:
            sub, _ = subgame(g, part)
            kept = sorted(part)
            again = solve_values(sub)
            assert {kept[v]: x for v, x in again.items()} == {v: values[v] for v in part}


def test_threshold_calls_logarithmic():
    for seed in range(30):
        g = gen_random(6, 3, 3, 0.4, seed)
        stats = Stats()
        solve_values(g, stats=stats)
        S = candidate_set(g.n, g.max_abs_weight)
        levels = len(S).bit_length() + 1
        assert stats.threshold_calls <= 1 + 3 * g.n * levels


def test_antitone_thresholds():
    for seed, g in corpus(100):
        S = candidate_set(g.n, g.max_abs_weight)
        regions = [threshold_at(g, mu) for mu in S]
        assert all(a >= b for a, b in zip(regions, regions[1:]))
