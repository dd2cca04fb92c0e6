from fractions import Fraction

import pytest

from mpparity.core import PLAYER2, GameGraph, is_player_closed
from mpparity.generate import gen_random
from mpparity.measure import Stats, shift_weights, solve_static
from mpparity.oracle import basic_mp_buchi, basic_mp_cobuchi, zielonka_parity
from mpparity.two_priority import solve_mp_buchi, solve_mp_cobuchi

from conftest import loop

NUS = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1))


def games(prios, count=500, max_n=6, W=3):
    for seed in range(count):
        n = 1 + seed % max_n
        yield gen_random(n, 2, W, (0.25, 0.4, 0.55)[seed % 3], seed, priorities=prios)


def test_buchi_single_vertex():
    assert solve_mp_buchi(loop(1, priority=0), 0) == {0}
    assert solve_mp_buchi(loop(1, priority=1), 0) == frozenset()


def test_cobuchi_single_vertex():
    assert solve_mp_cobuchi(loop(1, priority=2), 0) == {0}
    assert solve_mp_cobuchi(loop(1, priority=1), 0) == frozenset()


def test_priority_range_checked():
    with pytest.raises(ValueError):
        solve_mp_buchi(loop(1, priority=2), 0)
    with pytest.raises(ValueError):
        solve_mp_cobuchi(loop(1, priority=0), 0)


def test_buchi_matches_basic():
    for g in games((0, 1)):
        for nu in NUS:
            assert solve_mp_buchi(g, nu) == basic_mp_buchi(g, nu)


def test_cobuchi_matches_basic():
    for g in games((1, 2)):
        for nu in NUS:
            assert solve_mp_cobuchi(g, nu) == basic_mp_cobuchi(g, nu)


def test_trivial_threshold_reduces_to_parity():
    for prios, solver in (((0, 1), solve_mp_buchi), ((1, 2), solve_mp_cobuchi)):
        for g in games(prios, 300):
            assert solver(g, -g.max_abs_weight) == zielonka_parity(g)


def test_all_even_is_mean_payoff():
    for g in games((0, 0), 200):
        for nu in NUS:
            assert solve_mp_buchi(g, nu) == solve_static(g, nu)[0]
    for g in games((2, 2), 200):
        for nu in NUS:
            assert solve_mp_cobuchi(g, nu) == solve_static(g, nu)[0]


def test_cobuchi_lift_work_is_linear_in_n():
    # the bounded solver's total work charges O(top) lifts to each removed vertex
    for seed in range(40):
        g = gen_random(40, 2, 4, 0.08, seed, priorities=(1, 2))
        stats = Stats()
        solve_mp_cobuchi(g, 0, stats)
        bound = g.n * (g.n * shift_weights(g, 0).effective_max + 2)
        assert stats.lifts <= 4 * bound


def test_buchi_large_game_runs():
    g = gen_random(200, 2, 10, 0.025, 1, priorities=(0, 1))
    win = solve_mp_buchi(g, 0)
    assert is_player_closed(g, win, PLAYER2)
