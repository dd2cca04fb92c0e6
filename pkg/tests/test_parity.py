from fractions import Fraction

from hypothesis import given, strategies as st

from mpparity.core import GameGraph, compress_priorities
from mpparity.generate import gen_random
from mpparity.measure import Stats, solve_static
from mpparity.oracle import basic_mpp_threshold, zielonka_parity, zielonka_player2
from mpparity.parity import ParityThresholdQuery, solve_mpp_threshold, solve_query
from mpparity.two_priority import solve_mp_buchi, solve_mp_cobuchi

from conftest import corpus

NUS = (Fraction(-1), Fraction(0), Fraction(1), Fraction(1, 2))


def test_single_priority_games():
    for seed, g in corpus(200):
        even = g.with_priorities([0] * g.n)
        odd = g.with_priorities([1] * g.n)
        assert solve_mpp_threshold(even, 0) == solve_static(even, 0)[0]
        assert solve_mpp_threshold(odd, 0) == frozenset()


def test_two_priorities_dispatch():
    for seed, g in corpus(300):
        buchi = g.with_priorities([p % 2 for p in g.priority])
        cobuchi = g.with_priorities([2 - p % 2 for p in g.priority])
        for nu in NUS:
            if buchi.d == 2:
                assert solve_mpp_threshold(buchi, nu) == solve_mp_buchi(buchi, nu)
            if cobuchi.d == 2:
                assert solve_mpp_threshold(cobuchi, nu) == solve_mp_cobuchi(cobuchi, nu)


def test_matches_basic_recomputation():
    for seed, g in corpus(1000):
        for nu in NUS:
            assert solve_mpp_threshold(g, nu) == basic_mpp_threshold(g, nu), seed


def test_trivial_threshold_is_pure_parity():
    for seed, g in corpus(500):
        assert solve_mpp_threshold(g, -g.max_abs_weight) == zielonka_parity(g)


def test_compression_does_not_change_result():
    for seed, g in corpus(300):
        spread = g.with_priorities([3 * p + (p % 2) * 2 + 4 for p in g.priority])
        assert compress_priorities(spread).priority == compress_priorities(g).priority
        assert solve_mpp_threshold(spread, 0) == solve_mpp_threshold(g, 0)


def test_recursion_depth_bounded():
    for seed in range(100):
        g = gen_random(8, 5, 3, 0.3, seed)
        stats = Stats()
        solve_mpp_threshold(g, 0, stats)
        assert stats.max_depth <= compress_priorities(g).d - 1


def test_determinacy_against_parity_oracle():
    # with a trivial mean-payoff part the two parity regions must partition V
    for seed, g in corpus(300):
        w1 = solve_mpp_threshold(g, -g.max_abs_weight)
        assert w1 | zielonka_player2(g) == frozenset(range(g.n))
        assert not w1 & zielonka_player2(g)


@given(seed=st.integers(0, 10**6), a=st.fractions(-3, 3, max_denominator=4), b=st.fractions(-3, 3, max_denominator=4))
def test_monotone_in_threshold(seed, a, b):
    g = gen_random(6, 4, 3, 0.35, seed)
    lo, hi = min(a, b), max(a, b)
    assert solve_mpp_threshold(g, hi) <= solve_mpp_threshold(g, lo)


def test_query_wrapper():
    g = GameGraph.build([1], [0], [[(0, 2)]])
    assert solve_query(ParityThresholdQuery(g, Fraction(2))) == {0}
