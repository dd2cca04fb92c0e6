import pytest
from hypothesis import settings

from mpparity.check import instance
from mpparity.core import GameGraph

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def loop(weight, priority=0, owner=1):
    """Single vertex with a self-loop."""
    return GameGraph.build([owner], [priority], [[(0, weight)]])


def corpus(count, max_n=6, max_d=4, max_W=3, start=0):
    for seed in range(start, start + count):
        yield seed, instance(seed, max_n, max_d, max_W)


@pytest.fixture
def small_games():
    return [g for _, g in corpus(200)]
