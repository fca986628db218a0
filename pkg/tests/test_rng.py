import math

import pytest

from hamspec.graph6 import encode_graph6
from hamspec.rng import SplitMix64, sample_random


def test_splitmix_reference_stream():
    # Published SplitMix64 outputs for seed 1234567.
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423,
    ]


def test_uniform_range():
    rng = SplitMix64(0)
    draws = [rng.random() for _ in range(1000)]
    assert all(0.0 <= u < 1.0 for u in draws)


def test_same_seed_same_graphs():
    a = [encode_graph6(g) for g in sample_random(9, 0.5, 3, 42)]
    b = [encode_graph6(g) for g in sample_random(9, 0.5, 3, 42)]
    assert a == b and len(a) == 3
    assert a != [encode_graph6(g) for g in sample_random(9, 0.5, 3, 43)]


def test_k2_frequency_within_three_sigma():
    p, trials = 0.3, 10_000
    hits = sum(g.num_edges for g in sample_random(2, p, trials, 11))
    assert abs(hits - p * trials) <= 3 * math.sqrt(trials * p * (1 - p))


def test_connected_filter():
    assert all(g.is_connected() for g in sample_random(10, 0.2, 50, 5, connected=True))


@pytest.mark.parametrize("args", [(5, 0.0, 1, 0), (5, 1.0, 1, 0), (25, 0.5, 1, 0), (0, 0.5, 1, 0)])
def test_argument_checks(args):
    with pytest.raises(ValueError):
        list(sample_random(*args))
