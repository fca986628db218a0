import itertools

import numpy as np
import pytest

from hamspec.errors import CorpusTooLargeError
from hamspec.graph import (
    Graph,
    bipartition,
    canonical_mask,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    dedup_isomorphs,
    degree_profile,
    disjoint_union,
    empty_graph,
    enumerate_labeled,
    path_graph,
    petersen_graph,
    recognize_complete_bipartite,
    star_graph,
    vertex_pairs,
)


def test_vertex_pairs_follow_graph6_column_order():
    assert vertex_pairs(4) == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))


def test_constructor_rejects_bad_rows():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b00))  # loop
    with pytest.raises(ValueError):
        Graph(2, (0b100, 0))
    with pytest.raises(ValueError):
        Graph(0, ())
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_edge_mask_round_trip():
    for mask in range(1 << 6):
        assert Graph.from_mask(4, mask).edge_mask == mask


def test_adjacency_array_is_symmetric_and_read_only():
    g = petersen_graph()
    a = g.adjacency_array()
    assert a.dtype == np.uint8
    assert np.array_equal(a, a.T)
    assert a.sum(axis=1).tolist() == [3] * 10
    with pytest.raises(ValueError):
        a[0, 1] = 0


def test_degree_profile_of_star():
    prof = degree_profile(star_graph(4))
    assert (prof.delta, prof.Delta, prof.e, prof.sumsq) == (1, 4, 4, 20)


def test_connectivity_and_complement():
    g = disjoint_union(complete_graph(2), complete_graph(3))
    assert not g.is_connected()
    assert g.component_of(3) == 0b11100
    assert g.complement().is_connected()
    assert complete_graph(5).complement() == empty_graph(5)


def test_bipartition_roots_lowest_vertex_on_side_a():
    parts = bipartition(cycle_graph(6))
    assert parts.side_a == 0b010101
    assert parts.side_b == 0b101010
    assert not parts.complete
    assert bipartition(cycle_graph(5)) is None


@pytest.mark.parametrize("a,b", [(1, 1), (1, 3), (2, 2), (2, 5), (3, 4)])
def test_recognize_complete_bipartite(a, b):
    g = complete_bipartite_graph(a, b)
    assert recognize_complete_bipartite(g) == (a, b)
    perm = tuple(reversed(range(a + b)))
    assert recognize_complete_bipartite(g.relabel(perm)) == (a, b)


def test_recognize_rejects_near_misses():
    assert recognize_complete_bipartite(path_graph(4)) is None
    assert recognize_complete_bipartite(empty_graph(3)) is None
    assert recognize_complete_bipartite(complete_graph(3)) is None
    two_stars = disjoint_union(star_graph(2), star_graph(2))
    assert recognize_complete_bipartite(two_stars) is None


def test_enumeration_sizes_and_limit():
    assert sum(1 for _ in enumerate_labeled(4)) == 64
    with pytest.raises(CorpusTooLargeError):
        next(enumerate_labeled(8))


def test_canonical_mask_is_relabeling_invariant():
    g = path_graph(5)
    base = canonical_mask(5, g.edge_mask)
    for perm in itertools.permutations(range(5)):
        assert canonical_mask(5, g.relabel(perm).edge_mask) == base


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_dedup_counts(n, count):
    reps = list(dedup_isomorphs(enumerate_labeled(n), n))
    assert len(reps) == count
    assert all(canonical_mask(n, g.edge_mask) == g.edge_mask for g in reps)


def test_petersen_shape():
    g = petersen_graph()
    assert g.num_edges == 15
    assert {g.degree(v) for v in range(10)} == {3}
