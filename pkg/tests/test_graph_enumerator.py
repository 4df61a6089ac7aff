import networkx as nx
import pytest

from graph_enumerator import (
    connected_graphs,
    connected_graphs_up_to,
    sample_connected_graphs,
    verification_population,
)
from homology_errors import ResourceLimitError


@pytest.mark.parametrize("v, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_connected_graph_counts(v, count):
    assert len(connected_graphs(v)) == count


def test_enumerated_graphs_are_connected_and_pairwise_distinct():
    graphs = [g.to_networkx() for g in connected_graphs(5)]
    assert all(nx.is_connected(g) for g in graphs)
    for k, first in enumerate(graphs):
        assert not any(nx.is_isomorphic(first, second) for second in graphs[k + 1:])


def test_up_to_concatenates_sizes():
    assert len(list(connected_graphs_up_to(4))) == 1 + 1 + 2 + 6
    assert len(list(connected_graphs_up_to(4, min_vertices=3))) == 8


def test_enumeration_limit():
    with pytest.raises(ResourceLimitError):
        connected_graphs(8)


def test_sample_is_reproducible():
    first = sample_connected_graphs(6, 10, seed=3)
    assert len(first) == 10
    assert first == sample_connected_graphs(6, 10, seed=3)
    assert len(sample_connected_graphs(4, 100)) == 6


def test_population_adds_sample_above_max():
    population = verification_population(max_vertices=4, sample_vertices=5, sample_size=5)
    assert len(population) == 10 + 5
    assert len(verification_population(max_vertices=4, sample_vertices=None)) == 10


@pytest.mark.slow
def test_seven_vertex_count():
    assert len(connected_graphs(7)) == 853
