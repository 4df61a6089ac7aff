import networkx as nx
import pytest

from graph_builder import (
    bridge,
    build,
    complete,
    cycle,
    edge_glue,
    edge_glue_k,
    path,
    theta,
    vertex_glue,
    wheel,
)
from graph_invariants import compute_invariants
from homology_errors import GraphBuildError, GraphParseError


def test_constructors_have_expected_sizes():
    assert (cycle(5).vertex_count, cycle(5).edge_count) == (5, 5)
    assert (path(4).vertex_count, path(4).edge_count) == (4, 3)
    assert complete(5).edge_count == 10
    assert (wheel(6).vertex_count, wheel(6).edge_count) == (6, 10)


def test_wheel_four_is_complete_graph():
    assert nx.is_isomorphic(wheel(4).to_networkx(), complete(4).to_networkx())


@pytest.mark.parametrize("lengths, v, e", [
    ((3, 2, 3), 7, 8),
    ((2, 2, 2), 5, 6),
    ((1, 3), 4, 4),
])
def test_theta_sizes(lengths, v, e):
    graph = theta(*lengths)
    assert graph.vertex_count == v
    assert graph.edge_count == e


def test_theta_rejects_two_single_edges():
    with pytest.raises(GraphBuildError):
        theta(1, 1, 3)


def test_edge_glue_of_two_cycles_is_a_theta():
    glued = edge_glue(cycle(5), cycle(5))
    assert nx.is_isomorphic(glued.to_networkx(), theta(4, 1, 4).to_networkx())


def test_edge_glue_k_shares_a_path():
    glued = edge_glue_k(cycle(5), cycle(5), 2)
    assert nx.is_isomorphic(glued.to_networkx(), theta(3, 2, 3).to_networkx())
    with pytest.raises(GraphBuildError):
        edge_glue_k(cycle(3), cycle(5), 3)


def test_vertex_glue_and_bridge_block_counts():
    assert compute_invariants(vertex_glue(cycle(4), cycle(4))).b == 2
    bridged = bridge(cycle(3), cycle(3))
    assert bridged.vertex_count == 6 and bridged.edge_count == 7
    assert compute_invariants(bridged).b == 3


def test_four_squares_sharing_a_vertex():
    graph = build("vertex_glue(vertex_glue(vertex_glue(cycle(4),cycle(4)),cycle(4)),cycle(4))")
    assert graph.vertex_count == 13
    assert graph.edge_count == 16
    assert compute_invariants(graph).b == 4


def test_dsl_accepts_whitespace_and_theta():
    assert build(" edge_glue( cycle(4) , cycle(6) ) ").edge_count == 9
    assert build("theta(3, 2, 3)") == theta(3, 2, 3)


@pytest.mark.parametrize("expression, error", [
    ("cycle(2)", GraphBuildError),
    ("cycle(3", GraphParseError),
    ("unknown(3)", GraphParseError),
    ("edge_glue(cycle(3))", GraphBuildError),
    ("cycle(3) cycle(4)", GraphParseError),
    ("3", GraphParseError),
    ("cycle(3)$", GraphParseError),
])
def test_dsl_errors(expression, error):
    with pytest.raises(error):
        build(expression)
