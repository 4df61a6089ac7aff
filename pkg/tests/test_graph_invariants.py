import pytest

from graph_builder import complete, cycle, path, theta, vertex_glue, wheel
from graph_invariants import (
    block_count,
    bridges,
    component_invariants,
    compute_invariants,
    contraction_sequence,
    girth,
    induced_cycle_counts,
    is_forest,
    is_outerplanar,
    longest_cycle_length,
    shortest_cycle_length,
    state_graph_components,
)
from homology_errors import HypothesisError
from simple_graph import SimpleGraph, disjoint_union


def test_invariants_of_k4():
    inv = compute_invariants(complete(4))
    assert (inv.v, inv.E, inv.b, inv.girth) == (4, 6, 1, 3)
    assert not inv.bipartite
    assert (inv.p1, inv.t3, inv.t4, inv.k4) == (3, 4, 0, 1)


def test_invariants_of_even_cycle():
    inv = compute_invariants(cycle(6))
    assert inv.bipartite
    assert (inv.girth, inv.t3, inv.t4, inv.p1) == (6, 0, 0, 1)


def test_induced_four_cycles_ignore_chorded_squares():
    # The diamond's only 4-cycle has a chord.
    diamond = SimpleGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2)))
    assert compute_invariants(diamond).t4 == 0
    assert compute_invariants(cycle(4)).t4 == 1


@pytest.mark.parametrize("graph, blocks", [
    (path(4), 3),
    (cycle(5), 1),
    (vertex_glue(cycle(3), cycle(3)), 2),
    (SimpleGraph(1), 0),
])
def test_block_count(graph, blocks):
    assert block_count(graph) == blocks


def test_girth_matches_exhaustive_search(small_graphs):
    for graph in small_graphs.values():
        assert girth(graph) == shortest_cycle_length(graph)


def test_forest_has_girth_zero():
    assert girth(path(5)) == 0
    assert is_forest(path(5))
    assert longest_cycle_length(path(5)) == 0


def test_longest_cycle():
    assert longest_cycle_length(theta(3, 2, 3)) == 6
    assert longest_cycle_length(wheel(6)) == 6


def test_outerplanarity():
    assert is_outerplanar(cycle(7))
    assert is_outerplanar(theta(3, 1, 3))
    assert not is_outerplanar(complete(4))
    assert not is_outerplanar(theta(2, 2, 2))


def test_induced_cycle_counts_of_wheel():
    assert induced_cycle_counts(wheel(5)) == {3: 4, 4: 1}


def test_bridges_in_edge_order():
    graph = SimpleGraph(5, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4)))
    assert bridges(graph) == [(2, 3), (3, 4)]


def test_contraction_sequence_has_v_minus_b_minus_one_steps(small_graphs):
    for graph in small_graphs.values():
        inv = compute_invariants(graph)
        sequence = contraction_sequence(graph)
        assert len(sequence) == inv.v - inv.b - 1
        assert is_forest(sequence.terminal)
        assert block_count(sequence.terminal) == inv.b


def test_contraction_sequence_needs_connected_graph():
    with pytest.raises(HypothesisError):
        contraction_sequence(disjoint_union(cycle(3), cycle(3)))


def test_component_invariants_one_per_component():
    reports = component_invariants(disjoint_union(cycle(3), path(2)))
    assert [(r.v, r.E) for r in reports] == [(3, 3), (2, 1)]
    assert compute_invariants(disjoint_union(cycle(3), path(2))).component_count == 2


def test_state_graph_components():
    square = cycle(4)
    assert state_graph_components(square, 0) == ((0, 1, 2, 3), (0, 1, 2, 3))
    # edges (0,1) and (2,3) of the square
    component_of, representatives = state_graph_components(square, 0b0101)
    assert representatives == (0, 2)
    assert component_of == (0, 0, 1, 1)
    assert len(state_graph_components(square, 0b1111)[1]) == 1
