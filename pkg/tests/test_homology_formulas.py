import pytest

from bigraded_groups import AbelianGroup
from chromatic_complex import homology
from chromatic_polynomial import chromatic_polynomial, to_q_basis
from graph_builder import bridge, complete, cycle, edge_glue, path, theta, vertex_glue
from graph_enumerator import connected_graphs
from graph_invariants import compute_invariants
from homology_errors import HypothesisError, IntegrityError
from homology_formulas import (
    bridge_homology,
    cycle_homology,
    edge_glue_homology,
    knight_move_counts,
    low_degree_groups,
    reconstruct_A2_homology,
    third_fourth_groups,
    vertex_glue_homology,
)
from int_polynomial import IntPolynomial
from simple_graph import disjoint_union


def _reconstructed(graph):
    inv = compute_invariants(graph)
    return reconstruct_A2_homology(chromatic_polynomial(graph), inv.v, inv.bipartite)


def test_pentagon_closed_form():
    h = cycle_homology(5, 2)
    assert [(grading, str(group)) for grading, group in h.items()] == [
        ((0, 5), "Z"),
        ((1, 3), "Z"),
        ((1, 4), "Z_2"),
        ((2, 3), "Z"),
        ((3, 1), "Z"),
        ((3, 2), "Z_2"),
    ]


def test_cycle_over_a3_has_z3_torsion():
    h = cycle_homology(5, 3)
    assert h.torsion_orders() == [3]
    assert h.torsion_degrees() == [1, 3]


@pytest.mark.parametrize("n, m", [(2, 2), (4, 1)])
def test_cycle_homology_arguments(n, m):
    with pytest.raises(ValueError):
        cycle_homology(n, m)


def test_low_degree_groups_match_the_cube(small_graphs):
    for graph in small_graphs.values():
        inv = compute_invariants(graph)
        h = homology(graph, 2, degrees=(0, 2))
        for column in low_degree_groups(inv):
            assert column.upper == h[(column.i, inv.v - column.i)]
            assert column.lower == h[(column.i, inv.v - column.i - 1)]


def test_low_degree_groups_of_k4():
    columns = low_degree_groups(compute_invariants(complete(4)))
    assert [str(c.upper) for c in columns] == ["Z", "Z^2+Z_2", "Z_2^2"]
    assert [str(c.lower) for c in columns] == ["0", "Z", "Z^2"]


def test_closed_forms_need_connected_graphs():
    with pytest.raises(HypothesisError):
        low_degree_groups(compute_invariants(disjoint_union(cycle(3), cycle(3))))
    with pytest.raises(HypothesisError):
        third_fourth_groups(compute_invariants(path(2)))


@pytest.mark.parametrize("v", [5, 6])
def test_third_and_fourth_groups(v):
    for graph in connected_graphs(v):
        inv = compute_invariants(graph)
        h = _reconstructed(graph)
        rank, torsion = third_fourth_groups(inv)
        assert rank == h[(3, v - 3)].free
        assert torsion == h[(4, v - 4)].torsion_multiplicity(2)


@pytest.mark.parametrize("v", [3, 4, 5])
def test_reconstruction_matches_the_cube(v):
    for graph in connected_graphs(v):
        assert _reconstructed(graph) == homology(graph, 2)


def test_reconstruction_accepts_either_basis():
    graph = theta(2, 2, 3)
    inv = compute_invariants(graph)
    polynomial = chromatic_polynomial(graph)
    assert reconstruct_A2_homology(to_q_basis(polynomial), inv.v, inv.bipartite) == \
        reconstruct_A2_homology(polynomial, inv.v, inv.bipartite)


def test_knight_moves_of_diamond():
    diamond = theta(2, 1, 2)
    assert knight_move_counts(to_q_basis(chromatic_polynomial(diamond)), 4, False) == [1, 1]


def test_inconsistent_polynomial_is_rejected():
    with pytest.raises(IntegrityError):
        knight_move_counts(IntPolynomial.from_terms({3: 1, 1: 5}, "q"), 3, False)


@pytest.mark.parametrize("base", [cycle(3), cycle(4), theta(2, 1, 3)])
@pytest.mark.parametrize("n", [3, 4, 5])
def test_edge_glue_homology(base, n):
    h = homology(base, 2)
    assert edge_glue_homology(h, compute_invariants(base), n) == homology(edge_glue(base, cycle(n)), 2)


@pytest.mark.parametrize("n", [3, 4])
def test_vertex_glue_homology(n):
    base = cycle(3)
    h = homology(base, 2)
    assert vertex_glue_homology(h, compute_invariants(base), n) == homology(vertex_glue(base, cycle(n)), 2)


def test_bowtie_groups():
    h = _reconstructed(vertex_glue(cycle(3), cycle(3)))
    assert h[(1, 4)] == AbelianGroup(1, ((2, 1),))
    assert h[(2, 3)] == AbelianGroup(0, ((2, 1),))
    assert h[(2, 2)] == AbelianGroup(1)


def test_bridge_shifts_quantum_degree():
    glued = vertex_glue(cycle(3), cycle(4))
    bridged = bridge(cycle(3), cycle(4))
    assert bridge_homology(_reconstructed(glued)) == _reconstructed(bridged)


def test_gluing_rejects_short_cycles_and_foreign_gradings():
    h = homology(cycle(3), 2)
    inv = compute_invariants(cycle(3))
    with pytest.raises(ValueError):
        edge_glue_homology(h, inv, 2)
    with pytest.raises(HypothesisError):
        edge_glue_homology(h.shifted(labels=("p", "q")), inv, 3)
