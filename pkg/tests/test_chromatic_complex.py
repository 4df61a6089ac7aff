import pytest

from bigraded_groups import AbelianGroup, BigradedGroups
from chromatic_complex import (
    TruncatedAlgebra,
    ChromaticComplex,
    chromatic_complex,
    enumerate_states,
    euler_characteristic,
    homology,
    label_compositions,
)
from chromatic_polynomial import chromatic_polynomial, evaluate_at_qdim
from graph_builder import complete, cycle, path, theta
from homology_errors import ResourceLimitError
from homology_formulas import cycle_homology
from smith_reducer import reduce_rows
from torsion_patterns import two_cycle_torsion


def test_truncated_algebra():
    algebra = TruncatedAlgebra(3)
    assert algebra.top_degree == 2
    assert algebra.multiply(1, 1) == 2
    assert algebra.multiply(2, 1) is None
    with pytest.raises(ValueError):
        TruncatedAlgebra(1)


def test_label_compositions():
    assert label_compositions(2, 2, 3) == ((0, 2), (1, 1), (2, 0))
    assert label_compositions(3, 4, 2) == ()
    assert label_compositions(0, 0, 2) == ((),)


def test_enumerate_states_of_triangle():
    states = list(enumerate_states(cycle(3)))
    assert len(states) == 8
    assert states[0] == ((), 3)
    assert [components for _, components in states] == [3, 2, 2, 2, 1, 1, 1, 1]


def test_triangle_slice_has_two_torsion_cokernel():
    chain = chromatic_complex(cycle(3), 2, 0, 2)
    assert len(chain) == 3
    assert chain.target_size == 3
    result = reduce_rows(chain.d_out, chain.target_size)
    assert (result.rank, result.torsion) == (3, (2,))
    assert len(chain.matrix()) == 3


def test_triangle_over_a2():
    assert homology(cycle(3), 2) == BigradedGroups({
        (0, 3): AbelianGroup(1),
        (1, 2): AbelianGroup(0, ((2, 1),)),
        (1, 1): AbelianGroup(1),
    })


def test_tree_has_only_the_bipartite_pair():
    assert homology(path(3), 2) == BigradedGroups({(0, 3): AbelianGroup(1), (0, 2): AbelianGroup(1)})


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_cycles_match_closed_form(n, m):
    assert homology(cycle(n), m) == cycle_homology(n, m)


@pytest.mark.slow
@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("n", [7, 8])
def test_longer_cycles_match_closed_form(n, m):
    assert homology(cycle(n), m) == cycle_homology(n, m)


@pytest.mark.parametrize("m", [2, 3])
def test_euler_characteristic_is_chromatic_polynomial(small_graphs, m):
    for graph in small_graphs.values():
        h = homology(graph, m)
        assert euler_characteristic(h) == evaluate_at_qdim(chromatic_polynomial(graph), m)


@pytest.mark.parametrize("graph", [cycle(4), path(3), theta(2, 1, 2)])
def test_support_restriction_drops_only_zero_groups(graph):
    assert homology(graph, 3, restrict_to_support=False) == homology(graph, 3)


def test_windows_clip_the_result():
    full = homology(cycle(5), 2)
    assert homology(cycle(5), 2, degrees=(1, 2)) == full.restricted(degrees=(1, 2))
    assert homology(cycle(5), 2, quantum=(3, 5)) == full.restricted(quantum=(3, 5))


def test_parallel_reduction_agrees():
    graph = theta(2, 2, 3)
    assert homology(graph, 2, num_workers=4) == homology(graph, 2)


def test_theta_torsion_pattern_from_the_cube():
    h = homology(theta(3, 2, 3), 2)
    assert h.torsion_sequence(1, 5, order=2) == two_cycle_torsion(5, 5, 2).exponents
    assert h.torsion_orders() == [2]


def test_edge_ceiling():
    with pytest.raises(ResourceLimitError):
        homology(complete(5), 2, max_edges=5)
    with pytest.raises(ResourceLimitError):
        list(enumerate_states(complete(5), max_edges=5))


def test_complex_caches_bases():
    complex_ = ChromaticComplex(cycle(4), TruncatedAlgebra(2))
    first = complex_.basis(1, 2)
    assert complex_.basis(1, 2) is first
    complex_.release()
