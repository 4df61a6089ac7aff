import pytest

from chromatic_polynomial import chromatic_polynomial
from graph_builder import theta
from graph_invariants import compute_invariants
from homology_errors import HypothesisError
from homology_formulas import reconstruct_A2_homology
from torsion_patterns import (
    A,
    C,
    TorsionPattern,
    concat,
    const,
    khovanov_torsion_gradings,
    pretzel_torsion,
    rational_torsion,
    two_cycle_torsion,
)


def _torsion(graph, start, stop):
    inv = compute_invariants(graph)
    h = reconstruct_A2_homology(chromatic_polynomial(graph), inv.v, inv.bipartite)
    return h.torsion_sequence(start, stop, order=2), sum(h.torsion_sequence(0, inv.v, order=2))


def test_building_blocks():
    assert C(3).exponents == (1, 1, 2, 2, 3, 3)
    assert A(3).exponents == (2, 1, 3, 2)
    assert C(0).exponents == A(1).exponents == ()
    assert concat(C(1), const(2, 2), C(1).reversed()).exponents == (1, 1, 2, 2, 1, 1)


def test_pattern_accessors():
    pattern = TorsionPattern((2, 1, 1), start_i=2)
    assert pattern.stop_i == 4
    assert pattern.at(1) == 0 and pattern.at(2) == 2
    assert pattern.by_degree() == {2: 2, 3: 1, 4: 1}
    assert pattern.window(1, 5) == (0, 2, 1, 1, 0)
    assert pattern.drop_last().exponents == (2, 1)
    assert (pattern + C(1)).start_i == 2
    with pytest.raises(ValueError):
        TorsionPattern((1, -1))


@pytest.mark.parametrize("s, t, k, exponents, start", [
    (5, 5, 1, (1, 1, 2, 2, 1, 1), 1),
    (5, 5, 2, (1, 1, 2, 2, 1), 1),
    (4, 4, 1, (2, 1, 1), 2),
    (4, 6, 1, (2, 1, 2, 1, 1), 2),
    (7, 4, 1, (1, 1, 2, 1, 2, 1, 1), 1),
    (6, 6, 1, (2, 1, 3, 2, 2, 1, 1), 2),
])
def test_two_cycle_patterns(s, t, k, exponents, start):
    pattern = two_cycle_torsion(s, t, k)
    assert pattern.exponents == exponents
    assert pattern.start_i == start


@pytest.mark.parametrize("s, t, k", [
    (3, 3, 1), (3, 5, 1), (5, 7, 1), (4, 5, 1), (6, 4, 1), (8, 5, 1), (6, 8, 1),
    (4, 4, 2), (5, 5, 2), (5, 6, 2), (6, 6, 2), (7, 5, 2),
])
def test_two_cycle_patterns_match_homology(s, t, k):
    # P_s glued to P_t along k edges is the theta graph with paths s-k, k, t-k.
    pattern = two_cycle_torsion(s, t, k)
    found, total = _torsion(theta(s - k, k, t - k), pattern.start_i, pattern.stop_i)
    assert found == pattern.exponents
    assert total == sum(pattern.exponents)


def test_two_cycle_argument_checks():
    with pytest.raises(ValueError):
        two_cycle_torsion(5, 5, 3)
    with pytest.raises(ValueError):
        two_cycle_torsion(3, 5, 2)


@pytest.mark.parametrize("parameters, exponents, start", [
    ((3, 2, 3), (1, 1, 2, 2, 1), 1),
    ((3, 2, 5), (1, 1, 2, 2, 2), 1),
    ((3, 2, 4), (1, 1, 2, 2, 2), 1),
    ((5, 2, 3), (1, 1, 2, 2, 2), 1),
    ((4, 2, 4), (2, 1, 3, 2), 2),
])
def test_pretzel_patterns(parameters, exponents, start):
    pattern = pretzel_torsion(*parameters)
    assert pattern.exponents == exponents
    assert pattern.start_i == start


@pytest.mark.parametrize("parameters", [(3, 3, 3), (1, 2, 3)])
def test_pretzel_hypotheses(parameters):
    with pytest.raises(HypothesisError):
        pretzel_torsion(*parameters)


def test_pretzel_pattern_agrees_with_theta_graph():
    pattern = pretzel_torsion(3, 2, 3)
    found, _ = _torsion(theta(3, 2, 3), pattern.start_i, pattern.stop_i)
    assert found == pattern.exponents


def test_rational_patterns():
    assert rational_torsion(3, 3).exponents == (1, 1, 0)
    assert rational_torsion(5, 5).exponents == (1, 1, 2, 2, 1)
    assert rational_torsion(5, 7).exponents == (1, 1, 2, 2, 2)
    assert rational_torsion(4, 4).start_i == 2
    with pytest.raises(HypothesisError):
        rational_torsion(2, 5)


def test_khovanov_placement():
    placed = khovanov_torsion_gradings(pretzel_torsion(3, 2, 3), v=7, c_minus=6, c_plus=2)
    assert sorted(p for p, _ in placed) == [-5, -4, -3, -2, -1]
    assert placed[(-5, -15)] == 1
    assert sum(placed.values()) == 7
