import pytest

from bigraded_groups import AbelianGroup, BigradedGroups
from diagram_generator import figure_eight_kinked, torus_diagram, trefoil_kinked, unknot
from homology_errors import ResourceLimitError
from int_polynomial import IntPolynomial
from khovanov_complex import (
    KhovanovComplex,
    jones_polynomial,
    khovanov_homology,
    normalized_jones,
    quantum_euler_characteristic,
)

Z = AbelianGroup(1)
Z2 = AbelianGroup(0, ((2, 1),))

LEFT_TREFOIL = BigradedGroups({
    (0, -1): Z, (0, -3): Z, (-2, -5): Z, (-2, -7): Z2, (-3, -9): Z,
}, ("p", "q"))

FIGURE_EIGHT = BigradedGroups({
    (-2, -5): Z, (-1, -3): Z2, (-1, -1): Z, (0, -1): Z, (0, 1): Z,
    (1, 1): Z, (2, 3): Z2, (2, 5): Z,
}, ("p", "q"))


def test_unknot():
    assert khovanov_homology(unknot()) == BigradedGroups({(0, 1): Z, (0, -1): Z}, ("p", "q"))


def test_trefoil(trefoil_diagram):
    kh = khovanov_homology(trefoil_diagram)
    assert kh == LEFT_TREFOIL
    assert kh.labels == ("p", "q")


def test_mirror_trefoil(trefoil_diagram):
    kh = khovanov_homology(trefoil_diagram.mirror())
    assert kh[(3, 7)] == Z2
    assert kh[(3, 9)] == Z and kh[(2, 5)] == Z


def test_figure_eight(figure_eight_diagram):
    assert khovanov_homology(figure_eight_diagram) == FIGURE_EIGHT


@pytest.mark.parametrize("plain, kinked", [
    ("trefoil_diagram", trefoil_kinked),
    ("figure_eight_diagram", figure_eight_kinked),
])
def test_first_reidemeister_move_leaves_kh_unchanged(request, plain, kinked):
    assert khovanov_homology(kinked()) == khovanov_homology(request.getfixturevalue(plain))


def test_medial_trefoil_is_the_same_knot(trefoil_diagram):
    assert khovanov_homology(torus_diagram(2, 3)) == khovanov_homology(trefoil_diagram)


def test_windows(trefoil_diagram):
    full = khovanov_homology(trefoil_diagram)
    assert khovanov_homology(trefoil_diagram, degrees=(-2, -2)) == full.restricted(degrees=(-2, -2))
    assert khovanov_homology(trefoil_diagram, quantum=(-7, -5)) == full.restricted(quantum=(-7, -5))


def test_jones_polynomials(trefoil_diagram, figure_eight_diagram):
    assert normalized_jones(trefoil_diagram) == IntPolynomial.from_terms({-2: 1, -6: 1, -8: -1}, "q")
    assert normalized_jones(figure_eight_diagram) == \
        IntPolynomial.from_terms({-4: 1, -2: -1, 0: 1, 2: -1, 4: 1}, "q")
    assert jones_polynomial(unknot()) == IntPolynomial((1, 0, 1), -1, "q")


def test_euler_characteristic_is_jones(trefoil_diagram, figure_eight_diagram):
    for diagram in (trefoil_diagram, figure_eight_diagram, torus_diagram(2, 4)):
        assert quantum_euler_characteristic(khovanov_homology(diagram)) == jones_polynomial(diagram)


def test_crossing_ceiling(trefoil_diagram):
    with pytest.raises(ResourceLimitError):
        khovanov_homology(trefoil_diagram, max_crossings=2)
    with pytest.raises(ResourceLimitError):
        jones_polynomial(trefoil_diagram, max_crossings=2)


def test_raw_windows(figure_eight_diagram):
    complex_ = KhovanovComplex(figure_eight_diagram)
    assert complex_.to_raw_windows((-1, 1), (-3, 3)) == ((1, 3), (-1, 5))
    assert complex_.to_raw_windows(None, None) == (None, None)
