import pytest

from bigraded_groups import ZERO, AbelianGroup, BigradedGroups
from int_polynomial import IntPolynomial


def test_abelian_group_normalizes_torsion():
    group = AbelianGroup(2, ((2, 1), (3, 0), (2, 3)))
    assert group.torsion == ((2, 4),)
    assert str(group) == "Z^2+Z_2^4"
    assert str(ZERO) == "0"
    assert str(AbelianGroup(1, ((2, 1),))) == "Z+Z_2"


def test_invariant_factors_drop_units_and_zeros():
    group = AbelianGroup.from_invariant_factors(1, [1, -1, 2, 2, -4, 0])
    assert group == AbelianGroup(1, ((2, 2), (4, 1)))
    assert group.torsion_multiplicity() == 3
    assert group.torsion_multiplicity(2) == 2


@pytest.mark.parametrize("free, torsion", [(-1, ()), (0, ((1, 2),))])
def test_invalid_groups(free, torsion):
    with pytest.raises(ValueError):
        AbelianGroup(free, torsion)


def test_zero_groups_are_not_stored():
    h = BigradedGroups({(0, 3): AbelianGroup(1), (1, 2): ZERO})
    assert len(h) == 1
    assert h[(1, 2)] == ZERO
    assert h == BigradedGroups({(0, 3): AbelianGroup(1)})


@pytest.fixture
def triangle_homology():
    # Chromatic homology of the triangle over Z[x]/(x^2).
    return BigradedGroups({
        (0, 3): AbelianGroup(1),
        (1, 2): AbelianGroup(0, ((2, 1),)),
        (1, 1): AbelianGroup(1),
    })


def test_derived_quantities(triangle_homology):
    h = triangle_homology
    assert h.degrees() == [0, 1]
    assert h.hspan() == 2
    assert h.torsion_degrees() == [1]
    assert h.torsion_hspan() == 1
    assert h.torsion_orders() == [2]
    assert h.torsion_sequence(0, 2) == (0, 1, 0)
    assert h.diagonals() == [2, 3]
    assert h.width() == 2
    assert h.width(torsion=True) == 1
    assert h.jmin() == 1
    assert h.column(1) == {1: AbelianGroup(1), 2: AbelianGroup(0, ((2, 1),))}


def test_free_euler_characteristic(triangle_homology):
    # q^3 - q is P_{K3}(1 + q).
    assert triangle_homology.free_euler_characteristic() == IntPolynomial.from_ascending([0, -1, 0, 1], "q")


def test_khovanov_width_counts_diagonals_two_apart():
    h = BigradedGroups({(0, 1): AbelianGroup(1), (0, -1): AbelianGroup(1)}, ("p", "q"))
    assert h.diagonals(khovanov=True) == [-1, 1]
    assert h.width(khovanov=True) == 2


def test_shift_sum_and_restrict(triangle_homology):
    h = triangle_homology
    moved = h.shifted(-1, 2, ("p", "q"))
    assert moved.labels == ("p", "q")
    assert moved[(-1, 5)] == AbelianGroup(1)
    doubled = h.direct_sum(h)
    assert doubled[(1, 2)] == AbelianGroup(0, ((2, 2),))
    assert h.restricted(degrees=(1, 1)).degrees() == [1]
    assert h.restricted(quantum=(2, 3)).jmin() == 2
    assert h.torsion_only().items() == [((1, 2), AbelianGroup(0, ((2, 1),)))]


def test_json_keeps_labels(triangle_homology):
    data = triangle_homology.to_json()
    assert data["groups"][0] == {"i": 0, "j": 3, "free": 1, "torsion": []}
    assert BigradedGroups.from_json(data) == triangle_homology
    khovanov = triangle_homology.shifted(labels=("p", "q"))
    restored = BigradedGroups.from_json(khovanov.to_json())
    assert restored.labels == ("p", "q")
    assert restored == khovanov
