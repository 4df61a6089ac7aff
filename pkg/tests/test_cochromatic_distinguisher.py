import pytest

from chromatic_polynomial import LAMBDA
from cochromatic_distinguisher import (
    SIX_VERTEX_TARGETS,
    CochromaticClass,
    MemberHomology,
    cochromatic_classes,
    distinguish,
)
from graph_builder import path
from homology_errors import ResourceLimitError
from simple_graph import SimpleGraph


def test_four_vertex_classes_are_the_trees():
    classes = cochromatic_classes(4)
    assert list(classes) == [LAMBDA * (LAMBDA - 1) ** 3]
    assert len(next(iter(classes.values()))) == 2


@pytest.mark.parametrize("m", [2, 3])
def test_trees_are_not_split(m):
    report = distinguish(4, m)
    assert len(report.classes) == 1
    assert report.split_classes() == []
    assert report.targets_found == {}


def test_a2_never_splits():
    report = distinguish(5, 2)
    assert report.classes
    assert report.split_classes() == []


def test_vertex_ceiling():
    with pytest.raises(ResourceLimitError):
        distinguish(8)


def test_separating_gradings():
    cls = CochromaticClass(LAMBDA * (LAMBDA - 1) ** 3, [
        MemberHomology(path(4), {"H^{0,3}": "Z", "H^{1,2}": "Z_3"}),
        MemberHomology(SimpleGraph(4, ((0, 1), (0, 2), (0, 3))), {"H^{0,3}": "Z"}),
    ])
    assert cls.split
    assert cls.separating_gradings() == ["H^{1,2}"]
    assert cls.to_json()["split"] is True


@pytest.mark.slow
def test_six_vertex_target_splits_in_degree_one():
    report = distinguish(6, 3)
    target = next(c for c in report.classes if c.polynomial == SIX_VERTEX_TARGETS[0])
    assert target.split
    values = {member.groups.get("H^{1,9}", "0") for member in target.members}
    assert {"Z^7+Z_3^3", "Z^8+Z_3^3"} <= values
    assert report.targets_found[str(SIX_VERTEX_TARGETS[0])] is True
