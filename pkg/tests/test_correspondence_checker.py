import pytest

from correspondence_checker import correspondence_check, kh_torsion_sandwich
from diagram_generator import rational_diagram, torus_diagram, trefoil_kinked
from link_diagram import LinkDiagram


@pytest.mark.parametrize("diagram", [
    torus_diagram(2, 3),
    torus_diagram(2, 4),
    torus_diagram(2, 5),
    rational_diagram(3, 3),
])
def test_correspondence_holds(diagram):
    report = correspondence_check(diagram)
    assert report.holds, [pair.to_json() for pair in report.mismatches()]
    assert report.pairs


def test_trefoil_pairs(trefoil_diagram):
    report = correspondence_check(trefoil_diagram)
    assert (report.v, report.girth, report.c_plus, report.c_minus) == (3, 3, 0, 3)
    found = {(pair.p, pair.q): str(pair.khovanov) for pair in report.pairs}
    assert found[(-3, -9)] == "Z"
    assert found[(-2, -7)] == "Z_2"
    last = [pair for pair in report.pairs if pair.i == report.girth]
    assert last and all(pair.torsion_only for pair in last)


def test_report_json(trefoil_diagram):
    data = correspondence_check(trefoil_diagram).to_json()
    assert data["holds"] is True
    assert data["best_offset"] == [0, 0]
    assert {"i", "j", "p", "q", "chromatic", "khovanov", "match"} <= set(data["pairs"][0])


def test_forest_state_graph_is_vacuous():
    report = correspondence_check(LinkDiagram((), 1, "unknot"))
    assert report.vacuous
    assert not report.holds
    assert report.pairs == []


def test_loop_in_state_graph():
    report = correspondence_check(trefoil_kinked())
    assert report.girth == 1


@pytest.mark.slow
def test_pretzel_correspondence(pretzel_323):
    assert correspondence_check(pretzel_323).holds


def test_torsion_sandwich_observation(trefoil_diagram):
    observation = kh_torsion_sandwich(trefoil_diagram)
    assert observation.hspan == 4
    assert observation.torsion_hspan == 1
    assert observation.difference == 3
    assert observation.within_two_and_four
    assert observation.to_json()["bound_sum"] == observation.positive_bound + observation.negative_bound
