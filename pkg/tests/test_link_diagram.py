import networkx as nx
import pytest

from graph_builder import cycle
from homology_errors import GraphParseError
from link_diagram import Crossing, LinkDiagram, parse_pd


def test_knot_atlas_signs(trefoil_diagram, figure_eight_diagram):
    assert trefoil_diagram.signs == (-1, -1, -1)
    assert (figure_eight_diagram.c_plus, figure_eight_diagram.c_minus) == (2, 2)
    assert trefoil_diagram.component_count() == 1


def test_states_of_trefoil(trefoil_diagram):
    assert trefoil_diagram.circle_count(0) == 3
    assert trefoil_diagram.circle_count(trefoil_diagram.all_negative_state()) == 2
    state = trefoil_diagram.resolve(0)
    assert state.circles == ((1, 4), (2, 5), (3, 6))
    assert (state.positive_smoothings, state.negative_smoothings) == (3, 0)


def test_state_graphs(trefoil_diagram):
    positive = trefoil_diagram.state_graph(0)
    assert nx.is_isomorphic(positive.to_networkx(), cycle(3).to_networkx())
    assert trefoil_diagram.state_multigraph_girth(0) == 3
    negative = trefoil_diagram.all_negative_state()
    assert trefoil_diagram.state_graph(negative).edge_count == 1
    assert trefoil_diagram.state_multigraph_girth(negative) == 2


def test_kink_gives_a_loop():
    kinked = parse_pd("X[1,4,2,5], X[3,8,4,1], X[5,2,6,3], X[6,7,7,8]")
    assert kinked.crossing_count == 4
    assert kinked.state_multigraph_girth(0) == 1


def test_change_type(trefoil_diagram):
    assert trefoil_diagram.change_type(0, 0) == "merge"
    # the state 0b011 is a single circle
    assert trefoil_diagram.change_type(0b011, 2) == "split"


def test_line_format_with_explicit_signs_and_free_circles():
    text = "# two crossings\nX 1 2 3 4 +\nX 3 2 1 4 -\nO\n"
    diagram = parse_pd(text, "sample")
    assert diagram.free_circles == 1
    assert diagram.signs == (1, -1)
    assert diagram.circle_count(0) == 2


def test_pd_text_round_trip(trefoil_diagram):
    restored = parse_pd(trefoil_diagram.to_pd())
    assert restored.signs == trefoil_diagram.signs
    assert [c.arcs for c in restored.crossings] == [c.arcs for c in trefoil_diagram.crossings]


def test_mirror_flips_signs(trefoil_diagram):
    mirrored = trefoil_diagram.mirror()
    assert mirrored.signs == (1, 1, 1)
    assert mirrored.circle_count(0) == 2


@pytest.mark.parametrize("text", [
    "X 1 2 3",
    "X 1 1 2 2\nX 3 3 4",
    "X 1 2 3 4",
    "",
    "PD[]",
])
def test_malformed_codes(text):
    with pytest.raises(GraphParseError):
        parse_pd(text)


def test_parse_error_carries_line_number():
    with pytest.raises(GraphParseError) as info:
        parse_pd("X 1 4 2 5\nY 3 6 4 1\n")
    assert info.value.line_number == 2


def test_crossing_sign_must_be_valid():
    with pytest.raises(ValueError):
        Crossing((1, 2, 3, 4), 2)
    assert LinkDiagram((), 1).circle_count(0) == 1
