import pytest

from diagram_generator import figure_eight, pretzel_diagram, trefoil
from graph_builder import complete, cycle, path, theta, wheel


@pytest.fixture
def triangle():
    return cycle(3)


@pytest.fixture
def square():
    return cycle(4)


@pytest.fixture
def small_graphs():
    """A few connected graphs with different block structure and girth."""
    return {
        "P3": cycle(3),
        "P5": cycle(5),
        "K4": complete(4),
        "W5": wheel(5),
        "path4": path(4),
        "theta223": theta(2, 2, 3),
    }


@pytest.fixture
def trefoil_diagram():
    return trefoil()


@pytest.fixture
def figure_eight_diagram():
    return figure_eight()


@pytest.fixture(scope="session")
def pretzel_323():
    return pretzel_diagram(3, 2, 3)
