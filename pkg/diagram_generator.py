"""
Alternating link diagrams built from plane graphs, and a few fixed PD codes.

The medial construction puts one crossing on every edge of a plane graph and
one arc on every corner (pair of consecutive edges around a vertex). Smoothing
0 at every crossing then leaves one circle around each vertex, so the
all-positive state graph of the result is the input graph.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from graph_builder import cycle, theta, vertex_glue
from homology_errors import GraphBuildError
from link_diagram import Crossing, LinkDiagram, parse_pd
from simple_graph import SimpleGraph

logger = logging.getLogger(__name__)

# vertex -> incident edge indices in cyclic order around the vertex
Rotation = Dict[int, List[int]]

TREFOIL_PD = "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]"
TREFOIL_KINKED_PD = "X[1,4,2,5], X[3,8,4,1], X[5,2,6,3], X[6,7,7,8]"
FIGURE_EIGHT_PD = "X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]"
FIGURE_EIGHT_KINKED_PD = "X[4,2,5,1], X[10,6,1,5], X[6,3,7,4], X[2,7,3,8], X[8,9,9,10]"


def planar_rotation(graph: SimpleGraph) -> Rotation:
    """A rotation system of some planar embedding, found by networkx."""
    planar, embedding = nx.check_planarity(graph.to_networkx())
    if not planar:
        raise GraphBuildError(f"graph {graph.key()} is not planar")
    rotation: Rotation = {}
    for vertex, neighbours in embedding.get_data().items():
        rotation[vertex] = [graph.edge_index((vertex, other)) for other in neighbours]
    return rotation


def _validate_rotation(graph: SimpleGraph, rotation: Rotation):
    for vertex in range(graph.vertex_count):
        incident = sorted(k for k, edge in enumerate(graph.edges) if vertex in edge)
        if sorted(rotation.get(vertex, [])) != incident:
            raise GraphBuildError(f"rotation at vertex {vertex} must list exactly its edges {incident}")


def diagram_from_plane_graph(graph: SimpleGraph, rotation: Optional[Rotation] = None,
                             signs: Optional[Sequence[int]] = None, name: str = "") -> LinkDiagram:
    """
    Medial diagram of a plane graph. Crossing k sits on edge k; `signs`
    overrides the inferred crossing signs. Isolated vertices become split
    unknotted circles.
    """
    if rotation is None:
        rotation = planar_rotation(graph)
    _validate_rotation(graph, rotation)

    corner_labels: Dict[Tuple[int, int], int] = {}

    def corner(vertex: int, edge: int) -> int:
        """Arc at `vertex` between `edge` and the edge after it."""
        return corner_labels.setdefault((vertex, edge), len(corner_labels) + 1)

    def previous(vertex: int, edge: int) -> int:
        around = rotation[vertex]
        return around[(around.index(edge) - 1) % len(around)]

    crossings: List[Crossing] = []
    for k, (u, w) in enumerate(graph.edges):
        arcs = (corner(w, k), corner(w, previous(w, k)), corner(u, k), corner(u, previous(u, k)))
        sign = None if signs is None else signs[k]
        crossings.append(Crossing(arcs, sign))
    isolated = sum(1 for vertex in range(graph.vertex_count) if not rotation.get(vertex))
    diagram = LinkDiagram(crossings, isolated, name or f"medial({graph.key()})")
    logger.debug(f"Built {diagram!r}")
    return diagram


def _theta_rotation(graph: SimpleGraph, lengths: Sequence[int]) -> Rotation:
    """Path order around pole 0, reversed around pole 1."""
    first_edges, last_edges = [], []
    position = 0
    for length in lengths:
        first_edges.append(position)
        last_edges.append(position + length - 1)
        position += length
    rotation: Rotation = {0: first_edges, 1: list(reversed(last_edges))}
    for vertex in range(2, graph.vertex_count):
        rotation[vertex] = [k for k, edge in enumerate(graph.edges) if vertex in edge]
    return rotation


def torus_diagram(p: int, n: int) -> LinkDiagram:
    """Standard alternating diagram of the (2, n) torus link; G_+ = P_n."""
    if p != 2:
        raise GraphBuildError(f"only (2, n) torus links are built, got ({p}, {n})")
    if n < 3:
        raise GraphBuildError(f"torus_diagram needs n >= 3, got {n}")
    graph = cycle(n)
    rotation = {vertex: [k for k, edge in enumerate(graph.edges) if vertex in edge] for vertex in range(n)}
    return diagram_from_plane_graph(graph, rotation, name=f"T(2,{n})")


def pretzel_diagram(*parameters: int) -> LinkDiagram:
    """Standard diagram of the pretzel link (-a_1, ..., -a_k); G_+ = theta(a_1, ..., a_k)."""
    if len(parameters) < 2:
        raise GraphBuildError("a pretzel link needs at least two parameters")
    if any(a < 1 for a in parameters):
        raise GraphBuildError(f"pretzel parameters must be >= 1, got {parameters}")
    graph = theta(*parameters)
    label = ",".join(f"-{a}" for a in parameters)
    return diagram_from_plane_graph(graph, _theta_rotation(graph, parameters), name=f"P({label})")


def rational_diagram(p: int, q: int) -> LinkDiagram:
    """Rational link with Conway notation -P Q; G_+ = P_P | P_Q = theta(P-1, 1, Q-1)."""
    if p < 2 or q < 2:
        raise GraphBuildError(f"rational_diagram needs P, Q >= 2, got ({p}, {q})")
    lengths = (p - 1, 1, q - 1)
    graph = theta(*lengths)
    return diagram_from_plane_graph(graph, _theta_rotation(graph, lengths), name=f"R(-{p} {q})")


def vertex_glued_cycles_diagram(n: int, count: int, signs: Optional[int] = None) -> LinkDiagram:
    """
    Diagram whose G_+ is P_n * ... * P_n (count cycles sharing vertex 0).
    A non-None `signs` forces every crossing to that sign.
    """
    if count < 1:
        raise GraphBuildError(f"vertex_glued_cycles_diagram needs count >= 1, got {count}")
    graph = cycle(n)
    for _ in range(count - 1):
        graph = vertex_glue(graph, cycle(n))
    rotation: Rotation = {}
    for vertex in range(graph.vertex_count):
        rotation[vertex] = [k for k, edge in enumerate(graph.edges) if vertex in edge]
    # Edges of one cycle stay adjacent around the shared vertex.
    rotation[0] = sorted(rotation[0], key=lambda k: (k // n, k))
    forced = None if signs is None else [signs] * graph.edge_count
    return diagram_from_plane_graph(graph, rotation, forced, name=f"LD({n}^{count})")


def ld_diagram(count: int = 4) -> LinkDiagram:
    """All-negative diagram with G_+ = P_4 * ... * P_4 used for the four-cycle table."""
    return vertex_glued_cycles_diagram(4, count, signs=-1)


def unknot() -> LinkDiagram:
    return LinkDiagram((), 1, "unknot")


def trefoil() -> LinkDiagram:
    return parse_pd(TREFOIL_PD, "3_1")


def trefoil_kinked() -> LinkDiagram:
    return parse_pd(TREFOIL_KINKED_PD, "3_1 kinked")


def figure_eight() -> LinkDiagram:
    return parse_pd(FIGURE_EIGHT_PD, "4_1")


def figure_eight_kinked() -> LinkDiagram:
    return parse_pd(FIGURE_EIGHT_KINKED_PD, "4_1 kinked")


FIXTURES = {
    "unknot": unknot,
    "trefoil": trefoil,
    "trefoil_kinked": trefoil_kinked,
    "figure_eight": figure_eight,
    "figure_eight_kinked": figure_eight_kinked,
}


def fixture(name: str) -> LinkDiagram:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise GraphBuildError(f"unknown diagram fixture '{name}'; known: {sorted(FIXTURES)}") from None
