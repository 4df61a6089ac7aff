import logging
import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

import networkx as nx

from homology_errors import GraphBuildError, GraphParseError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
EdgeRef = Union[int, Edge]

_HEADER_RE = re.compile(r"^v\s+(\d+)$")
_EDGE_RE = re.compile(r"^e\s+(-?\d+)\s+(-?\d+)$")


@dataclass(frozen=True)
class SimpleGraph:
    """
    A finite simple graph with a fixed edge order.

    The position of an edge in `edges` is its index in every cube built over the
    graph, so the order is part of the value and survives serialization.
    """
    vertex_count: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphBuildError(f"vertex_count must be non-negative, got {self.vertex_count}")
        normalized = []
        seen = set()
        for a, b in self.edges:
            if a == b:
                raise GraphBuildError(f"loop edge ({a},{b}) is not allowed in a simple graph")
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise GraphBuildError(f"edge ({a},{b}) has a vertex outside [0, {self.vertex_count})")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise GraphBuildError(f"duplicate edge {key}")
            seen.add(key)
            normalized.append(key)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_index(self, edge: EdgeRef) -> int:
        """Resolves an edge given by index or by endpoint pair."""
        if isinstance(edge, int):
            if not 0 <= edge < len(self.edges):
                raise GraphBuildError(f"unknown edge index {edge}")
            return edge
        a, b = edge
        key = (min(a, b), max(a, b))
        try:
            return self.edges.index(key)
        except ValueError:
            raise GraphBuildError(f"unknown edge {key}") from None

    def neighbors(self, vertex: int) -> List[int]:
        result = []
        for a, b in self.edges:
            if a == vertex:
                result.append(b)
            elif b == vertex:
                result.append(a)
        return sorted(result)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    def key(self) -> str:
        """Exact, order-sensitive identity used for caching and report instance names."""
        return f"v{self.vertex_count}:" + ",".join(f"{a}-{b}" for a, b in self.edges)


def from_edges(vertex_count: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
    """Builds a graph, silently dropping loops and repeated pairs (first occurrence wins)."""
    kept: List[Edge] = []
    seen = set()
    for a, b in edges:
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key in seen:
            continue
        seen.add(key)
        kept.append(key)
    return SimpleGraph(vertex_count, tuple(kept))


def from_networkx(graph: nx.Graph) -> SimpleGraph:
    """Relabels nodes 0..n-1 in sorted order and keeps edges in sorted order."""
    nodes = sorted(graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    edges = sorted((min(index[a], index[b]), max(index[a], index[b])) for a, b in graph.edges())
    return SimpleGraph(len(nodes), tuple(edges))


def parse_graph(text: str) -> SimpleGraph:
    """
    Parses the edge-list format: a header line "v N" followed by "e a b" lines.

    Blank lines and lines starting with '#' are ignored. Edge order equals file order.
    """
    vertex_count = None
    edges: List[Edge] = []
    seen = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if vertex_count is None:
            header = _HEADER_RE.match(line)
            if not header:
                raise GraphParseError(f"expected header 'v N', got '{line}'", line_number)
            vertex_count = int(header.group(1))
            continue
        match = _EDGE_RE.match(line)
        if not match:
            raise GraphParseError(f"malformed edge line '{line}'", line_number)
        a, b = int(match.group(1)), int(match.group(2))
        if a == b:
            raise GraphParseError(f"loop edge ({a},{b})", line_number)
        for vertex in (a, b):
            if not 0 <= vertex < vertex_count:
                raise GraphParseError(f"vertex {vertex} out of range [0, {vertex_count})", line_number)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphParseError(f"duplicate edge {key} (first on line {seen[key]})", line_number)
        seen[key] = line_number
        edges.append(key)
    if vertex_count is None:
        raise GraphParseError("missing header 'v N'")
    return SimpleGraph(vertex_count, tuple(edges))


def serialize_graph(graph: SimpleGraph) -> str:
    lines = [f"v {graph.vertex_count}"]
    lines.extend(f"e {a} {b}" for a, b in graph.edges)
    return "\n".join(lines) + "\n"


def delete_edge(graph: SimpleGraph, edge: EdgeRef) -> SimpleGraph:
    index = graph.edge_index(edge)
    return SimpleGraph(graph.vertex_count, graph.edges[:index] + graph.edges[index + 1:])


def contract_edge(graph: SimpleGraph, edge: EdgeRef) -> SimpleGraph:
    """
    Merges the endpoints of `edge` into the smaller one.

    Vertices above the removed endpoint shift down by one; the contracted edge and
    any parallel duplicates it creates are dropped, survivors keep their order.
    """
    index = graph.edge_index(edge)
    keep, gone = graph.edges[index]

    def relabel(vertex: int) -> int:
        if vertex == gone:
            vertex = keep
        return vertex - 1 if vertex > gone else vertex

    survivors = (
        (relabel(a), relabel(b)) for k, (a, b) in enumerate(graph.edges) if k != index
    )
    return from_edges(graph.vertex_count - 1, survivors)


def disjoint_union(first: SimpleGraph, second: SimpleGraph) -> SimpleGraph:
    shift = first.vertex_count
    edges = first.edges + tuple((a + shift, b + shift) for a, b in second.edges)
    return SimpleGraph(first.vertex_count + second.vertex_count, edges)


def connected_components(graph: SimpleGraph) -> List[List[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    components = [sorted(c) for c in nx.connected_components(graph.to_networkx())]
    return sorted(components, key=lambda c: c[0])


def induced_subgraph(graph: SimpleGraph, vertices: Sequence[int]) -> SimpleGraph:
    index = {vertex: i for i, vertex in enumerate(sorted(vertices))}
    edges = tuple(
        (index[a], index[b]) for a, b in graph.edges if a in index and b in index
    )
    return SimpleGraph(len(index), edges)
