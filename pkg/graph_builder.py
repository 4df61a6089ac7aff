import logging
import re
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from homology_errors import GraphBuildError, GraphParseError
from simple_graph import Edge, SimpleGraph, from_edges

logger = logging.getLogger(__name__)

Argument = Union[int, SimpleGraph]

_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<number>-?\d+)|(?P<punct>[(),]))")


# --- Constructors ---

def cycle(n: int) -> SimpleGraph:
    """The polygon P_n: vertices 0..n-1, edges (k, k+1) and the closing edge (0, n-1)."""
    if n < 3:
        raise GraphBuildError(f"cycle(n) needs n >= 3, got {n}")
    edges = [(k, k + 1) for k in range(n - 1)] + [(0, n - 1)]
    return SimpleGraph(n, tuple(edges))


def path(n: int) -> SimpleGraph:
    """Path graph on n vertices."""
    if n < 1:
        raise GraphBuildError(f"path(n) needs n >= 1, got {n}")
    return SimpleGraph(n, tuple((k, k + 1) for k in range(n - 1)))


def complete(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphBuildError(f"complete(n) needs n >= 1, got {n}")
    return SimpleGraph(n, tuple((a, b) for a in range(n) for b in range(a + 1, n)))


def wheel(n: int) -> SimpleGraph:
    """W_n on n vertices: hub 0 joined to every vertex of the rim cycle 1..n-1."""
    if n < 4:
        raise GraphBuildError(f"wheel(n) needs n >= 4, got {n}")
    rim = n - 1
    edges = [(0, k) for k in range(1, n)]
    edges += [(k, k + 1) for k in range(1, rim)] + [(1, rim)]
    return SimpleGraph(n, tuple(edges))


def theta(*lengths: int) -> SimpleGraph:
    """
    Multibridge graph: poles 0 and 1 joined by internally disjoint paths of the given lengths.

    Internal vertices are numbered path by path, so path k visits
    0 -> internal vertices in order -> 1.
    """
    if len(lengths) < 2:
        raise GraphBuildError("theta needs at least two path lengths")
    if any(a < 1 for a in lengths):
        raise GraphBuildError(f"theta path lengths must be >= 1, got {lengths}")
    if sum(1 for a in lengths if a == 1) > 1:
        raise GraphBuildError("theta with two paths of length 1 is not a simple graph")
    edges: List[Edge] = []
    next_vertex = 2
    for length in lengths:
        route = [0] + list(range(next_vertex, next_vertex + length - 1)) + [1]
        next_vertex += length - 1
        edges.extend(zip(route, route[1:]))
    return SimpleGraph(next_vertex, tuple(edges))


# --- Gluing operations ---

def _glue(first: SimpleGraph, second: SimpleGraph, identified: Dict[int, int]) -> SimpleGraph:
    """Adds `second` to `first`, mapping its vertices via `identified` and appending the rest."""
    mapping = dict(identified)
    next_vertex = first.vertex_count
    for vertex in range(second.vertex_count):
        if vertex not in mapping:
            mapping[vertex] = next_vertex
            next_vertex += 1
    edges = list(first.edges) + [(mapping[a], mapping[b]) for a, b in second.edges]
    return from_edges(next_vertex, edges)


def _first_edge(graph: SimpleGraph) -> Edge:
    if not graph.edges:
        raise GraphBuildError("edge gluing needs an operand with at least one edge")
    return min(graph.edges)


def _first_path(graph: SimpleGraph, k: int) -> Optional[List[int]]:
    """First path with k edges met by a depth-first search from the smallest vertex."""
    adjacency = {v: graph.neighbors(v) for v in range(graph.vertex_count)}

    def extend(route: List[int]) -> Optional[List[int]]:
        if len(route) == k + 1:
            return route
        for nxt in adjacency[route[-1]]:
            if nxt not in route:
                found = extend(route + [nxt])
                if found:
                    return found
        return None

    for start in range(graph.vertex_count):
        found = extend([start])
        if found:
            return found
    return None


def edge_glue(first: SimpleGraph, second: SimpleGraph) -> SimpleGraph:
    """G|H: identifies the lexicographically first edge of each operand."""
    a, b = _first_edge(first)
    c, d = _first_edge(second)
    return _glue(first, second, {c: a, d: b})


def edge_glue_k(first: SimpleGraph, second: SimpleGraph, k: int) -> SimpleGraph:
    """G|^k H: identifies the first k-edge path of each operand."""
    if k < 1:
        raise GraphBuildError(f"edge_glue_k needs k >= 1, got {k}")
    route_first = _first_path(first, k)
    route_second = _first_path(second, k)
    if route_first is None or route_second is None:
        raise GraphBuildError(f"edge_glue_k: an operand has no path of {k} consecutive edges")
    return _glue(first, second, dict(zip(route_second, route_first)))


def vertex_glue(first: SimpleGraph, second: SimpleGraph) -> SimpleGraph:
    """G*H: identifies vertex 0 of each operand."""
    if first.vertex_count == 0 or second.vertex_count == 0:
        raise GraphBuildError("vertex_glue needs non-empty operands")
    return _glue(first, second, {0: 0})


def bridge(first: SimpleGraph, second: SimpleGraph) -> SimpleGraph:
    """Joins vertex 0 of each operand by a new edge."""
    if first.vertex_count == 0 or second.vertex_count == 0:
        raise GraphBuildError("bridge needs non-empty operands")
    joined = _glue(first, second, {})
    return from_edges(joined.vertex_count, list(joined.edges) + [(0, first.vertex_count)])


# --- Expression language ---

_INT_CONSTRUCTORS: Dict[str, Callable[..., SimpleGraph]] = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "wheel": wheel,
}

_GRAPH_OPERATIONS: Dict[str, Tuple[Callable[..., SimpleGraph], Tuple[type, ...]]] = {
    "edge_glue": (edge_glue, (SimpleGraph, SimpleGraph)),
    "edge_glue_k": (edge_glue_k, (SimpleGraph, SimpleGraph, int)),
    "vertex_glue": (vertex_glue, (SimpleGraph, SimpleGraph)),
    "bridge": (bridge, (SimpleGraph, SimpleGraph)),
}


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN_RE.match(stripped, position)
        if not match or match.end() == position:
            raise GraphParseError(f"unexpected character at offset {position}: '{stripped[position:position + 10]}'")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        position = match.end()
    return tokens


class _ExpressionParser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.position = 0

    def _peek(self) -> Optional[Tuple[str, str]]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def _expect(self, value: str):
        token = self._peek()
        if token is None or token[1] != value:
            found = token[1] if token else "end of input"
            raise GraphParseError(f"expected '{value}', found '{found}'")
        self.position += 1

    def parse(self) -> SimpleGraph:
        result = self._argument()
        if self._peek() is not None:
            raise GraphParseError(f"trailing input after expression: '{self._peek()[1]}'")
        if not isinstance(result, SimpleGraph):
            raise GraphParseError("expression must evaluate to a graph")
        return result

    def _argument(self) -> Argument:
        token = self._peek()
        if token is None:
            raise GraphParseError("unexpected end of expression")
        kind, value = token
        self.position += 1
        if kind == "number":
            return int(value)
        if kind != "name":
            raise GraphParseError(f"unexpected '{value}'")
        self._expect("(")
        args: List[Argument] = []
        if self._peek() and self._peek()[1] != ")":
            args.append(self._argument())
            while self._peek() and self._peek()[1] == ",":
                self.position += 1
                args.append(self._argument())
        self._expect(")")
        return _apply(value, args)


def _apply(name: str, args: Sequence[Argument]) -> SimpleGraph:
    if name in _INT_CONSTRUCTORS:
        if len(args) != 1 or not isinstance(args[0], int):
            raise GraphBuildError(f"{name} takes exactly one integer argument")
        return _INT_CONSTRUCTORS[name](args[0])
    if name == "theta":
        if not args or not all(isinstance(a, int) for a in args):
            raise GraphBuildError("theta takes integer path lengths")
        return theta(*args)
    if name in _GRAPH_OPERATIONS:
        operation, signature = _GRAPH_OPERATIONS[name]
        if len(args) != len(signature) or not all(isinstance(a, t) for a, t in zip(args, signature)):
            expected = ", ".join(t.__name__ for t in signature)
            raise GraphBuildError(f"{name} expects ({expected})")
        return operation(*args)
    raise GraphParseError(f"unknown graph constructor '{name}'")


def build(expression: str) -> SimpleGraph:
    """Evaluates a construction expression such as `edge_glue(cycle(4), cycle(6))`."""
    graph = _ExpressionParser(expression).parse()
    logger.debug(f"Built '{expression}': v={graph.vertex_count}, E={graph.edge_count}")
    return graph
