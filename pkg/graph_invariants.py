import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx

from homology_errors import HypothesisError, IntegrityError
from simple_graph import (
    Edge,
    SimpleGraph,
    connected_components,
    contract_edge,
    induced_subgraph,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphInvariants:
    """Numerical invariants that the closed-form statements are written in."""
    v: int
    E: int
    b: int
    girth: int
    bipartite: bool
    p1: int
    t3: int
    t4: int
    k4: int
    component_count: int = 1


@dataclass(frozen=True)
class ContractionStep:
    graph: SimpleGraph
    contracted_edge: Edge


@dataclass(frozen=True)
class ContractionSequence:
    """Steps (graph before contraction, edge contracted in it) followed by the terminal tree."""
    steps: Tuple[ContractionStep, ...]
    terminal: SimpleGraph

    def __len__(self) -> int:
        return len(self.steps)


def block_count(graph: SimpleGraph) -> int:
    """Number of blocks; an isolated vertex contributes none."""
    return sum(1 for _ in nx.biconnected_components(graph.to_networkx()))


def girth(graph: SimpleGraph) -> int:
    """Length of a shortest cycle, 0 for forests."""
    value = nx.girth(graph.to_networkx())
    return 0 if math.isinf(value) else int(value)


def induced_cycle_counts(graph: SimpleGraph) -> Dict[int, int]:
    """Chordless cycles counted by length."""
    counts: Dict[int, int] = {}
    for found in nx.chordless_cycles(graph.to_networkx()):
        counts[len(found)] = counts.get(len(found), 0) + 1
    return dict(sorted(counts.items()))


def induced_four_cycles(graph: SimpleGraph) -> int:
    nx_graph = graph.to_networkx()
    return sum(1 for found in nx.chordless_cycles(nx_graph, length_bound=4) if len(found) == 4)


def k4_count(graph: SimpleGraph) -> int:
    return sum(1 for clique in nx.enumerate_all_cliques(graph.to_networkx()) if len(clique) == 4)


def is_outerplanar(graph: SimpleGraph) -> bool:
    """A graph is outerplanar iff adding an apex joined to every vertex keeps it planar."""
    nx_graph = graph.to_networkx()
    apex = graph.vertex_count
    nx_graph.add_edges_from((apex, vertex) for vertex in range(graph.vertex_count))
    planar, _ = nx.check_planarity(nx_graph)
    return planar


def compute_invariants(graph: SimpleGraph) -> GraphInvariants:
    nx_graph = graph.to_networkx()
    components = nx.number_connected_components(nx_graph) if graph.vertex_count else 0
    return GraphInvariants(
        v=graph.vertex_count,
        E=graph.edge_count,
        b=block_count(graph),
        girth=girth(graph),
        bipartite=nx.is_bipartite(nx_graph),
        p1=graph.edge_count - graph.vertex_count + components,
        t3=sum(nx.triangles(nx_graph).values()) // 3,
        t4=induced_four_cycles(graph),
        k4=k4_count(graph),
        component_count=components,
    )


def component_invariants(graph: SimpleGraph) -> List[GraphInvariants]:
    """One report per connected component, in order of smallest vertex."""
    return [
        compute_invariants(induced_subgraph(graph, component))
        for component in connected_components(graph)
    ]


def is_forest(graph: SimpleGraph) -> bool:
    return nx.is_forest(graph.to_networkx()) if graph.vertex_count else True


def bridges(graph: SimpleGraph) -> List[Edge]:
    found = {(min(a, b), max(a, b)) for a, b in nx.bridges(graph.to_networkx())}
    return [edge for edge in graph.edges if edge in found]


def contraction_sequence(graph: SimpleGraph) -> ContractionSequence:
    """
    Contracts non-bridge edges one at a time until a tree remains.

    Each chosen edge keeps the block count unchanged, so the sequence has exactly
    v - b - 1 steps. The first admissible edge in edge order is taken.
    """
    if graph.vertex_count and not nx.is_connected(graph.to_networkx()):
        raise HypothesisError(f"contraction_sequence needs a connected graph, got {graph.key()}")
    steps: List[ContractionStep] = []
    current = graph
    blocks = block_count(current)
    while not is_forest(current):
        bridge_set = set(bridges(current))
        for edge in current.edges:
            if edge in bridge_set:
                continue
            candidate = contract_edge(current, edge)
            if block_count(candidate) == blocks:
                steps.append(ContractionStep(current, edge))
                current = candidate
                break
        else:
            raise IntegrityError(f"no block-preserving contraction found in {current.key()}")
    logger.debug(f"Contraction sequence of {graph.key()} has {len(steps)} steps")
    return ContractionSequence(tuple(steps), current)


def shortest_cycle_length(graph: SimpleGraph) -> int:
    """Girth by exhaustive cycle listing; slow, used to cross-check `girth`."""
    return min((len(found) for found in nx.simple_cycles(graph.to_networkx())), default=0)


def longest_cycle_length(graph: SimpleGraph) -> int:
    """Length of a longest cycle, 0 for forests. Exponential; small graphs only."""
    return max((len(found) for found in nx.simple_cycles(graph.to_networkx())), default=0)


# (component index of each vertex, smallest vertex of each component)
StatePartition = Tuple[Tuple[int, ...], Tuple[int, ...]]


def state_graph_components(graph: SimpleGraph, mask: int) -> StatePartition:
    """Components of the spanning subgraph (V, s), s the edges whose bits are set in `mask`."""
    parent = list(range(graph.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, (a, b) in enumerate(graph.edges):
        if mask >> k & 1:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    labels: Dict[int, int] = {}
    component_of = []
    representatives = []
    for vertex in range(graph.vertex_count):
        root = find(vertex)
        if root not in labels:
            labels[root] = len(representatives)
            representatives.append(vertex)
        component_of.append(labels[root])
    return tuple(component_of), tuple(representatives)
