"""
Chromatic graph homology over Z[x]/(x^m).

A generator is an edge subset s together with a label x^a for every connected
component of the spanning subgraph (V, s); its quantum degree is the sum of the
exponents. Adding an edge that joins two components multiplies their labels,
adding an edge inside a component is the identity.
"""
import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from base_cube_complex import BaseCubeComplex, GradedChainSlice, Window
from bigraded_groups import BigradedGroups
from graph_invariants import StatePartition, state_graph_components
from homology_errors import ResourceLimitError
from int_polynomial import IntPolynomial, q_dimension
from simple_graph import SimpleGraph

logger = logging.getLogger(__name__)

DEFAULT_MAX_EDGES = int(os.getenv("CHROMKH_MAX_EDGES", "24"))

Generator = Tuple[int, Tuple[int, ...]]


@dataclass(frozen=True)
class TruncatedAlgebra:
    """Z[x]/(x^m) with basis 1, x, ..., x^(m-1) and deg x^k = k."""
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"the algebra needs m >= 2, got {self.m}")

    @property
    def top_degree(self) -> int:
        return self.m - 1

    def qdim(self) -> IntPolynomial:
        return q_dimension(self.m)

    def multiply(self, a: int, b: int) -> Optional[int]:
        """Exponent of x^a * x^b, or None when the product vanishes."""
        return a + b if a + b < self.m else None


@lru_cache(maxsize=None)
def label_compositions(parts: int, total: int, m: int) -> Tuple[Tuple[int, ...], ...]:
    """Tuples of `parts` exponents in [0, m-1] summing to `total`, in lexicographic order."""
    if parts == 0:
        return ((),) if total == 0 else ()
    found = []
    for first in range(min(m - 1, total) + 1):
        for rest in label_compositions(parts - 1, total - first, m):
            found.append((first,) + rest)
    return tuple(found)


def _subset_mask(indices: Tuple[int, ...]) -> int:
    mask = 0
    for k in indices:
        mask |= 1 << k
    return mask


def enumerate_states(graph: SimpleGraph, max_edges: int = DEFAULT_MAX_EDGES) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """All edge subsets with their component counts, by size and then lexicographically."""
    if graph.edge_count > max_edges:
        raise ResourceLimitError(f"graph has {graph.edge_count} edges, limit is {max_edges}")
    for size in range(graph.edge_count + 1):
        for subset in combinations(range(graph.edge_count), size):
            _, representatives = state_graph_components(graph, _subset_mask(subset))
            yield subset, len(representatives)


class ChromaticComplex(BaseCubeComplex):
    """
    The cube complex C_{A_m}(G) sliced by bigrading.

    With `restrict_to_support`, only bigradings allowed by the support bounds of a
    connected graph (0 <= i <= v-2, i+j >= v-1, (m-1)i + j <= (m-1)v) are
    computed; other groups are known to vanish.
    """

    def __init__(self, graph: SimpleGraph, algebra: TruncatedAlgebra, max_edges: int = DEFAULT_MAX_EDGES,
                 restrict_to_support: bool = True, **kwargs):
        if graph.edge_count > max_edges:
            raise ResourceLimitError(f"graph has {graph.edge_count} edges, limit is {max_edges}")
        super().__init__(**kwargs)
        self.graph = graph
        self.algebra = algebra
        self.restrict_to_support = restrict_to_support
        self._partitions: Dict[int, StatePartition] = {}
        self._connected = len(self._partition_of(_subset_mask(tuple(range(graph.edge_count))))[1]) <= 1

    @property
    def cube_dimension(self) -> int:
        return self.graph.edge_count

    def _partition_of(self, mask: int) -> StatePartition:
        cached = self._partitions.get(mask)
        if cached is None:
            cached = state_graph_components(self.graph, mask)
            self._partitions[mask] = cached
        return cached

    def gradings(self, degrees: Window = None, quantum: Window = None) -> List[Tuple[int, int]]:
        v, m = self.graph.vertex_count, self.algebra.m
        top = self.algebra.top_degree
        supported = self.restrict_to_support and self._connected and v >= 2
        i_high = v - 2 if supported else self.cube_dimension
        found = []
        for i in range(0, i_high + 1):
            if degrees is not None and not degrees[0] <= i <= degrees[1]:
                continue
            j_low, j_high = 0, top * v
            if supported:
                j_low = max(j_low, v - 1 - i)
                j_high = min(j_high, top * (v - i))
            for j in range(j_low, j_high + 1):
                if quantum is not None and not quantum[0] <= j <= quantum[1]:
                    continue
                found.append((i, j))
        return found

    def _generate_basis(self, i: int, j: int) -> Iterator[Generator]:
        for subset in combinations(range(self.cube_dimension), i):
            mask = _subset_mask(subset)
            _, representatives = self._partition_of(mask)
            for labels in label_compositions(len(representatives), j, self.algebra.m):
                yield mask, labels

    def _boundary(self, generator: Generator) -> Iterator[Tuple[Generator, int]]:
        mask, labels = generator
        component_of, representatives = self._partition_of(mask)
        for k, (u, w) in enumerate(self.graph.edges):
            bit = 1 << k
            if mask & bit:
                continue
            sign = -1 if bin(mask & (bit - 1)).count("1") % 2 else 1
            target_mask = mask | bit
            if component_of[u] == component_of[w]:
                yield (target_mask, labels), sign
                continue
            merged = self.algebra.multiply(labels[component_of[u]], labels[component_of[w]])
            if merged is None:
                continue
            target_component_of, target_representatives = self._partition_of(target_mask)
            target_labels = [0] * len(target_representatives)
            for component, representative in enumerate(representatives):
                target_labels[target_component_of[representative]] += labels[component]
            yield (target_mask, tuple(target_labels)), sign


def chromatic_complex(graph: SimpleGraph, m: int, i: int, j: int,
                      max_edges: int = DEFAULT_MAX_EDGES) -> GradedChainSlice:
    """The slice C^{i,j} with its differential into C^{i+1,j}."""
    return ChromaticComplex(graph, TruncatedAlgebra(m), max_edges=max_edges).chain_slice(i, j)


def homology(graph: SimpleGraph, m: int = 2, degrees: Window = None, quantum: Window = None,
             restrict_to_support: bool = True, max_edges: int = DEFAULT_MAX_EDGES,
             num_workers: int = 1, show_progress: bool = False) -> BigradedGroups:
    """Integral chromatic homology H^{i,j}_{A_m}(G), optionally clipped to degree/quantum windows."""
    complex_ = ChromaticComplex(
        graph,
        TruncatedAlgebra(m),
        max_edges=max_edges,
        restrict_to_support=restrict_to_support,
        num_workers=num_workers,
        show_progress=show_progress,
    )
    result = complex_.homology(degrees, quantum)
    logger.debug(f"H_A{m}({graph.key()}) has {len(result)} nonzero groups")
    return result


def euler_characteristic(groups: BigradedGroups) -> IntPolynomial:
    """Σ (-1)^i rank H^{i,j} q^j."""
    return groups.free_euler_characteristic("q")
