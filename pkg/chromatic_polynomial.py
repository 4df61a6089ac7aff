import logging
import threading
from math import comb
from typing import Dict, List, Mapping, Tuple

import networkx as nx

from graph_invariants import GraphInvariants, state_graph_components
from homology_errors import ResourceLimitError
from int_polynomial import IntPolynomial, q_dimension
from simple_graph import SimpleGraph, connected_components, contract_edge, delete_edge, induced_subgraph

logger = logging.getLogger(__name__)

LAMBDA = IntPolynomial.from_ascending([0, 1], "lambda")
STATE_SUM_MAX_EDGES = 20


def cycle_polynomial(n: int) -> IntPolynomial:
    """(λ-1)^n + (-1)^n (λ-1)."""
    shifted = LAMBDA - 1
    return shifted ** n + shifted * (-1) ** n


def _falling_factorial(n: int) -> IntPolynomial:
    result = IntPolynomial.constant(1)
    for k in range(n):
        result = result * (LAMBDA - k)
    return result


class ChromaticPolynomialCalculator:
    """
    Deletion–contraction over blocks with a shared memo of 2-connected pieces.

    Memo keys are Weisfeiler–Lehman hashes; graphs in the same bucket are told
    apart by an exact isomorphism test. The memo is guarded by a lock so one
    calculator can serve several threads.
    """

    def __init__(self):
        self._memo: Dict[Tuple[int, int, str], List[Tuple[nx.Graph, IntPolynomial]]] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def polynomial(self, graph: SimpleGraph) -> IntPolynomial:
        if graph.vertex_count == 0:
            return IntPolynomial.constant(1)
        components = connected_components(graph)
        if len(components) > 1:
            result = IntPolynomial.constant(1)
            for component in components:
                result = result * self._connected(induced_subgraph(graph, component))
            return result
        return self._connected(graph)

    def _connected(self, graph: SimpleGraph) -> IntPolynomial:
        v, e = graph.vertex_count, graph.edge_count
        if e == v - 1:
            return LAMBDA * (LAMBDA - 1) ** (v - 1)
        if e == v * (v - 1) // 2:
            return _falling_factorial(v)
        nx_graph = graph.to_networkx()
        blocks = [sorted(block) for block in nx.biconnected_components(nx_graph)]
        if len(blocks) == 1:
            return self._biconnected(graph)
        # P_G = λ^(1-b) Π P_B for a connected graph with blocks B.
        result = IntPolynomial.constant(1)
        for block in blocks:
            result = result * self._biconnected(induced_subgraph(graph, block))
        return result.divide_exact(LAMBDA ** (len(blocks) - 1))

    def _lookup(self, key, nx_graph: nx.Graph):
        with self._lock:
            for candidate, value in self._memo.get(key, []):
                if nx.is_isomorphic(candidate, nx_graph):
                    self.hits += 1
                    return value
            self.misses += 1
        return None

    def _store(self, key, nx_graph: nx.Graph, value: IntPolynomial):
        with self._lock:
            self._memo.setdefault(key, []).append((nx_graph, value))

    def _biconnected(self, graph: SimpleGraph) -> IntPolynomial:
        v, e = graph.vertex_count, graph.edge_count
        if v <= 2:
            return LAMBDA * (LAMBDA - 1) if e else LAMBDA ** v
        if e == v:
            return cycle_polynomial(v)
        if e == v * (v - 1) // 2:
            return _falling_factorial(v)
        nx_graph = graph.to_networkx()
        key = (v, e, nx.weisfeiler_lehman_graph_hash(nx_graph))
        cached = self._lookup(key, nx_graph)
        if cached is not None:
            return cached
        # Split on an edge at a vertex of maximum degree; no edge of a block is a bridge.
        hub = max(range(v), key=lambda x: (nx_graph.degree(x), -x))
        edge = next(k for k, (a, b) in enumerate(graph.edges) if hub in (a, b))
        value = self.polynomial(delete_edge(graph, edge)) - self.polynomial(contract_edge(graph, edge))
        self._store(key, nx_graph, value)
        return value


_default_calculator = ChromaticPolynomialCalculator()


def chromatic_polynomial(graph: SimpleGraph) -> IntPolynomial:
    return _default_calculator.polynomial(graph)


def state_sum_polynomial(graph: SimpleGraph) -> IntPolynomial:
    """Σ over edge subsets s of (-1)^|s| λ^k(s), k(s) the number of components of (V, s)."""
    if graph.edge_count > STATE_SUM_MAX_EDGES:
        raise ResourceLimitError(
            f"state sum over 2^{graph.edge_count} subsets exceeds the {STATE_SUM_MAX_EDGES}-edge ceiling"
        )
    terms: Dict[int, int] = {}
    for mask in range(1 << graph.edge_count):
        _, representatives = state_graph_components(graph, mask)
        components = len(representatives)
        terms[components] = terms.get(components, 0) + (-1) ** bin(mask).count("1")
    return IntPolynomial.from_terms(terms, "lambda")


def to_q_basis(polynomial: IntPolynomial) -> IntPolynomial:
    """Rewrites p(λ) in q = λ - 1."""
    return polynomial.substitute_shift(1, "q")


def evaluate_at_qdim(polynomial: IntPolynomial, m: int) -> IntPolynomial:
    """P(1 + q + ... + q^(m-1)), the graded Euler characteristic over Z[x]/(x^m)."""
    return polynomial.evaluate(q_dimension(m))


def farrell_coefficients(inv: GraphInvariants) -> Tuple[int, int, int, int]:
    """Leading coefficients (c_v, c_{v-1}, c_{v-2}, c_{v-3}) of the chromatic polynomial."""
    e = inv.E
    return (
        1,
        -e,
        comb(e, 2) - inv.t3,
        -comb(e, 3) + (e - 2) * inv.t3 + inv.t4 - 2 * inv.k4,
    )


def block_count_from_polynomial(polynomial: IntPolynomial) -> int:
    """Multiplicity of (λ-1), read off as the lowest degree in the q-basis."""
    if polynomial.is_zero():
        raise ValueError("the zero polynomial is not a chromatic polynomial of a connected graph")
    return to_q_basis(polynomial).lowest_degree


def outerplanar_chromatic_polynomial(induced_cycles: Mapping[int, int], blocks: int) -> IntPolynomial:
    """
    Chromatic polynomial of a connected outerplanar graph from its chordless cycles.

    Equals (λ-1)^(b-1) times the polynomial of the single polygon tree with the same
    cycles, Π P_{C_k}^{r_k} / (λ(λ-1))^(R-1).
    """
    if blocks == 0:
        return LAMBDA
    total = sum(induced_cycles.values())
    product = IntPolynomial.constant(1)
    for length, count in induced_cycles.items():
        product = product * cycle_polynomial(length) ** count
    edge_factor = LAMBDA * (LAMBDA - 1)
    if total == 0:
        polygon_tree = edge_factor
    else:
        polygon_tree = product.divide_exact(edge_factor ** (total - 1))
    return polygon_tree * (LAMBDA - 1) ** (blocks - 1)
