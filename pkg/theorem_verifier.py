"""
Checks each closed form against a computed oracle, instance by instance.

Every theorem id maps to an instance builder and a module-level check
function, so checks can run on a process pool. A verdict records both sides
as JSON-ready values and whether they agree.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import chromatic_complex
from bigraded_groups import BigradedGroups
from chromatic_polynomial import chromatic_polynomial
from diagram_generator import pretzel_diagram, rational_diagram, torus_diagram, trefoil
from graph_bounds import density_and_gaps, jones_coefficients, span_bounds
from graph_builder import bridge, cycle, edge_glue, edge_glue_k, theta, vertex_glue
from graph_enumerator import verification_population
from graph_invariants import bridges, compute_invariants
from homology_errors import UsageError
from homology_formulas import (
    bridge_homology,
    cycle_homology,
    edge_glue_homology,
    low_degree_groups,
    reconstruct_A2_homology,
    third_fourth_groups,
    vertex_glue_homology,
)
from khovanov_complex import khovanov_homology, normalized_jones
from correspondence_checker import correspondence_check
from simple_graph import SimpleGraph, contract_edge, delete_edge
from sweep_runner import SweepRunner
from torsion_patterns import pretzel_torsion, rational_torsion, two_cycle_torsion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Instance:
    theorem: str
    name: str
    payload: Tuple[Any, ...]


@dataclass(frozen=True)
class Verdict:
    theorem: str
    instance: str
    closed_form: Any
    oracle: Any
    match: bool

    def to_json(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "closed_form": self.closed_form,
            "oracle": self.oracle,
            "match": self.match,
        }


@dataclass
class VerifyOptions:
    max_v: int = 5
    sample_v: Optional[int] = None
    sample_size: int = 50
    seed: int = 0
    s_range: Tuple[int, int] = (3, 7)
    t_range: Tuple[int, int] = (3, 7)
    n_range: Tuple[int, int] = (3, 6)
    m_values: Tuple[int, ...] = (2, 3)
    pretzel: Optional[Tuple[int, ...]] = None
    workers: int = 1
    show_progress: bool = False


def _groups(h: BigradedGroups) -> List[Dict[str, Any]]:
    return h.to_json()["groups"]


def _verdict(instance: Instance, closed_form: Any, oracle: Any, match: Optional[bool] = None) -> Verdict:
    if match is None:
        match = closed_form == oracle
    if not match:
        logger.warning(f"[{instance.theorem}] mismatch on {instance.name}")
    return Verdict(instance.theorem, instance.name, closed_form, oracle, match)


def _a2(graph: SimpleGraph, degrees: Optional[Tuple[int, int]] = None) -> BigradedGroups:
    return chromatic_complex.homology(graph, 2, degrees=degrees)


# --- Check functions ---

def check_polygon(instance: Instance) -> Verdict:
    n, m = instance.payload
    closed = cycle_homology(n, m)
    oracle = chromatic_complex.homology(cycle(n), m)
    return _verdict(instance, _groups(closed), _groups(oracle), closed == oracle)


def check_rankdiag(instance: Instance) -> Verdict:
    (graph,) = instance.payload
    inv = compute_invariants(graph)
    h = _a2(graph, (0, 2))
    closed, oracle = {}, {}
    for column in low_degree_groups(inv):
        upper, lower = (column.i, inv.v - column.i), (column.i, inv.v - column.i - 1)
        closed[f"{upper}"], closed[f"{lower}"] = str(column.upper), str(column.lower)
        oracle[f"{upper}"], oracle[f"{lower}"] = str(h[upper]), str(h[lower])
    return _verdict(instance, closed, oracle)


def check_4thkh(instance: Instance) -> Verdict:
    (graph,) = instance.payload
    inv = compute_invariants(graph)
    h = _a2(graph, (3, 4))
    oracle = (h.get(3, inv.v - 3).free, h.get(4, inv.v - 4).torsion_multiplicity(2))
    return _verdict(instance, list(third_fourth_groups(inv)), list(oracle))


def check_polyedge(instance: Instance) -> Verdict:
    base, n = instance.payload
    closed = edge_glue_homology(_a2(base), compute_invariants(base), n)
    oracle = _a2(edge_glue(base, cycle(n)))
    return _verdict(instance, _groups(closed), _groups(oracle), closed == oracle)


def check_glueshift(instance: Instance) -> Verdict:
    base, n = instance.payload
    closed = vertex_glue_homology(_a2(base), compute_invariants(base), n)
    oracle = _a2(vertex_glue(base, cycle(n)))
    return _verdict(instance, _groups(closed), _groups(oracle), closed == oracle)


def check_bridge(instance: Instance) -> Verdict:
    first, second = instance.payload
    closed = bridge_homology(_a2(vertex_glue(first, second)))
    oracle = _a2(bridge(first, second))
    return _verdict(instance, _groups(closed), _groups(oracle), closed == oracle)


def _torsion_verdict(instance: Instance, pattern, graph: SimpleGraph, stop: int) -> Verdict:
    h = _a2(graph, (0, stop))
    return _verdict(instance, list(pattern.window(1, stop)), list(h.torsion_sequence(1, stop, 2)))


def check_twocycle(instance: Instance) -> Verdict:
    s, t = instance.payload
    graph = edge_glue(cycle(s), cycle(t))
    return _torsion_verdict(instance, two_cycle_torsion(s, t, 1), graph, graph.vertex_count - 2)


def check_patterns2(instance: Instance) -> Verdict:
    s, t = instance.payload
    graph = edge_glue_k(cycle(s), cycle(t), 2)
    return _torsion_verdict(instance, two_cycle_torsion(s, t, 2), graph, graph.vertex_count - 2)


def check_pretzel(instance: Instance) -> Verdict:
    a1, a2, a3 = instance.payload
    pattern = pretzel_torsion(a1, a2, a3)
    return _torsion_verdict(instance, pattern, theta(a1, a2, a3), pattern.stop_i)


def check_rational(instance: Instance) -> Verdict:
    p, q = instance.payload
    pattern = rational_torsion(p, q)
    return _torsion_verdict(instance, pattern, theta(p - 1, 1, q - 1), pattern.stop_i)


def check_span(instance: Instance) -> Verdict:
    (graph,) = instance.payload
    inv = compute_invariants(graph)
    h = _a2(graph)
    top = inv.v - inv.b
    closed = {"hspan": span_bounds(inv).hspan, "jmin": inv.b, "free_degrees": list(range(top))}
    oracle = {
        "hspan": h.hspan(),
        "jmin": h.jmin(),
        "free_degrees": [i for i in range(top) if any(g.free for g in h.column(i).values())],
    }
    return _verdict(instance, closed, oracle)


def _support_violations(h: BigradedGroups, v: int, m: int) -> List[List[Any]]:
    """Nonzero groups outside 0 <= i <= v-2, i+j >= v-1, (m-1)i + j <= (m-1)v."""
    found = []
    for (i, j), group in h.items():
        inside = 0 <= i <= v - 2 and i + j >= v - 1 and (m - 1) * i + j <= (m - 1) * v
        if group.has_torsion():
            # A_2 torsion sits on the upper diagonal only
            inside = inside and i >= 1 and (m > 2 or i + j >= v)
        if not inside:
            found.append([i, j, str(group)])
    return found


def check_support(instance: Instance) -> Verdict:
    graph, m = instance.payload
    h = chromatic_complex.homology(graph, m, restrict_to_support=False)
    return _verdict(instance, [], _support_violations(h, graph.vertex_count, m))


def check_width(instance: Instance) -> Verdict:
    graph, m = instance.payload
    closed = span_bounds(compute_invariants(graph)).width(m)
    return _verdict(instance, closed, chromatic_complex.homology(graph, m).width())


def check_det(instance: Instance) -> Verdict:
    (graph,) = instance.payload
    inv = compute_invariants(graph)
    closed = reconstruct_A2_homology(chromatic_polynomial(graph), inv.v, inv.bipartite)
    oracle = _a2(graph)
    return _verdict(instance, _groups(closed), _groups(oracle), closed == oracle)


def check_density(instance: Instance) -> Verdict:
    (graph,) = instance.payload
    report = density_and_gaps(_a2(graph), compute_invariants(graph))
    return _verdict(instance, True, report.dense)


def check_gap(instance: Instance) -> Verdict:
    """
    theta(2, n-2, 2) has no A_2 homology at i = n. When its girth reaches n the
    torsion correspondence carries this over, leaving a torsion gap in Kh of the
    pretzel link (-2, -(n-2), -2) at p = n - c_-.
    """
    (n,) = instance.payload
    graph = theta(2, n - 2, 2)
    inv = compute_invariants(graph)
    h = _a2(graph)
    closed = {"hspan": inv.v - inv.b, "homology_at_n": False}
    oracle = {"hspan": h.hspan(), "homology_at_n": bool(h.column(n))}
    if inv.girth >= n:
        diagram = pretzel_diagram(2, n - 2, 2)
        p = n - diagram.c_minus
        gaps = density_and_gaps(khovanov_homology(diagram), inv).gaps
        closed["kh_gap_at"] = p
        oracle["kh_gap_at"] = p if any(start <= p < start + length for start, length in gaps) else None
    return _verdict(instance, closed, oracle)


def _jones_head(diagram) -> Tuple[int, ...]:
    jones = normalized_jones(diagram)
    low = jones.lowest_degree
    head = [jones.coefficient(low + 2 * k) for k in range(4)]
    sign = 1 if head[0] > 0 else -1
    return tuple(sign * c for c in head)


def check_jones4(instance: Instance) -> Verdict:
    (diagram,) = instance.payload
    closed = jones_coefficients(compute_invariants(diagram.state_graph(0)))
    return _verdict(instance, list(closed), list(_jones_head(diagram)))


def check_correspondence(instance: Instance) -> Verdict:
    (diagram,) = instance.payload
    report = correspondence_check(diagram)
    oracle = {
        "pairs": len(report.pairs),
        "mismatches": [pair.to_json() for pair in report.mismatches()],
        "best_offset": list(report.offset),
    }
    return _verdict(instance, "holds", oracle, report.holds)


def check_2tor(instance: Instance) -> Verdict:
    (graph,) = instance.payload
    orders = _a2(graph).torsion_orders()
    return _verdict(instance, [2] if orders else [], orders, all(order == 2 for order in orders))


def check_lemmasum(instance: Instance) -> Verdict:
    graph, edge = instance.payload
    v = graph.vertex_count
    whole, contracted, deleted = _a2(graph), _a2(contract_edge(graph, edge)), _a2(delete_edge(graph, edge))
    closed, oracle = {}, {}
    for i in range(2, v - 1):
        summed = contracted.get(i - 1, v - i) + deleted.get(i, v - i)
        closed[str(i)], oracle[str(i)] = str(summed), str(whole.get(i, v - i))
    return _verdict(instance, closed, oracle)


# --- Instance families ---

def _population(options: VerifyOptions, minimum_vertices: int = 1) -> List[SimpleGraph]:
    graphs = verification_population(options.max_v, options.sample_v, options.sample_size, options.seed)
    return [graph for graph in graphs if graph.vertex_count >= minimum_vertices]


def _graph_instances(theorem: str, options: VerifyOptions, minimum_vertices: int = 1) -> List[Instance]:
    return [Instance(theorem, graph.key(), (graph,)) for graph in _population(options, minimum_vertices)]


def _span(bounds: Tuple[int, int]) -> range:
    return range(bounds[0], bounds[1] + 1)


def _glue_bases() -> List[Tuple[str, SimpleGraph]]:
    return [(f"cycle({n})", cycle(n)) for n in range(3, 7)] + [("theta(2,2,2)", theta(2, 2, 2))]


def _polygon_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    return [Instance(theorem, f"cycle({n}) m={m}", (n, m)) for n in range(3, 9) for m in options.m_values]


def _glue_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    return [
        Instance(theorem, f"{name} with cycle({n})", (graph, n))
        for name, graph in _glue_bases()
        for n in _span(options.n_range)
    ]


def _bridge_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    sizes = range(3, 6)
    return [
        Instance(theorem, f"cycle({a}) bridged to cycle({b})", (cycle(a), cycle(b)))
        for a, b in combinations_with_replacement(sizes, 2)
    ]


def _cycle_pair_instances(theorem: str, options: VerifyOptions, minimum: int = 3) -> List[Instance]:
    return [
        Instance(theorem, f"cycle({s}) and cycle({t})", (s, t))
        for s in _span(options.s_range)
        for t in _span(options.t_range)
        if minimum <= s <= t
    ]


def _pretzel_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    if options.pretzel is not None:
        if len(options.pretzel) != 3:
            raise UsageError(f"pretzel verification takes three parameters, got {options.pretzel}")
        triples = [tuple(options.pretzel)]
    else:
        triples = [(a, 2, c) for a, c in combinations_with_replacement(range(3, 6), 2)]
    return [Instance(theorem, f"pretzel{triple}", triple) for triple in triples]


def _rational_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    return [
        Instance(theorem, f"rational(-{p} {q})", (p, q))
        for p, q in combinations_with_replacement(range(3, 7), 2)
    ]


def _width_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    small = VerifyOptions(max_v=min(options.max_v, 4))
    return [
        Instance(theorem, f"{graph.key()} m={m}", (graph, m))
        for graph in _population(small)
        for m in options.m_values
    ]


def _support_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    small = VerifyOptions(max_v=min(options.max_v, 4))
    return [
        Instance(theorem, f"{graph.key()} m={m}", (graph, m))
        for graph in _population(small, minimum_vertices=2)
        for m in options.m_values
    ]


def _density_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    trees = {
        "cycle(4)": cycle(4),
        "cycle(3)|cycle(5)": edge_glue(cycle(3), cycle(5)),
        "cycle(4)|cycle(4)": edge_glue(cycle(4), cycle(4)),
        "cycle(3)|(cycle(4)|cycle(5))": edge_glue(cycle(3), edge_glue(cycle(4), cycle(5))),
    }
    return [Instance(theorem, name, (graph,)) for name, graph in trees.items()]


def _gap_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    return [Instance(theorem, f"theta(2,{n - 2},2)", (n,)) for n in range(4, max(4, options.n_range[1]) + 1)]


def _jones_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    diagrams = [torus_diagram(2, n) for n in range(4, 8)]
    diagrams += [pretzel_diagram(2, 2, 2), pretzel_diagram(3, 2, 3), pretzel_diagram(3, 3, 3)]
    return [Instance(theorem, diagram.name, (diagram,)) for diagram in diagrams]


def _correspondence_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    if options.pretzel is not None:
        diagrams = [pretzel_diagram(*options.pretzel)]
    else:
        diagrams = [trefoil()] + [torus_diagram(2, n) for n in range(3, 7)]
        diagrams += [pretzel_diagram(2, 2, 2), rational_diagram(3, 3)]
    return [Instance(theorem, diagram.name, (diagram,)) for diagram in diagrams]


def _lemmasum_instances(theorem: str, options: VerifyOptions) -> List[Instance]:
    found = []
    for graph in _population(options, minimum_vertices=4):
        bridge_set = set(bridges(graph))
        edge = next((e for e in graph.edges if e not in bridge_set), None)
        if edge is not None:
            found.append(Instance(theorem, f"{graph.key()} e={edge}", (graph, edge)))
    return found


InstanceBuilder = Callable[[str, VerifyOptions], List[Instance]]

THEOREMS: Dict[str, Tuple[InstanceBuilder, Callable[[Instance], Verdict]]] = {
    "polygon": (_polygon_instances, check_polygon),
    "rankdiag": (lambda t, o: _graph_instances(t, o, 3), check_rankdiag),
    "4thkh": (lambda t, o: _graph_instances(t, o, 5), check_4thkh),
    "polyedge": (_glue_instances, check_polyedge),
    "glueshift": (_glue_instances, check_glueshift),
    "bridge": (_bridge_instances, check_bridge),
    "twocycle": (_cycle_pair_instances, check_twocycle),
    "patterns2": (lambda t, o: _cycle_pair_instances(t, o, 4), check_patterns2),
    "pretzel": (_pretzel_instances, check_pretzel),
    "rational": (_rational_instances, check_rational),
    "span": (_graph_instances, check_span),
    "support": (_support_instances, check_support),
    "width": (_width_instances, check_width),
    "det": (_graph_instances, check_det),
    "density": (_density_instances, check_density),
    "gap": (_gap_instances, check_gap),
    "jones4": (_jones_instances, check_jones4),
    "correspondence": (_correspondence_instances, check_correspondence),
    "2tor": (_graph_instances, check_2tor),
    "lemmasum": (_lemmasum_instances, check_lemmasum),
}


def _dispatch(instance: Instance) -> Verdict:
    return THEOREMS[instance.theorem][1](instance)


@dataclass
class VerificationReport:
    verdicts: List[Verdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(verdict.match for verdict in self.verdicts)

    def failures(self) -> List[Verdict]:
        return [verdict for verdict in self.verdicts if not verdict.match]

    def to_json(self) -> List[Dict[str, Any]]:
        return [verdict.to_json() for verdict in self.verdicts]


def verify(theorems: Sequence[str], options: Optional[VerifyOptions] = None) -> VerificationReport:
    options = options or VerifyOptions()
    unknown = [t for t in theorems if t not in THEOREMS]
    if unknown:
        raise UsageError(f"unknown theorem id(s) {unknown}; known: {sorted(THEOREMS)}")
    runner: SweepRunner[Instance, Verdict] = SweepRunner(options.workers, options.show_progress)
    report = VerificationReport()
    for theorem in theorems:
        builder, _ = THEOREMS[theorem]
        instances = builder(theorem, options)
        results = runner.run(_dispatch, instances, key=lambda inst: inst.name, desc=f"Verifying {theorem}")
        report.verdicts.extend(verdict for _, verdict in results)
        failed = sum(1 for _, verdict in results if not verdict.match)
        logger.info(f"--- {theorem}: {len(results) - failed}/{len(results)} instances agree ---")
    return report
