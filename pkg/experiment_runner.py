"""
Observations on open questions about chromatic homology over A_m.

Nothing here is asserted: every experiment records the computed values next
to the value a conjecture would predict, and the caller decides what to do
with disagreements.
"""
import logging
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import chromatic_complex
from graph_bounds import cycle_torsion_width, tail
from graph_builder import complete, wheel
from graph_enumerator import connected_graphs_up_to
from graph_invariants import compute_invariants
from homology_errors import UsageError
from simple_graph import SimpleGraph, delete_edge
from sweep_runner import SweepRunner

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Observation:
    experiment: str
    instance: str
    values: Dict[str, Any]

    def to_json(self) -> Dict[str, Any]:
        return {"experiment": self.experiment, "instance": self.instance, **self.values}


@dataclass
class ExperimentOptions:
    max_v: int = 5
    m_values: Tuple[int, ...] = (3,)
    wheel_range: Tuple[int, int] = (4, 7)
    complete_range: Tuple[int, int] = (3, 5)
    workers: int = 1
    show_progress: bool = False


def _tail_column(graph: SimpleGraph, m: int) -> Dict[str, str]:
    inv = compute_invariants(graph)
    last = inv.v - inv.b - 1
    h = chromatic_complex.homology(graph, m, degrees=(last, last))
    return {f"H^{{{i},{j}}}": str(group) for (i, j), group in h.items()}


# --- Jobs (module level so they can be pickled) ---

def _span_job(job: Tuple[SimpleGraph, int]) -> Dict[str, Any]:
    graph, m = job
    inv = compute_invariants(graph)
    h = chromatic_complex.homology(graph, m)
    return {"m": m, "v": inv.v, "b": inv.b, "hspan": h.hspan(), "v_minus_b": inv.v - inv.b,
            "equal": h.hspan() == inv.v - inv.b}


def _torsion_width_job(job: Tuple[SimpleGraph, int]) -> Dict[str, Any]:
    graph, m = job
    inv = compute_invariants(graph)
    h = chromatic_complex.homology(graph, m)
    values: Dict[str, Any] = {
        "m": m, "v": inv.v, "b": inv.b, "girth": inv.girth,
        "torsion_width": h.width(torsion=True),
        "torsion_orders": h.torsion_orders(),
    }
    if inv.E == inv.v and inv.b == 1 and inv.v >= 3:
        values["cycle_prediction"] = cycle_torsion_width(inv.v, m)
    return values


def _sweep(name: str, job: Callable, graphs: Sequence[SimpleGraph], options: ExperimentOptions) -> List[Observation]:
    jobs = [(graph, m) for graph in graphs for m in options.m_values]
    runner: SweepRunner = SweepRunner(options.workers, options.show_progress)
    results = runner.run(job, jobs, key=lambda item: f"{item[0].key()}|m={item[1]}", desc=name)
    return [Observation(name, key, values) for key, values in results]


# --- Experiments ---

def span_over_am(options: ExperimentOptions) -> List[Observation]:
    """hspan of H_{A_m} against v - b; the lower bound is proven, equality is open."""
    graphs = list(connected_graphs_up_to(options.max_v, min_vertices=2))
    return _sweep("span", _span_job, graphs, options)


def torsion_width_over_a3(options: ExperimentOptions) -> List[Observation]:
    """Torsion width of H_{A_3}; cycles also carry the closed-form value."""
    graphs = list(connected_graphs_up_to(options.max_v, min_vertices=3))
    restricted = replace(options, m_values=(3,))
    return _sweep("torsion-width", _torsion_width_job, graphs, restricted)


def wheel_minus_spoke_tail(options: ExperimentOptions) -> List[Observation]:
    observations = []
    low, high = options.wheel_range
    for n in range(low, high + 1):
        graph = delete_edge(wheel(n), (0, 1))
        values: Dict[str, Any] = {"n": n, "tail_A2": tail(graph), "tail_A2_wheel": tail(wheel(n))}
        for m in options.m_values:
            if graph.edge_count <= chromatic_complex.DEFAULT_MAX_EDGES:
                values[f"tail_column_A{m}"] = _tail_column(graph, m)
        observations.append(Observation("wheel-minus-spoke", f"W{n}-spoke", values))
    return observations


def complete_graph_tail(options: ExperimentOptions) -> List[Observation]:
    observations = []
    low, high = options.complete_range
    for n in range(low, high + 1):
        graph = complete(n)
        values: Dict[str, Any] = {"n": n, "tail_A2": tail(graph)}
        for m in options.m_values:
            values[f"tail_column_A{m}"] = _tail_column(graph, m)
        observations.append(Observation("complete-tail", f"K{n}", values))
    return observations


EXPERIMENTS: Dict[str, Callable[[ExperimentOptions], List[Observation]]] = {
    "span": span_over_am,
    "torsion-width": torsion_width_over_a3,
    "wheel-tail": wheel_minus_spoke_tail,
    "complete-tail": complete_graph_tail,
}


def run_experiments(names: Optional[Sequence[str]] = None,
                    options: Optional[ExperimentOptions] = None) -> List[Observation]:
    options = options or ExperimentOptions()
    names = list(names) if names else list(EXPERIMENTS)
    unknown = [name for name in names if name not in EXPERIMENTS]
    if unknown:
        raise UsageError(f"unknown experiment(s) {unknown}; choose from {sorted(EXPERIMENTS)}")
    observations: List[Observation] = []
    for name in names:
        logger.info(f"--- Starting experiment {name} ---")
        found = EXPERIMENTS[name](options)
        observations.extend(found)
        logger.info(f"--- Experiment {name} Complete: {len(found)} observations ---")
    return observations
