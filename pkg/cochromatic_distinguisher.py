"""
Searches for cochromatic graphs told apart by chromatic homology over A_m.

Over A_2 the homology is a function of the chromatic polynomial, so splits can
only appear for m >= 3.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import chromatic_complex
from chromatic_polynomial import chromatic_polynomial
from graph_enumerator import connected_graphs
from homology_errors import ResourceLimitError
from int_polynomial import IntPolynomial
from simple_graph import SimpleGraph
from sweep_runner import SweepRunner

logger = logging.getLogger(__name__)

MAX_VERTICES = 7
DEGREES = (0, 1)

# Cochromatic classes with six vertices exhibited in the literature.
SIX_VERTEX_TARGETS = (
    IntPolynomial.from_descending([1, -10, 41, -84, 84, -32, 0]),
    IntPolynomial.from_descending([1, -10, 40, -80, 79, -30, 0]),
    IntPolynomial.from_descending([1, -11, 48, -103, 107, -42, 0]),
)


@dataclass
class MemberHomology:
    graph: SimpleGraph
    groups: Dict[str, str]

    def to_json(self) -> Dict[str, object]:
        return {"graph": self.graph.key(), "groups": self.groups}


@dataclass
class CochromaticClass:
    polynomial: IntPolynomial
    members: List[MemberHomology] = field(default_factory=list)

    @property
    def split(self) -> bool:
        return len({tuple(sorted(member.groups.items())) for member in self.members}) > 1

    def separating_gradings(self) -> List[str]:
        gradings = sorted({g for member in self.members for g in member.groups})
        return [
            g for g in gradings
            if len({member.groups.get(g, "0") for member in self.members}) > 1
        ]

    def to_json(self) -> Dict[str, object]:
        return {
            "polynomial": str(self.polynomial),
            "split": self.split,
            "separating_gradings": self.separating_gradings(),
            "members": [member.to_json() for member in self.members],
        }


@dataclass
class DistinguishReport:
    vertex_count: int
    m: int
    classes: List[CochromaticClass] = field(default_factory=list)
    targets_found: Dict[str, bool] = field(default_factory=dict)

    def split_classes(self) -> List[CochromaticClass]:
        return [c for c in self.classes if c.split]

    def to_json(self) -> Dict[str, object]:
        return {
            "v": self.vertex_count,
            "m": self.m,
            "cochromatic_classes": len(self.classes),
            "split_classes": [c.to_json() for c in self.split_classes()],
            "targets": self.targets_found,
        }


def _low_degree_homology(job: Tuple[SimpleGraph, int]) -> Dict[str, str]:
    graph, m = job
    h = chromatic_complex.homology(graph, m, degrees=DEGREES)
    return {f"H^{{{i},{j}}}": str(group) for (i, j), group in h.items()}


def cochromatic_classes(vertex_count: int) -> Dict[IntPolynomial, List[SimpleGraph]]:
    """Connected graphs on `vertex_count` vertices grouped by chromatic polynomial; singletons dropped."""
    grouped: Dict[IntPolynomial, List[SimpleGraph]] = {}
    for graph in connected_graphs(vertex_count):
        grouped.setdefault(chromatic_polynomial(graph), []).append(graph)
    return {p: graphs for p, graphs in grouped.items() if len(graphs) > 1}


def distinguish(vertex_count: int, m: int = 3, workers: int = 1, show_progress: bool = False,
                targets: Optional[Tuple[IntPolynomial, ...]] = None) -> DistinguishReport:
    if vertex_count > MAX_VERTICES:
        raise ResourceLimitError(f"distinguish enumerates at most {MAX_VERTICES} vertices, got {vertex_count}")
    if targets is None:
        targets = SIX_VERTEX_TARGETS if vertex_count == 6 else ()
    classes = cochromatic_classes(vertex_count)
    logger.info(f"v={vertex_count}: {len(classes)} cochromatic classes to compare over A_{m}")

    jobs = [(graph, m) for graphs in classes.values() for graph in graphs]
    runner: SweepRunner[Tuple[SimpleGraph, int], Dict[str, str]] = SweepRunner(workers, show_progress)
    computed = dict(runner.run(_low_degree_homology, jobs, key=lambda job: job[0].key(),
                               desc="Cochromatic homology"))

    report = DistinguishReport(vertex_count, m)
    for polynomial in sorted(classes, key=lambda p: p.descending()):
        members = [MemberHomology(graph, computed[graph.key()]) for graph in classes[polynomial]]
        report.classes.append(CochromaticClass(polynomial, members))
    for target in targets:
        found = next((c for c in report.classes if c.polynomial == target), None)
        report.targets_found[str(target)] = found is not None and found.split
    logger.info(
        f"v={vertex_count}, m={m}: {len(report.split_classes())} of {len(report.classes)} classes split"
    )
    return report
