"""
Compares A_2 chromatic homology of the all-positive state graph G_+ of a
diagram with the Khovanov homology of the diagram.

With v vertices and girth l of G_+, H^{i,j}(G_+) and Kh^{p,q} with
p = i - c_-, q = v - 2j + c_+ - 2c_- agree for 0 <= i < l, and their torsion
agrees at i = l.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import chromatic_complex
from bigraded_groups import ZERO, AbelianGroup, BigradedGroups
from graph_bounds import kh_torsion_bound
from graph_invariants import compute_invariants
from khovanov_complex import DEFAULT_MAX_CROSSINGS, khovanov_homology
from link_diagram import LinkDiagram

logger = logging.getLogger(__name__)

OFFSET_SEARCH_P = 2
OFFSET_SEARCH_Q = 4


@dataclass(frozen=True)
class ComparedPair:
    i: int
    j: Optional[int]
    p: int
    q: int
    chromatic: AbelianGroup
    khovanov: AbelianGroup
    torsion_only: bool

    @property
    def match(self) -> bool:
        if self.torsion_only:
            return self.chromatic.torsion_part() == self.khovanov.torsion_part()
        return self.chromatic == self.khovanov

    def to_json(self) -> Dict[str, object]:
        return {
            "i": self.i, "j": self.j, "p": self.p, "q": self.q,
            "chromatic": str(self.chromatic), "khovanov": str(self.khovanov),
            "torsion_only": self.torsion_only, "match": self.match,
        }


@dataclass
class CorrespondenceReport:
    diagram: str
    v: int
    girth: int
    c_plus: int
    c_minus: int
    pairs: List[ComparedPair] = field(default_factory=list)
    offset: Tuple[int, int] = (0, 0)
    offset_score: int = 0

    @property
    def vacuous(self) -> bool:
        return self.girth == 0

    @property
    def holds(self) -> bool:
        return not self.vacuous and all(pair.match for pair in self.pairs)

    def mismatches(self) -> List[ComparedPair]:
        return [pair for pair in self.pairs if not pair.match]

    def to_json(self) -> Dict[str, object]:
        return {
            "diagram": self.diagram,
            "v": self.v,
            "girth": self.girth,
            "c_plus": self.c_plus,
            "c_minus": self.c_minus,
            "vacuous": self.vacuous,
            "holds": self.holds,
            "best_offset": list(self.offset),
            "best_offset_score": self.offset_score,
            "pairs": [pair.to_json() for pair in self.pairs],
        }


def _khovanov_grading(i: int, j: int, v: int, c_plus: int, c_minus: int) -> Tuple[int, int]:
    return i - c_minus, v - 2 * j + c_plus - 2 * c_minus


def _compare(chromatic: BigradedGroups, khovanov: BigradedGroups, v: int, girth: int,
             c_plus: int, c_minus: int, dp: int = 0, dq: int = 0) -> List[ComparedPair]:
    pairs: List[ComparedPair] = []
    for i in range(girth + 1):
        p = i - c_minus + dp
        cells = {_khovanov_grading(i, j, v, c_plus, c_minus)[1] + dq: j for j in chromatic.column(i)}
        for q in khovanov.column(p):
            if q not in cells:
                twice_j = v + c_plus - 2 * c_minus - (q - dq)
                # odd parity leaves the Kh group without a chromatic partner
                cells[q] = twice_j // 2 if twice_j % 2 == 0 else None
        for q, j in sorted(cells.items(), key=lambda cell: -cell[0]):
            chromatic_group = chromatic.get(i, j) if j is not None else ZERO
            pairs.append(ComparedPair(i, j, p, q, chromatic_group, khovanov.get(p, q), torsion_only=(i == girth)))
    return pairs


def _score(pairs: List[ComparedPair]) -> int:
    return sum(1 if pair.match else -1 for pair in pairs)


def correspondence_check(diagram: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS,
                         num_workers: int = 1, khovanov: Optional[BigradedGroups] = None) -> CorrespondenceReport:
    """Compares the two homologies in degrees 0..girth and searches a global offset."""
    graph = diagram.state_graph(0)
    inv = compute_invariants(graph)
    girth = diagram.state_multigraph_girth(0)
    report = CorrespondenceReport(diagram.name, inv.v, girth, diagram.c_plus, diagram.c_minus)
    if report.vacuous:
        logger.warning(f"G_+ of {diagram!r} is a forest; the correspondence is vacuous")
        return report

    c_plus, c_minus = diagram.c_plus, diagram.c_minus
    if girth == 1:
        # a loop in G_+ makes the chromatic complex acyclic
        chromatic = BigradedGroups()
    else:
        chromatic = chromatic_complex.homology(graph, 2, degrees=(0, girth), num_workers=num_workers)
    if khovanov is None:
        window = (-c_minus - OFFSET_SEARCH_P, girth - c_minus + OFFSET_SEARCH_P)
        khovanov = khovanov_homology(diagram, degrees=window, max_crossings=max_crossings,
                                     num_workers=num_workers)
    report.pairs = _compare(chromatic, khovanov, inv.v, girth, c_plus, c_minus)

    best = (_score(report.pairs), 0, 0)
    for dp in range(-OFFSET_SEARCH_P, OFFSET_SEARCH_P + 1):
        for dq in range(-OFFSET_SEARCH_Q, OFFSET_SEARCH_Q + 1):
            if (dp, dq) == (0, 0):
                continue
            shifted = _compare(chromatic, khovanov, inv.v, girth, c_plus, c_minus, dp, dq)
            score = _score(shifted)
            if score > best[0]:
                best = (score, dp, dq)
    report.offset_score, report.offset = best[0], (best[1], best[2])
    if report.offset != (0, 0):
        logger.warning(f"Best grading offset for {diagram!r} is {report.offset}, not zero")
    logger.info(
        f"Correspondence for {diagram!r}: {len(report.pairs)} pairs, "
        f"{len(report.mismatches())} mismatches, holds={report.holds}"
    )
    return report


@dataclass(frozen=True)
class SandwichObservation:
    """Span of Kh, span of its torsion, and the torsion bounds from G_+ and G_-."""
    hspan: int
    torsion_hspan: int
    positive_bound: int
    negative_bound: int

    @property
    def difference(self) -> int:
        return self.hspan - self.torsion_hspan

    @property
    def within_two_and_four(self) -> bool:
        return 2 <= self.difference <= 4

    def to_json(self) -> Dict[str, object]:
        return {
            "hspan": self.hspan,
            "torsion_hspan": self.torsion_hspan,
            "difference": self.difference,
            "positive_bound": self.positive_bound,
            "negative_bound": self.negative_bound,
            "bound_sum": self.positive_bound + self.negative_bound,
            "within_two_and_four": self.within_two_and_four,
        }


def kh_torsion_sandwich(diagram: LinkDiagram, khovanov: Optional[BigradedGroups] = None,
                        max_crossings: int = DEFAULT_MAX_CROSSINGS) -> SandwichObservation:
    """Observation only: the 2 <= hspan - hspan^t <= 4 window fails on some alternating knots."""
    if khovanov is None:
        khovanov = khovanov_homology(diagram, max_crossings=max_crossings)
    positive = compute_invariants(diagram.state_graph(0))
    negative = compute_invariants(diagram.state_graph(diagram.all_negative_state()))
    observation = SandwichObservation(
        khovanov.hspan(),
        khovanov.torsion_hspan(),
        kh_torsion_bound(positive),
        kh_torsion_bound(negative),
    )
    logger.debug(f"Torsion sandwich for {diagram!r}: {observation.to_json()}")
    return observation
