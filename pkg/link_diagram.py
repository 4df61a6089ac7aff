"""
Link diagrams given by planar diagram (PD) codes.

A crossing X[a, b, c, d] lists its four arc labels counterclockwise starting
from an end of the under-strand. The under-strand runs a -> c when oriented
as in KnotAtlas codes, and the crossing is positive when the over-strand then
runs d -> b.

Smoothing 0 (the positive resolution) joins a-b and c-d, smoothing 1 joins
a-d and b-c. A Kauffman state is a bit mask with bit k set when crossing k
takes smoothing 1.
"""
import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from homology_errors import GraphParseError, IntegrityError
from simple_graph import SimpleGraph, from_edges

logger = logging.getLogger(__name__)

_LINE_RE = re.compile(r"^X\s+(-?\d+)\s+(-?\d+)\s+(-?\d+)\s+(-?\d+)(?:\s+([+-]))?$")
_ATLAS_RE = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


@dataclass(frozen=True)
class Crossing:
    arcs: Tuple[int, int, int, int]
    sign: Optional[int] = None

    def __post_init__(self):
        if self.sign not in (None, 1, -1):
            raise ValueError(f"crossing sign must be +1, -1 or None, got {self.sign}")

    def smoothing_pairs(self, one: bool) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        a, b, c, d = self.arcs
        return ((a, d), (b, c)) if one else ((a, b), (c, d))


@dataclass(frozen=True)
class KauffmanState:
    """A smoothing of every crossing and the circles it produces (as arc-label tuples)."""
    mask: int
    crossing_count: int
    circles: Tuple[Tuple[int, ...], ...]
    free_circles: int = 0

    @property
    def circle_count(self) -> int:
        return len(self.circles) + self.free_circles

    @property
    def negative_smoothings(self) -> int:
        return bin(self.mask).count("1")

    @property
    def positive_smoothings(self) -> int:
        return self.crossing_count - self.negative_smoothings


class _ArcUnion:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


class LinkDiagram:
    """
    A validated PD code plus any split unknotted circles.

    Crossing signs are inferred by tracing the components; explicit signs on a
    crossing take precedence.
    """

    def __init__(self, crossings: Sequence[Crossing], free_circles: int = 0, name: str = ""):
        self.crossings: Tuple[Crossing, ...] = tuple(crossings)
        self.free_circles = free_circles
        self.name = name
        labels = sorted({arc for crossing in self.crossings for arc in crossing.arcs})
        counts: Dict[int, int] = {}
        for crossing in self.crossings:
            for arc in crossing.arcs:
                counts[arc] = counts.get(arc, 0) + 1
        wrong = {arc: count for arc, count in counts.items() if count != 2}
        if wrong:
            raise GraphParseError(f"every arc label must appear exactly twice; offending labels {wrong}")
        if not self.crossings and free_circles == 0:
            raise GraphParseError("a diagram needs at least one crossing or one free circle")
        self._arc_index = {arc: k for k, arc in enumerate(labels)}
        self.arc_labels: Tuple[int, ...] = tuple(labels)
        self._states: Dict[int, Tuple[Tuple[int, ...], int]] = {}
        self.signs: Tuple[int, ...] = self._resolve_signs()

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def c_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def c_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    # --- Orientation ---

    def _occurrences(self) -> Dict[int, List[Tuple[int, int]]]:
        found: Dict[int, List[Tuple[int, int]]] = {}
        for k, crossing in enumerate(self.crossings):
            for position, arc in enumerate(crossing.arcs):
                found.setdefault(arc, []).append((k, position))
        return found

    def trace_components(self) -> List[List[Tuple[int, int]]]:
        """
        Components as lists of (crossing, entry position). Each component starts
        at its first under-passage entered through position 0, so KnotAtlas
        codes keep their orientation; components that never pass under start
        through position 1.
        """
        occurrences = self._occurrences()
        visited = set()
        components: List[List[Tuple[int, int]]] = []
        starts = [(k, 0) for k in range(self.crossing_count)] + [(k, 1) for k in range(self.crossing_count)]
        for start in starts:
            if start in visited or (start[0], (start[1] + 2) % 4) in visited:
                continue
            route = []
            k, entry = start
            while True:
                visited.add((k, entry))
                visited.add((k, (entry + 2) % 4))
                route.append((k, entry))
                exit_position = (entry + 2) % 4
                arc = self.crossings[k].arcs[exit_position]
                first, second = occurrences[arc]
                k, entry = second if first == (k, exit_position) else first
                if (k, entry) == start:
                    break
            components.append(route)
        return components

    def _resolve_signs(self) -> Tuple[int, ...]:
        entries: Dict[Tuple[int, str], int] = {}
        for route in self.trace_components():
            for k, entry in route:
                entries[(k, "under" if entry in (0, 2) else "over")] = entry
        signs = []
        for k, crossing in enumerate(self.crossings):
            if crossing.sign is not None:
                signs.append(crossing.sign)
                continue
            under_forward = entries[(k, "under")] == 0
            over_forward = entries[(k, "over")] == 3
            signs.append(1 if under_forward == over_forward else -1)
        return tuple(signs)

    def component_count(self) -> int:
        return len(self.trace_components()) + self.free_circles

    # --- States ---

    def _state_partition(self, mask: int) -> Tuple[Tuple[int, ...], int]:
        """Circle index of every arc (by arc index) and the number of circles through crossings."""
        cached = self._states.get(mask)
        if cached is not None:
            return cached
        union = _ArcUnion(len(self.arc_labels))
        for k, crossing in enumerate(self.crossings):
            for x, y in crossing.smoothing_pairs(bool(mask >> k & 1)):
                union.union(self._arc_index[x], self._arc_index[y])
        circle_of_root: Dict[int, int] = {}
        circle_of = []
        for arc in range(len(self.arc_labels)):
            root = union.find(arc)
            if root not in circle_of_root:
                circle_of_root[root] = len(circle_of_root)
            circle_of.append(circle_of_root[root])
        result = (tuple(circle_of), len(circle_of_root))
        self._states[mask] = result
        return result

    def circle_of_arc(self, mask: int, arc: int) -> int:
        return self._state_partition(mask)[0][self._arc_index[arc]]

    def circle_count(self, mask: int) -> int:
        """Circles of the state, free circles included."""
        return self._state_partition(mask)[1] + self.free_circles

    def resolve(self, mask: int) -> KauffmanState:
        circle_of, count = self._state_partition(mask)
        circles: List[List[int]] = [[] for _ in range(count)]
        for arc, circle in zip(self.arc_labels, circle_of):
            circles[circle].append(arc)
        return KauffmanState(mask, self.crossing_count, tuple(tuple(c) for c in circles), self.free_circles)

    def state_graph(self, mask: int = 0) -> SimpleGraph:
        """
        One vertex per circle of the state and one edge per crossing joining two
        different circles; loops and repeated edges are dropped. The default
        all-zero state gives G_+.
        """
        circle_of, count = self._state_partition(mask)
        edges = []
        for k, crossing in enumerate(self.crossings):
            (x, _), (y, _) = crossing.smoothing_pairs(bool(mask >> k & 1))
            edges.append((circle_of[self._arc_index[x]], circle_of[self._arc_index[y]]))
        return from_edges(count + self.free_circles, edges)

    def state_multigraph_girth(self, mask: int = 0) -> int:
        """
        Girth of the state graph before simplification: 1 with a loop, 2 with
        two crossings joining the same pair of circles, else the simple girth.
        """
        circle_of, _ = self._state_partition(mask)
        seen = set()
        girth = 0
        for k, crossing in enumerate(self.crossings):
            (x, _), (y, _) = crossing.smoothing_pairs(bool(mask >> k & 1))
            first, second = circle_of[self._arc_index[x]], circle_of[self._arc_index[y]]
            if first == second:
                return 1
            pair = (min(first, second), max(first, second))
            if pair in seen:
                girth = 2
            seen.add(pair)
        if girth:
            return girth
        graph = self.state_graph(mask).to_networkx()
        value = nx.girth(graph)
        return 0 if value == float("inf") else int(value)

    def all_negative_state(self) -> int:
        return (1 << self.crossing_count) - 1

    def change_type(self, mask: int, k: int) -> str:
        """'merge' or 'split' for switching crossing k from smoothing 0 to 1."""
        a, b, c, _ = self.crossings[k].arcs
        target = mask | (1 << k)
        if self.circle_of_arc(mask, a) != self.circle_of_arc(mask, c):
            return "merge"
        if self.circle_of_arc(target, a) != self.circle_of_arc(target, b):
            return "split"
        raise IntegrityError(f"crossing {k} neither merges nor splits circles; the PD code is not planar")

    # --- Transformations and export ---

    def mirror(self) -> "LinkDiagram":
        """Swaps over and under at every crossing; explicit signs flip."""
        mirrored = [
            Crossing((b, c, d, a), None if crossing.sign is None else -crossing.sign)
            for crossing in self.crossings
            for a, b, c, d in [crossing.arcs]
        ]
        return LinkDiagram(mirrored, self.free_circles, f"mirror({self.name})" if self.name else "")

    def to_json(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "crossings": [list(crossing.arcs) for crossing in self.crossings],
            "signs": list(self.signs),
            "free_circles": self.free_circles,
        }

    def to_pd(self) -> str:
        lines = [f"# {self.name}"] if self.name else []
        for crossing, sign in zip(self.crossings, self.signs):
            a, b, c, d = crossing.arcs
            lines.append(f"X {a} {b} {c} {d} {'+' if sign > 0 else '-'}")
        lines.extend("O" for _ in range(self.free_circles))
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"LinkDiagram({self.name or 'unnamed'}, n={self.crossing_count}, c+={self.c_plus}, c-={self.c_minus})"


def parse_pd(text: str, name: str = "") -> LinkDiagram:
    """
    Reads one crossing per line as `X a b c d [+|-]`, `O` for a split unknotted
    circle, and `#` comments. Text in KnotAtlas form (`PD[X[1,4,2,5], ...]`) is
    accepted as well.
    """
    stripped = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    if any("[" in line for line in stripped):
        found = _ATLAS_RE.findall(text)
        if not found:
            raise GraphParseError("no X[a,b,c,d] tuples found in KnotAtlas-style input")
        crossings = [Crossing(tuple(int(x) for x in match)) for match in found]
        return LinkDiagram(crossings, 0, name)

    crossings: List[Crossing] = []
    free_circles = 0
    for number, line in enumerate(stripped, start=1):
        if not line:
            continue
        if line == "O":
            free_circles += 1
            continue
        match = _LINE_RE.match(line)
        if not match:
            raise GraphParseError(f"expected 'X a b c d [+|-]' or 'O', got {line!r}", number)
        arcs = tuple(int(match.group(k)) for k in range(1, 5))
        marker = match.group(5)
        sign = None if marker is None else (1 if marker == "+" else -1)
        crossings.append(Crossing(arcs, sign))
    diagram = LinkDiagram(crossings, free_circles, name)
    logger.debug(f"Parsed {diagram!r}")
    return diagram
