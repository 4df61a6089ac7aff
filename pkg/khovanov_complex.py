"""
Khovanov homology of a link diagram over Z.

Every circle of a Kauffman state carries 1 (degree +1) or x (degree -1). The
raw quantum degree of a generator is the sum of its label degrees plus the
number of 1-smoothings; the homology is reported after the shift
[-c_-]{c_+ - 2c_-}, i.e. p = i - c_- and q = j + c_+ - 2c_-.
"""
import logging
import os
from collections import Counter
from itertools import combinations
from typing import Dict, Iterator, List, Tuple

from sympy import ZZ, Poly, Symbol

from base_cube_complex import BaseCubeComplex, Window
from bigraded_groups import BigradedGroups
from homology_errors import ResourceLimitError
from int_polynomial import IntPolynomial
from link_diagram import LinkDiagram

logger = logging.getLogger(__name__)

DEFAULT_MAX_CROSSINGS = int(os.getenv("CHROMKH_MAX_CROSSINGS", "16"))

_Q = Symbol("q")
_CIRCLE = Poly(_Q ** 2 + 1, _Q, domain=ZZ)

ONE, X = 0, 1
# (state mask, label per circle through crossings); free circles are appended after those
Enhancement = Tuple[int, Tuple[int, ...]]


def _mask(indices: Tuple[int, ...]) -> int:
    mask = 0
    for k in indices:
        mask |= 1 << k
    return mask


def _labellings(circles: int, x_count: int) -> Iterator[Tuple[int, ...]]:
    for positions in combinations(range(circles), x_count):
        labels = [ONE] * circles
        for k in positions:
            labels[k] = X
        yield tuple(labels)


class KhovanovComplex(BaseCubeComplex):
    """The Khovanov cube of a diagram in unshifted gradings (i, j)."""

    def __init__(self, diagram: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS, **kwargs):
        if diagram.crossing_count > max_crossings:
            raise ResourceLimitError(
                f"diagram has {diagram.crossing_count} crossings, limit is {max_crossings}"
            )
        super().__init__(**kwargs)
        self.diagram = diagram

    @property
    def cube_dimension(self) -> int:
        return self.diagram.crossing_count

    def to_raw_windows(self, degrees: Window, quantum: Window) -> Tuple[Window, Window]:
        c_plus, c_minus = self.diagram.c_plus, self.diagram.c_minus
        raw_degrees = None if degrees is None else (degrees[0] + c_minus, degrees[1] + c_minus)
        shift = c_plus - 2 * c_minus
        raw_quantum = None if quantum is None else (quantum[0] - shift, quantum[1] - shift)
        return raw_degrees, raw_quantum

    def gradings(self, degrees: Window = None, quantum: Window = None) -> List[Tuple[int, int]]:
        circle_counts: Dict[int, set] = {}
        for mask in range(1 << self.cube_dimension):
            i = bin(mask).count("1")
            if degrees is not None and not degrees[0] <= i <= degrees[1]:
                continue
            circle_counts.setdefault(i, set()).add(self.diagram.circle_count(mask))
        found = set()
        for i, counts in circle_counts.items():
            for k in counts:
                for j in range(i - k, i + k + 1, 2):
                    if quantum is None or quantum[0] <= j <= quantum[1]:
                        found.add((i, j))
        return sorted(found)

    def _generate_basis(self, i: int, j: int) -> Iterator[Enhancement]:
        for subset in combinations(range(self.cube_dimension), i):
            mask = _mask(subset)
            k = self.diagram.circle_count(mask)
            twice_x = k + i - j
            if twice_x % 2 or not 0 <= twice_x // 2 <= k:
                continue
            for labels in _labellings(k, twice_x // 2):
                yield mask, labels

    def _boundary(self, generator: Enhancement) -> Iterator[Tuple[Enhancement, int]]:
        mask, labels = generator
        diagram = self.diagram
        through = diagram.circle_count(mask) - diagram.free_circles
        free_labels = labels[through:]
        for k, crossing in enumerate(diagram.crossings):
            bit = 1 << k
            if mask & bit:
                continue
            sign = -1 if bin(mask & (bit - 1)).count("1") % 2 else 1
            target = mask | bit
            a, b, c, _ = crossing.arcs
            target_through = diagram.circle_count(target) - diagram.free_circles
            base = [None] * target_through
            # circles away from crossing k carry their labels across
            for arc in diagram.arc_labels:
                source_circle = diagram.circle_of_arc(mask, arc)
                target_circle = diagram.circle_of_arc(target, arc)
                if base[target_circle] is None:
                    base[target_circle] = labels[source_circle]

            if diagram.change_type(mask, k) == "merge":
                first = labels[diagram.circle_of_arc(mask, a)]
                second = labels[diagram.circle_of_arc(mask, c)]
                if first == X and second == X:
                    continue
                base[diagram.circle_of_arc(target, a)] = X if X in (first, second) else ONE
                yield (target, tuple(base) + free_labels), sign
            else:
                label = labels[diagram.circle_of_arc(mask, a)]
                left, right = diagram.circle_of_arc(target, a), diagram.circle_of_arc(target, b)
                pairs = [(X, X)] if label == X else [(ONE, X), (X, ONE)]
                for left_label, right_label in pairs:
                    image = list(base)
                    image[left], image[right] = left_label, right_label
                    yield (target, tuple(image) + free_labels), sign


def khovanov_homology(diagram: LinkDiagram, degrees: Window = None, quantum: Window = None,
                      max_crossings: int = DEFAULT_MAX_CROSSINGS, num_workers: int = 1,
                      show_progress: bool = False) -> BigradedGroups:
    """Kh^{p,q} of the diagram, optionally clipped to windows given in (p, q)."""
    complex_ = KhovanovComplex(diagram, max_crossings=max_crossings, num_workers=num_workers,
                               show_progress=show_progress)
    raw_degrees, raw_quantum = complex_.to_raw_windows(degrees, quantum)
    raw = complex_.homology(raw_degrees, raw_quantum)
    c_plus, c_minus = diagram.c_plus, diagram.c_minus
    result = raw.shifted(-c_minus, c_plus - 2 * c_minus, labels=("p", "q"))
    logger.info(f"Kh of {diagram!r}: {len(result)} nonzero groups, torsion in p={result.torsion_degrees()}")
    return result


def _circle_factor(k: int) -> IntPolynomial:
    """(q + q^{-1})^k"""
    return IntPolynomial.from_poly(_CIRCLE ** k, -k)


def jones_polynomial(diagram: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> IntPolynomial:
    """
    Unnormalized Jones polynomial by the Kauffman state sum
    (-1)^{c_-} q^{c_+ - 2c_-} sum_s (-1)^{r(s)} q^{r(s)} (q + q^{-1})^{k(s)}.
    """
    if diagram.crossing_count > max_crossings:
        raise ResourceLimitError(f"diagram has {diagram.crossing_count} crossings, limit is {max_crossings}")
    states = Counter()
    for mask in range(1 << diagram.crossing_count):
        states[bin(mask).count("1"), diagram.circle_count(mask)] += 1
    # q^r (q + q^{-1})^k = q^{r-k} (q^2 + 1)^k, summed over q^{-offset}
    offset = max(k for _, k in states)
    total = Poly(0, _Q, domain=ZZ)
    for (r, k), count in states.items():
        total += _CIRCLE ** k * Poly(_Q ** (r + offset - k), _Q, domain=ZZ) * ((-1) ** r * count)
    c_plus, c_minus = diagram.c_plus, diagram.c_minus
    return IntPolynomial.from_poly(total, c_plus - 2 * c_minus - offset) * (-1) ** c_minus


def normalized_jones(diagram: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> IntPolynomial:
    """Jones polynomial divided by q + q^{-1}, the value of the unknot."""
    return jones_polynomial(diagram, max_crossings).divide_exact(_circle_factor(1))


def quantum_euler_characteristic(groups: BigradedGroups) -> IntPolynomial:
    """sum (-1)^p rank Kh^{p,q} q^q"""
    return groups.free_euler_characteristic("q")
