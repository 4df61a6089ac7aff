import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import List, Mapping, Tuple

from bigraded_groups import BigradedGroups
from chromatic_polynomial import chromatic_polynomial, to_q_basis
from graph_invariants import GraphInvariants
from homology_errors import HypothesisError
from int_polynomial import IntPolynomial
from simple_graph import SimpleGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpanBounds:
    """Span and width values determined by v, b and the girth of a connected graph."""
    v: int
    hspan: int
    kh_torsion_bound: int
    girth_lower_bound: int

    def width(self, m: int) -> int:
        """Homological width of H_{A_m}: (m-2)v + 2."""
        if m < 2:
            raise ValueError(f"m must be >= 2, got {m}")
        return (m - 2) * self.v + 2


def kh_torsion_bound(inv: GraphInvariants) -> int:
    """
    Lower bound on the homological span of Khovanov torsion of a diagram whose
    all-positive state graph has these invariants.

    Torsion starts at i = 1 (odd cycle) or i = 2 (bipartite) and is visible in
    Khovanov homology up to i = min(girth, v - b - 1).
    """
    if inv.girth == 0:
        return 0
    last = inv.v - inv.b - 1
    odd_shift = 0 if not inv.bipartite else 1
    if inv.girth >= last:
        return max(last - odd_shift, 0)
    return inv.girth - odd_shift


def span_bounds(inv: GraphInvariants) -> SpanBounds:
    if inv.component_count != 1:
        raise HypothesisError("span bounds are stated for connected graphs")
    return SpanBounds(
        v=inv.v,
        hspan=inv.v - inv.b,
        kh_torsion_bound=kh_torsion_bound(inv),
        girth_lower_bound=max(inv.girth - 1, 0),
    )


def blockbound(inv: GraphInvariants, cycle_length: int) -> bool:
    """A connected graph containing a cycle of the given length has b <= v - length + 1."""
    return inv.b <= inv.v - cycle_length + 1


def outerplanar_hspan(induced_cycles: Mapping[int, int]) -> int:
    """hspan of H_{A_2} for a connected outerplanar graph: sum r_k (k - 2) + 1."""
    return sum(count * (length - 2) for length, count in induced_cycles.items()) + 1


def pretzel_torsion_bound(*parameters: int) -> int:
    """Lower bound on hspan of Khovanov torsion of the pretzel link (-a_1, ..., -a_n)."""
    if len(parameters) < 2:
        raise ValueError("a pretzel link needs at least two parameters")
    sums = [a + b for a, b in combinations(parameters, 2)]
    smallest = min(sums)
    return smallest - 1 if all(s % 2 == 0 for s in sums) else smallest


# --- A_m cycles ---

def cycle_torsion_width(n: int, m: int) -> int:
    """Number of diagonals i + j carrying torsion in H_{A_m}(P_n), m > 2."""
    if m <= 2:
        raise HypothesisError("the cycle torsion width formula needs m > 2")
    if n < 3:
        raise ValueError(f"cycles have length >= 3, got {n}")
    if n % 2 == 0:
        return m * n // 2 - 2 * m - n + 5
    return (m * n - 3 * m) // 2 - n + 4


def cycle_torsion_diagonals(n: int, m: int) -> int:
    """Number of Z_m groups in H_{A_m}(P_n) for m > 2, one per diagonal."""
    if m <= 2:
        raise HypothesisError("torsion groups of A_2 cycles share a diagonal")
    return -(-(n - 2) // 2)


# --- Tail ---

def tail_from_polynomial(q_polynomial: IntPolynomial) -> int:
    """Copies of Tl_2 in the tail: |lowest coefficient of P_G(1+q)|."""
    if q_polynomial.var != "q":
        q_polynomial = to_q_basis(q_polynomial)
    return abs(q_polynomial.coefficient(q_polynomial.lowest_degree))


def tail(graph: SimpleGraph) -> int:
    return tail_from_polynomial(to_q_basis(chromatic_polynomial(graph)))


# --- Density of torsion ---

@dataclass(frozen=True)
class DensityReport:
    dense: bool
    gaps: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)


def density_and_gaps(h: BigradedGroups, inv: GraphInvariants) -> DensityReport:
    """
    Torsion is dense when every degree 2 <= i <= v - b - 1 has torsion. A gap of
    length g at i means torsion at i - 1 and i + g and none in between.
    """
    with_torsion = set(h.torsion_degrees())
    last = inv.v - inv.b - 1
    dense = all(i in with_torsion for i in range(2, last + 1))
    gaps: List[Tuple[int, int]] = []
    ordered = sorted(with_torsion)
    for before, after in zip(ordered, ordered[1:]):
        if after - before > 1:
            gaps.append((before + 1, after - before - 1))
    logger.debug(f"Torsion degrees {ordered}, dense={dense}, gaps={gaps}")
    return DensityReport(dense, tuple(gaps))


# --- Jones coefficients ---

def jones_coefficients(inv: GraphInvariants) -> Tuple[int, int, int, int]:
    """
    First four coefficients (a, b, c, d) of the normalized Jones polynomial of a
    thin link whose all-positive state graph has girth >= 4:
    (1, -p1, C(p1+1, 2), -C(p1+2, 3) + t4).
    """
    if inv.girth < 4:
        raise HypothesisError(f"Jones coefficient formula needs girth >= 4, got {inv.girth}")
    p1 = inv.p1
    return 1, -p1, comb(p1 + 1, 2), -comb(p1 + 2, 3) + inv.t4
