"""
Closed forms for chromatic homology.

Everything here is evaluated from invariants or from already known homology,
never from a chain complex, so each function can be checked against
`chromatic_complex.homology`.

Over A_2 the homology of a connected graph lives on the diagonals i + j = v
("upper") and i + j = v - 1 ("lower"). Apart from the pair Z{v} + Z{v-1} at
i = 0 of a bipartite graph, it splits into knight-move triples
Z at (i, v-i), Z_2 at (i+1, v-i-1) and Z at (i+1, v-i-2).
"""
import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Sequence, Tuple

from bigraded_groups import ZERO, AbelianGroup, BigradedGroups, Grading
from chromatic_polynomial import cycle_polynomial, evaluate_at_qdim, to_q_basis
from graph_invariants import GraphInvariants
from homology_errors import HypothesisError, IntegrityError
from int_polynomial import IntPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyColumn:
    """The two A_2 groups in homological degree i."""
    i: int
    upper: AbelianGroup
    lower: AbelianGroup


def _z(rank: int) -> AbelianGroup:
    return AbelianGroup(rank)


def _z2(count: int) -> AbelianGroup:
    return AbelianGroup(0, ((2, count),)) if count else ZERO


def _require_connected(inv: GraphInvariants, minimum_vertices: int = 3):
    if inv.component_count != 1:
        raise HypothesisError(f"closed forms need a connected graph, got {inv.component_count} components")
    if inv.v < minimum_vertices:
        raise HypothesisError(f"closed form needs at least {minimum_vertices} vertices, got {inv.v}")


# --- Cycles ---

def cycle_homology(n: int, m: int = 2) -> BigradedGroups:
    """
    H_{A_m}(P_n). For i > 0 the groups come from Hochschild homology of A_m:
    Z_m at j = (n-i)m/2 when n - i is even, and Z at
    floor((n-i-1)/2) m + 1 <= j <= floor((n-i-1)/2) m + m - 1, both only for
    i < n - 1. Degree 0 is free and is recovered from the Euler characteristic
    P_{P_n}(1 + q + ... + q^(m-1)).
    """
    if n < 3:
        raise ValueError(f"cycle_homology needs n >= 3, got {n}")
    if m < 2:
        raise ValueError(f"cycle_homology needs m >= 2, got {m}")
    groups: Dict[Grading, AbelianGroup] = {}
    for i in range(1, n - 1):
        base = ((n - i - 1) // 2) * m
        for j in range(base + 1, base + m):
            groups[(i, j)] = groups.get((i, j), ZERO) + _z(1)
        if (n - i) % 2 == 0:
            j = (n - i) * m // 2
            groups[(i, j)] = groups.get((i, j), ZERO) + AbelianGroup(0, ((m, 1),))

    euler = evaluate_at_qdim(cycle_polynomial(n), m)
    for (i, j), group in groups.items():
        euler = euler - IntPolynomial.monomial(j, (-1) ** i * group.free, "q")
    for j, rank in euler.terms().items():
        if rank < 0:
            raise IntegrityError(f"negative rank {rank} for H^(0,{j}) of P{n} over A{m}")
        groups[(0, j)] = _z(rank)
    return BigradedGroups(groups, ("i", "j"))


# --- First gradings ---

def low_degree_groups(inv: GraphInvariants) -> List[HomologyColumn]:
    """A_2 homology in degrees 0, 1, 2 from bipartiteness, p_1 and t_3."""
    _require_connected(inv)
    p1, v = inv.p1, inv.v
    # Lower groups at i = 1, 2 mirror the torsion one diagonal up.
    if inv.bipartite:
        upper = [_z(1), _z(p1), _z(comb(p1, 2)) + _z2(p1)]
        lower = [_z(1), ZERO, _z(p1)]
    else:
        upper = [_z(1), _z(p1 - 1) + _z2(1), _z(comb(p1, 2) - inv.t3 + 1) + _z2(p1 - 1)]
        lower = [ZERO, _z(1), _z(p1 - 1)]
    columns = [HomologyColumn(i, upper[i], lower[i]) for i in range(3)]
    logger.debug(f"Low-degree groups for v={v}: {[(str(c.upper), str(c.lower)) for c in columns]}")
    return columns


def third_fourth_groups(inv: GraphInvariants) -> Tuple[int, int]:
    """
    (rank H^{3,v-3}, Z_2 exponent of H^{4,v-4}); the two numbers agree.

    The rank is rk H^{1,v-1} minus the q^(v-3) coefficient of P_G(1+q), which
    the leading chromatic coefficients express as
    -C(p1+1, 3) + t3 (p1-1) + t4 - 2 k4.
    """
    _require_connected(inv)
    p1 = inv.p1
    if inv.bipartite:
        value = p1 + comb(p1 + 1, 3) - inv.t4
    else:
        value = p1 + comb(p1 + 1, 3) - inv.t3 * (p1 - 1) - inv.t4 + 2 * inv.k4 - 1
    return value, value


# --- Reconstruction from the chromatic polynomial ---

def knight_move_counts(q_polynomial: IntPolynomial, v: int, bipartite: bool) -> List[int]:
    """
    Number k_i of knight-move triples starting at (i, v-i), for i = 0..v-3.

    With the bipartite pair removed, the q^(v-i) coefficient a_{v-i} equals
    (-1)^i (k_i - k_{i-2}), which is solved upward from the top degree.
    """
    remainder = q_polynomial
    if bipartite:
        remainder = remainder - IntPolynomial.monomial(v, 1, "q") - IntPolynomial.monomial(v - 1, 1, "q")
    if not remainder.is_zero() and (remainder.degree > v or remainder.lowest_degree < 0):
        raise IntegrityError(f"{q_polynomial} has terms outside degrees 0..{v}")
    counts: List[int] = []
    for i in range(v + 1):
        previous = counts[i - 2] if i >= 2 else 0
        k = previous + (-1) ** i * remainder.coefficient(v - i)
        if k < 0:
            raise IntegrityError(f"{q_polynomial} needs {k} knight moves at i={i}")
        counts.append(k)
    if any(counts[v - 2:]):
        raise IntegrityError(f"{q_polynomial} leaves knight moves past degree {v - 3}")
    return counts[:max(v - 2, 0)]


def _from_knight_moves(v: int, bipartite: bool, counts: Sequence[int]) -> BigradedGroups:
    groups: Dict[Grading, AbelianGroup] = {}

    def add(grading: Grading, group: AbelianGroup):
        groups[grading] = groups.get(grading, ZERO) + group

    if bipartite:
        add((0, v), _z(1))
        add((0, v - 1), _z(1))
    for i, k in enumerate(counts):
        if not k:
            continue
        add((i, v - i), _z(k))
        add((i + 1, v - i - 1), _z2(k))
        add((i + 1, v - i - 2), _z(k))
    return BigradedGroups(groups, ("i", "j"))


def reconstruct_A2_homology(q_polynomial: IntPolynomial, v: int, bipartite: bool) -> BigradedGroups:
    """Full A_2 homology of a connected graph from P_G(1+q)."""
    if q_polynomial.var != "q":
        q_polynomial = to_q_basis(q_polynomial)
    counts = knight_move_counts(q_polynomial, v, bipartite)
    return _from_knight_moves(v, bipartite, counts)


# --- Gluing ---

def _upper_diagonal(h: BigradedGroups, v: int) -> Dict[int, AbelianGroup]:
    if h.labels != ("i", "j"):
        raise HypothesisError(f"expected chromatic gradings, got {h.labels}")
    upper: Dict[int, AbelianGroup] = {}
    for (i, j), group in h.items():
        if i + j == v:
            upper[i] = group
        elif i + j != v - 1:
            raise HypothesisError(f"({i},{j}) is off the two A_2 diagonals for v={v}")
    return upper


def edge_glue_homology(h: BigradedGroups, inv: GraphInvariants, n: int) -> BigradedGroups:
    """
    H_{A_2}(G|P_n) from H_{A_2}(G).

    With S_t(i) = sum_{k=0..t} H^{i-k, v-i+k}(G), the upper diagonal of G|P_n is
      S_{n-2}(i)                          for i > n-2,
      Z^{E-v+2} + S_{i-2}(i)              for 1 <= i <= n-2, n-i odd, G bipartite,
      Z^{E-v+1} + Z_2 + S_{i-2}(i)        for the remaining 1 <= i <= n-2,
    and Z at i = 0. The lower diagonal follows from the knight-move pairing.
    """
    if n < 3:
        raise ValueError(f"edge gluing needs a cycle of length >= 3, got {n}")
    _require_connected(inv, minimum_vertices=2)
    upper = _upper_diagonal(h, inv.v)

    def window_sum(i: int, t: int) -> AbelianGroup:
        total = ZERO
        for k in range(t + 1):
            total = total + upper.get(i - k, ZERO)
        return total

    glued_v = inv.v + n - 2
    glued_bipartite = inv.bipartite and n % 2 == 0
    glued_upper: Dict[int, AbelianGroup] = {0: _z(1)}
    for i in range(1, glued_v - 1):
        if i > n - 2:
            glued_upper[i] = window_sum(i, n - 2)
        elif (n - i) % 2 == 1 and inv.bipartite:
            glued_upper[i] = _z(inv.E - inv.v + 2) + window_sum(i, i - 2)
        else:
            glued_upper[i] = _z(inv.E - inv.v + 1) + _z2(1) + window_sum(i, i - 2)

    counts = []
    for i in range(glued_v - 2):
        k = glued_upper.get(i, ZERO).free - (1 if glued_bipartite and i == 0 else 0)
        expected = glued_upper.get(i + 1, ZERO).torsion_multiplicity(2)
        if k != expected:
            raise IntegrityError(
                f"G|P{n}: {k} free generators at i={i} but Z_2^{expected} at i={i + 1}"
            )
        counts.append(k)
    return _from_knight_moves(glued_v, glued_bipartite, counts)


def vertex_glue_homology(h: BigradedGroups, inv: GraphInvariants, n: int) -> BigradedGroups:
    """H_{A_2}(G*P_n): the edge-glued homology moved up one quantum degree."""
    return edge_glue_homology(h, inv, n).shifted(0, 1)


def bridge_homology(h: BigradedGroups) -> BigradedGroups:
    """Expanding a cut vertex of G into a bridge shifts H_{A_2}(G) by {1}."""
    return h.shifted(0, 1)
