"""
Torsion patterns of A_2 chromatic homology for two cycles glued along one or two
edges, and the Khovanov torsion they predict for 3-strand pretzel and rational
links whose all-positive state graph is such a multibridge graph.

A pattern lists the Z_2 exponents on the upper diagonal i + j = v starting at
`start_i`; degrees outside the pattern carry no torsion.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from homology_errors import HypothesisError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TorsionPattern:
    exponents: Tuple[int, ...] = ()
    start_i: int = 1

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(x) for x in self.exponents))
        if any(x < 0 for x in self.exponents):
            raise ValueError(f"torsion exponents must be non-negative: {self.exponents}")

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __add__(self, other: "TorsionPattern") -> "TorsionPattern":
        """Concatenation; the left operand fixes the starting degree."""
        return TorsionPattern(self.exponents + tuple(other), self.start_i)

    @property
    def stop_i(self) -> int:
        """Last degree covered by the pattern."""
        return self.start_i + len(self.exponents) - 1

    def reversed(self) -> "TorsionPattern":
        return TorsionPattern(tuple(reversed(self.exponents)), self.start_i)

    def drop_last(self) -> "TorsionPattern":
        return TorsionPattern(self.exponents[:-1], self.start_i)

    def starting_at(self, start_i: int) -> "TorsionPattern":
        return TorsionPattern(self.exponents, start_i)

    def at(self, i: int) -> int:
        k = i - self.start_i
        return self.exponents[k] if 0 <= k < len(self.exponents) else 0

    def by_degree(self) -> Dict[int, int]:
        return {self.start_i + k: x for k, x in enumerate(self.exponents)}

    def window(self, start: int, stop: int) -> Tuple[int, ...]:
        return tuple(self.at(i) for i in range(start, stop + 1))


def _sequence(values: Iterable[int]) -> TorsionPattern:
    return TorsionPattern(tuple(values))


def C(p: int) -> TorsionPattern:
    """(1, 1, 2, 2, ..., p, p)"""
    if p < 0:
        raise ValueError(f"C_p needs p >= 0, got {p}")
    return _sequence(k for k in range(1, p + 1) for _ in range(2))


def A(p: int) -> TorsionPattern:
    """(2, 1, 3, 2, ..., p, p-1)"""
    if p < 0:
        raise ValueError(f"A_p needs p >= 0, got {p}")
    return _sequence(x for k in range(1, p) for x in (k + 1, k))


def const(value: int, length: int) -> TorsionPattern:
    if length < 0:
        raise ValueError(f"negative pattern length {length}")
    return _sequence([value] * length)


def concat(*parts: TorsionPattern) -> TorsionPattern:
    result = TorsionPattern()
    for part in parts:
        result = result + part
    return result


def _half(length: int) -> int:
    return length // 2


def two_cycle_torsion(s: int, t: int, glue_edges: int = 1) -> TorsionPattern:
    """
    Z_2 exponents of H_{A_2}(P_s |^k P_t) for k = glue_edges in {1, 2}.

    Writing the odd lengths as 2n+1 and the even ones as 2m (n, m per cycle) and
    M for the smaller half-length, the cases are:

      odd | odd:             C_{M-1} . (M)^{2|m-n|+2} . rev(C_{M-1})
      odd 2n+1 | even 2m:    C_{M-1} . (M)^{2|m-n|+1} . rev(C_{M-1})     (n <= m)
                             C_{M-1} . M . (M-1, M)^{|m-n|} . rev(C_{M-1}) (n > m)
      even | even:           A_{M-1} . M . (M-1, M)^{|m-n|} . rev(C_{M-1})

    Gluing along two edges drops the last element of the trailing reversed block.
    Bipartite graphs have no torsion at i = 1, so the even | even pattern starts
    at i = 2.
    """
    if glue_edges not in (1, 2):
        raise ValueError(f"glue_edges must be 1 or 2, got {glue_edges}")
    minimum = 3 if glue_edges == 1 else 4
    if s < minimum or t < minimum:
        raise ValueError(f"cycle lengths must be >= {minimum} when gluing along {glue_edges} edge(s), got {s}, {t}")

    odd = sorted(x for x in (s, t) if x % 2)
    even = sorted(x for x in (s, t) if not x % 2)

    def tail(M: int) -> TorsionPattern:
        closing = C(M - 1).reversed()
        return closing if glue_edges == 1 else closing.drop_last()

    if len(odd) == 2:
        n, m = _half(odd[0]), _half(odd[1])
        M = min(n, m)
        pattern = concat(C(M - 1), const(M, 2 * abs(m - n) + 2), tail(M))
    elif len(odd) == 1:
        n, m = _half(odd[0]), _half(even[0])
        M = min(n, m)
        if n <= m:
            pattern = concat(C(M - 1), const(M, 2 * abs(m - n) + 1), tail(M))
        else:
            alternating = _sequence(x for _ in range(abs(m - n)) for x in (M - 1, M))
            pattern = concat(C(M - 1), const(M, 1), alternating, tail(M))
    else:
        n, m = _half(even[0]), _half(even[1])
        M = min(n, m)
        alternating = _sequence(x for _ in range(abs(m - n)) for x in (M - 1, M))
        pattern = concat(A(M - 1), const(M, 1), alternating, tail(M)).starting_at(2)
    logger.debug(f"Torsion pattern of P{s}|^{glue_edges}P{t}: {pattern.exponents} from i={pattern.start_i}")
    return pattern


def pretzel_torsion(a1: int, a2: int, a3: int) -> TorsionPattern:
    """
    Torsion pattern of the alternating pretzel link (-a1, -a2, -a3) in the range
    where it agrees with H_{A_2}(theta(a1, a2, a3)).

    The middle parameter must be 2. With odd outer parameters written 2n-1 and
    even ones 2m-2 (M the smaller of n, m):

      odd, odd, n != m:   C_{M-1} . (M, M, M)
      odd, odd, n == m:   C_{M-1} . (M, M, M-1)
      odd 2n-1, even 2m-2: C_{M-1} . (M, M, M) if n < m, else C_{M-1} . (M, M-1)
      even, even:         A_{M-1} . (M, M-1), starting at i = 2
    """
    if a2 != 2:
        raise HypothesisError(f"pretzel torsion patterns need a middle parameter of 2, got {a2}")
    if min(a1, a3) < 2:
        raise HypothesisError(f"pretzel parameters must be >= 2, got ({a1}, {a2}, {a3})")
    odd = sorted(a for a in (a1, a3) if a % 2)
    even = sorted(a for a in (a1, a3) if not a % 2)
    if len(odd) == 2:
        n, m = (odd[0] + 1) // 2, (odd[1] + 1) // 2
        M = min(n, m)
        ending = (M, M, M) if n != m else (M, M, M - 1)
        return C(M - 1) + _sequence(ending)
    if len(odd) == 1:
        n, m = (odd[0] + 1) // 2, (even[0] + 2) // 2
        M = min(n, m)
        ending = (M, M, M) if n < m else (M, M - 1)
        return C(M - 1) + _sequence(ending)
    n, m = (even[0] + 2) // 2, (even[1] + 2) // 2
    M = min(n, m)
    return (A(M - 1) + _sequence((M, M - 1))).starting_at(2)


def rational_torsion(p: int, q: int) -> TorsionPattern:
    """
    Torsion pattern of the rational link with Conway notation -P Q, whose
    all-positive state graph is P_P | P_Q = theta(P-1, 1, Q-1).

    Odd lengths are written 2n+1 and even ones 2m; the cases mirror
    `pretzel_torsion` with the cycle lengths in place of the pretzel parameters.
    """
    if min(p, q) < 3:
        raise HypothesisError(f"rational torsion patterns need P, Q >= 3, got ({p}, {q})")
    odd = sorted(x for x in (p, q) if x % 2)
    even = sorted(x for x in (p, q) if not x % 2)
    if len(odd) == 2:
        n, m = _half(odd[0]), _half(odd[1])
        M = min(n, m)
        ending = (M, M, M) if n != m else (M, M, M - 1)
        return C(M - 1) + _sequence(ending)
    if len(odd) == 1:
        n, m = _half(odd[0]), _half(even[0])
        M = min(n, m)
        ending = (M, M, M) if n < m else (M, M - 1)
        return C(M - 1) + _sequence(ending)
    n, m = _half(even[0]), _half(even[1])
    M = min(n, m)
    return (A(M - 1) + _sequence((M, M - 1))).starting_at(2)


def khovanov_torsion_gradings(pattern: TorsionPattern, v: int, c_minus: int,
                              c_plus: int) -> Dict[Tuple[int, int], int]:
    """
    Places the Z_2 exponents of a chromatic pattern in Khovanov gradings.

    Torsion at chromatic (i, v - i) corresponds to Kh^{p, q} with p = i - c_-
    and q = v - 2j + c_+ - 2c_-.
    """
    placed = {}
    for i, exponent in pattern.by_degree().items():
        j = v - i
        placed[(i - c_minus, v - 2 * j + c_plus - 2 * c_minus)] = exponent
    return placed
