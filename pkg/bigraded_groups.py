import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from int_polynomial import IntPolynomial

logger = logging.getLogger(__name__)

Grading = Tuple[int, int]


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free ⊕ ⊕ (Z_order)^multiplicity, torsion kept as sorted (order, multiplicity) pairs."""
    free: int = 0
    torsion: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.free < 0:
            raise ValueError(f"free rank must be non-negative, got {self.free}")
        merged: Counter = Counter()
        for order, multiplicity in self.torsion:
            if order < 2:
                raise ValueError(f"torsion orders must be >= 2, got {order}")
            if multiplicity > 0:
                merged[order] += multiplicity
        object.__setattr__(self, "torsion", tuple(sorted(merged.items())))

    @classmethod
    def from_invariant_factors(cls, free: int, factors: Iterable[int]) -> "AbelianGroup":
        counts = Counter(abs(f) for f in factors if abs(f) > 1)
        return cls(free, tuple(counts.items()))

    def is_zero(self) -> bool:
        return self.free == 0 and not self.torsion

    def has_torsion(self) -> bool:
        return bool(self.torsion)

    def torsion_multiplicity(self, order: Optional[int] = None) -> int:
        """Number of cyclic torsion summands, optionally only those of a given order."""
        return sum(mult for o, mult in self.torsion if order is None or o == order)

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.free + other.free, self.torsion + other.torsion)

    def torsion_part(self) -> "AbelianGroup":
        return AbelianGroup(0, self.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free:
            parts.append("Z" if self.free == 1 else f"Z^{self.free}")
        for order, mult in self.torsion:
            parts.append(f"Z_{order}" if mult == 1 else f"Z_{order}^{mult}")
        return "+".join(parts) if parts else "0"


ZERO = AbelianGroup()


class BigradedGroups:
    """
    A finitely supported map (i, j) -> AbelianGroup.

    Zero groups are never stored. `labels` names the two gradings in JSON and
    tables: ("i", "j") for chromatic homology, ("p", "q") for Khovanov homology.
    """

    def __init__(self, groups: Optional[Mapping[Grading, AbelianGroup]] = None,
                 labels: Tuple[str, str] = ("i", "j")):
        self.labels = labels
        self._groups: Dict[Grading, AbelianGroup] = {}
        for grading, group in (groups or {}).items():
            if not group.is_zero():
                self._groups[(int(grading[0]), int(grading[1]))] = group

    # --- Access ---

    def get(self, i: int, j: int) -> AbelianGroup:
        return self._groups.get((i, j), ZERO)

    def __getitem__(self, grading: Grading) -> AbelianGroup:
        return self.get(*grading)

    def items(self) -> List[Tuple[Grading, AbelianGroup]]:
        return sorted(self._groups.items())

    def __iter__(self) -> Iterator[Grading]:
        return iter(sorted(self._groups))

    def __len__(self) -> int:
        return len(self._groups)

    def is_zero(self) -> bool:
        return not self._groups

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigradedGroups):
            return NotImplemented
        return self._groups == other._groups

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {g}" for (i, j), g in self.items())
        return f"BigradedGroups({{{body}}})"

    # --- Transformations ---

    def shifted(self, di: int = 0, dj: int = 0, labels: Optional[Tuple[str, str]] = None) -> "BigradedGroups":
        moved = {(i + di, j + dj): g for (i, j), g in self._groups.items()}
        return BigradedGroups(moved, labels or self.labels)

    def direct_sum(self, other: "BigradedGroups") -> "BigradedGroups":
        merged = dict(self._groups)
        for grading, group in other._groups.items():
            merged[grading] = merged.get(grading, ZERO) + group
        return BigradedGroups(merged, self.labels)

    def restricted(self, degrees: Optional[Tuple[int, int]] = None,
                   quantum: Optional[Tuple[int, int]] = None) -> "BigradedGroups":
        kept = {
            (i, j): g for (i, j), g in self._groups.items()
            if (degrees is None or degrees[0] <= i <= degrees[1])
            and (quantum is None or quantum[0] <= j <= quantum[1])
        }
        return BigradedGroups(kept, self.labels)

    def torsion_only(self) -> "BigradedGroups":
        return BigradedGroups({k: g.torsion_part() for k, g in self._groups.items()}, self.labels)

    # --- Derived quantities ---

    def degrees(self) -> List[int]:
        return sorted({i for i, _ in self._groups})

    def column(self, i: int) -> Dict[int, AbelianGroup]:
        return {j: g for (a, j), g in self.items() if a == i}

    def torsion_degrees(self) -> List[int]:
        return sorted({i for (i, _), g in self._groups.items() if g.has_torsion()})

    def torsion_orders(self) -> List[int]:
        return sorted({order for g in self._groups.values() for order, _ in g.torsion})

    def torsion_sequence(self, start: int, stop: int, order: Optional[int] = None) -> Tuple[int, ...]:
        """Torsion multiplicities summed over j, for homological degrees start..stop inclusive."""
        totals = Counter()
        for (i, _), g in self._groups.items():
            totals[i] += g.torsion_multiplicity(order)
        return tuple(totals[i] for i in range(start, stop + 1))

    def hspan(self) -> int:
        """Homological span i_max - i_min + 1 (0 when empty)."""
        degrees = self.degrees()
        return degrees[-1] - degrees[0] + 1 if degrees else 0

    def torsion_hspan(self) -> int:
        degrees = self.torsion_degrees()
        return degrees[-1] - degrees[0] + 1 if degrees else 0

    def diagonals(self, khovanov: bool = False, torsion: bool = False) -> List[int]:
        """Occupied diagonals: i + j for chromatic gradings, q - 2p for Khovanov gradings."""
        return sorted({
            (j - 2 * i) if khovanov else (i + j)
            for (i, j), g in self._groups.items()
            if not torsion or g.has_torsion()
        })

    def width(self, khovanov: bool = False, torsion: bool = False) -> int:
        """Homological width: chromatic diagonals are spaced by 1, Khovanov diagonals by 2."""
        values = self.diagonals(khovanov, torsion)
        if not values:
            return 0
        spread = values[-1] - values[0]
        return spread // 2 + 1 if khovanov else spread + 1

    def jmin(self) -> Optional[int]:
        return min((j for _, j in self._groups), default=None)

    def free_euler_characteristic(self, var: str = "q") -> IntPolynomial:
        """Σ (-1)^i rank H^{i,j} var^j."""
        terms: Dict[int, int] = {}
        for (i, j), g in self._groups.items():
            terms[j] = terms.get(j, 0) + (-1) ** i * g.free
        return IntPolynomial.from_terms(terms, var)

    # --- Serialization ---

    def to_json(self) -> Dict[str, object]:
        first, second = self.labels
        return {
            "groups": [
                {
                    first: i,
                    second: j,
                    "free": g.free,
                    "torsion": [[str(order), mult] for order, mult in g.torsion],
                }
                for (i, j), g in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object], labels: Optional[Tuple[str, str]] = None) -> "BigradedGroups":
        entries: Sequence[Mapping[str, object]] = data.get("groups", [])  # type: ignore[assignment]
        if labels is None:
            labels = ("p", "q") if entries and "p" in entries[0] else ("i", "j")
        first, second = labels
        groups = {}
        for entry in entries:
            torsion = tuple((int(order), int(mult)) for order, mult in entry.get("torsion", []))
            groups[(int(entry[first]), int(entry[second]))] = AbelianGroup(int(entry["free"]), torsion)
        return cls(groups, labels)
