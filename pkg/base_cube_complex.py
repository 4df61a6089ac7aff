import logging
from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from bigraded_groups import AbelianGroup, BigradedGroups, Grading
from homology_errors import IntegrityError
from smith_reducer import ReductionResult, reduce_rows

logger = logging.getLogger(__name__)

Window = Optional[Tuple[int, int]]


@dataclass(frozen=True)
class GradedChainSlice:
    """
    The chain group C^{i,j} with its outgoing differential.

    `d_out[k]` maps target indices in C^{i+1,j} to the coefficient of the image of
    basis element k, so the rows of `d_out` are the columns of the matrix of d^i.
    """
    i: int
    j: int
    basis: Tuple[Hashable, ...]
    d_out: Tuple[Dict[int, int], ...]
    target_size: int

    def __len__(self) -> int:
        return len(self.basis)

    def matrix(self) -> List[List[int]]:
        """Dense matrix of d^i: one row per target generator, one column per source generator."""
        dense = [[0] * len(self.basis) for _ in range(self.target_size)]
        for column, image in enumerate(self.d_out):
            for row, value in image.items():
                dense[row][column] = value
        return dense


class BaseCubeComplex(ABC):
    """
    Abstract cube-of-resolutions complex. Implements the Template Method pattern:
    subclasses enumerate generators per bigrading and describe the differential
    on one generator; this class builds sparse slices, reduces the differentials
    on a process pool and assembles the homology.
    """

    def __init__(self, num_workers: int = 1, check_square_zero: bool = True, show_progress: bool = False):
        self.num_workers = max(1, num_workers)
        self.check_square_zero = check_square_zero
        self.show_progress = show_progress
        self._bases: Dict[Grading, Tuple[Tuple[Hashable, ...], Dict[Hashable, int]]] = {}
        self._slices: Dict[Grading, GradedChainSlice] = {}

    @property
    @abstractmethod
    def cube_dimension(self) -> int:
        """Number of cube coordinates (edges or crossings)."""
        pass

    @abstractmethod
    def _generate_basis(self, i: int, j: int) -> Iterable[Hashable]:
        """Generators of C^{i,j} in their canonical order."""
        pass

    @abstractmethod
    def _boundary(self, generator: Hashable) -> Iterable[Tuple[Hashable, int]]:
        """(target generator, coefficient) pairs of d applied to one generator."""
        pass

    @abstractmethod
    def gradings(self, degrees: Window = None, quantum: Window = None) -> List[Grading]:
        """Bigradings at which homology is computed, optionally clipped to windows."""
        pass

    # --- Slices ---

    def _indexed_basis(self, i: int, j: int) -> Tuple[Tuple[Hashable, ...], Dict[Hashable, int]]:
        key = (i, j)
        cached = self._bases.get(key)
        if cached is not None:
            return cached
        if 0 <= i <= self.cube_dimension:
            basis = tuple(self._generate_basis(i, j))
        else:
            basis = ()
        entry = (basis, {generator: k for k, generator in enumerate(basis)})
        return self._bases.setdefault(key, entry)

    def basis(self, i: int, j: int) -> Tuple[Hashable, ...]:
        return self._indexed_basis(i, j)[0]

    def chain_slice(self, i: int, j: int) -> GradedChainSlice:
        key = (i, j)
        cached = self._slices.get(key)
        if cached is not None:
            return cached
        basis, _ = self._indexed_basis(i, j)
        targets, target_index = self._indexed_basis(i + 1, j)
        rows = []
        for generator in basis:
            row: Dict[int, int] = {}
            for target, coefficient in self._boundary(generator):
                try:
                    k = target_index[target]
                except KeyError:
                    raise IntegrityError(
                        f"differential of {generator} leaves the slice ({i + 1},{j}): {target}"
                    ) from None
                value = row.get(k, 0) + coefficient
                if value:
                    row[k] = value
                else:
                    row.pop(k, None)
            rows.append(row)
        built = GradedChainSlice(i, j, basis, tuple(rows), len(targets))
        self._slices[key] = built
        return built

    def _log_reduction(self, chain: GradedChainSlice, result: ReductionResult) -> ReductionResult:
        logger.debug(
            f"d^{chain.i} at j={chain.j}: {len(chain)}x{chain.target_size}, rank {result.rank}, "
            f"{result.unit_pivots} unit pivots, residual {result.residual_shape}"
        )
        return result

    def process_batch(self, gradings: Sequence[Grading]) -> Dict[Grading, ReductionResult]:
        """
        Reduces the differentials d^i at the given (i, j).

        Slices are built in this process, where they share the cached bases; only
        the sparse rows travel to the worker processes for Smith reduction.
        """
        if not gradings:
            return {}
        class_name = self.__class__.__name__
        logger.debug(f"Reducing {len(gradings)} differentials for {class_name} with {self.num_workers} workers.")

        results: Dict[Grading, ReductionResult] = {}
        jobs: Dict[Grading, GradedChainSlice] = {}
        for grading in gradings:
            chain = self.chain_slice(*grading)
            if chain.basis and chain.target_size:
                jobs[grading] = chain
            else:
                results[grading] = ReductionResult(0)
        desc = f"Reducing {class_name} slices"

        if self.num_workers == 1:
            for grading, chain in tqdm(jobs.items(), total=len(jobs), desc=desc, disable=not self.show_progress):
                results[grading] = self._log_reduction(chain, reduce_rows(chain.d_out, chain.target_size))
            return results

        failures: List[BaseException] = []
        with ProcessPoolExecutor(max_workers=self.num_workers) as executor:
            futures = {
                executor.submit(reduce_rows, chain.d_out, chain.target_size): grading
                for grading, chain in jobs.items()
            }
            for future in tqdm(as_completed(futures), total=len(futures), desc=desc, disable=not self.show_progress):
                grading = futures[future]
                try:
                    results[grading] = self._log_reduction(jobs[grading], future.result())
                except Exception as e:
                    logger.error(f"Error reducing slice {grading} in {class_name}: {e}", exc_info=True)
                    failures.append(e)
        if failures:
            raise failures[0]
        return results

    def _verify_square_zero(self, gradings: Sequence[Grading]):
        present = set(gradings)
        for i, j in sorted(present):
            if (i + 1, j) not in present:
                continue
            first, second = self.chain_slice(i, j), self.chain_slice(i + 1, j)
            for column, image in enumerate(first.d_out):
                composed: Dict[int, int] = {}
                for middle, value in image.items():
                    for target, other in second.d_out[middle].items():
                        composed[target] = composed.get(target, 0) + value * other
                if any(composed.values()):
                    raise IntegrityError(f"d∘d ≠ 0 from ({i},{j}) at generator {first.basis[column]}")

    def homology(self, degrees: Window = None, quantum: Window = None) -> BigradedGroups:
        targets = self.gradings(degrees, quantum)
        needed = sorted(set(targets) | {(i - 1, j) for i, j in targets})
        reductions = self.process_batch(needed)
        if self.check_square_zero:
            self._verify_square_zero(needed)

        groups: Dict[Grading, AbelianGroup] = {}
        for i, j in targets:
            size = len(self.basis(i, j))
            if not size:
                continue
            outgoing, incoming = reductions[(i, j)], reductions[(i - 1, j)]
            free = size - outgoing.rank - incoming.rank
            if free < 0:
                raise IntegrityError(f"negative free rank at ({i},{j})")
            groups[(i, j)] = AbelianGroup.from_invariant_factors(free, incoming.torsion)
        self.release()
        return BigradedGroups(groups, ("i", "j"))

    def release(self):
        """Drops cached bases and slices."""
        self._bases.clear()
        self._slices.clear()

