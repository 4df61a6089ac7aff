import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Generic, List, Sequence, Tuple, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class SweepRunner(Generic[T, R]):
    """
    Runs one job per instance, on a process pool when workers > 1.

    Jobs must be module-level functions so they can be pickled. Results come
    back sorted by instance key whatever the completion order.
    """

    def __init__(self, workers: int = 1, show_progress: bool = False):
        self.workers = max(1, workers)
        self.show_progress = show_progress

    def run(self, job: Callable[[T], R], instances: Sequence[T], key: Callable[[T], str],
            desc: str = "Sweeping") -> List[Tuple[str, R]]:
        if not instances:
            return []
        logger.info(f"{desc}: {len(instances)} instances on {self.workers} worker(s).")
        results: List[Tuple[str, R]] = []
        if self.workers == 1:
            for instance in tqdm(instances, desc=desc, disable=not self.show_progress):
                results.append((key(instance), job(instance)))
        else:
            failures: List[BaseException] = []
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                futures = {executor.submit(job, instance): instance for instance in instances}
                for future in tqdm(as_completed(futures), total=len(instances), desc=desc,
                                   disable=not self.show_progress):
                    instance = futures[future]
                    try:
                        results.append((key(instance), future.result()))
                    except Exception as e:
                        logger.error(f"Error processing {key(instance)}: {e}", exc_info=True)
                        failures.append(e)
            if failures:
                raise failures[0]
        results.sort(key=lambda item: item[0])
        return results
