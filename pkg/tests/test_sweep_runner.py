import pytest

from sweep_runner import SweepRunner


def _square(x: int) -> int:
    return x * x


def _fail_on_three(x: int) -> int:
    if x == 3:
        raise ValueError("three")
    return x


def test_serial_results_sorted_by_key():
    runner = SweepRunner(workers=1)
    assert runner.run(_square, [3, 1, 2], key=str) == [("1", 1), ("2", 4), ("3", 9)]


def test_process_pool_matches_serial():
    instances = list(range(10))
    serial = SweepRunner(workers=1).run(_square, instances, key=lambda x: f"{x:02d}")
    parallel = SweepRunner(workers=2).run(_square, instances, key=lambda x: f"{x:02d}")
    assert parallel == serial


def test_empty_sweep():
    assert SweepRunner(workers=4).run(_square, [], key=str) == []


@pytest.mark.parametrize("workers", [1, 2])
def test_failures_propagate(workers):
    with pytest.raises(ValueError):
        SweepRunner(workers=workers).run(_fail_on_three, [1, 2, 3], key=str)
