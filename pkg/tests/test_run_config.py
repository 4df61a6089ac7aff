import argparse

import pytest

from homology_errors import UsageError
from input_params import int_list, int_range
from main import build_parser
from run_config import RunConfig


def parse(*argv):
    return RunConfig.from_args(build_parser().parse_args(list(argv)))


@pytest.mark.parametrize("text, expected", [("3..7", (3, 7)), ("4", (4, 4)), ("-2..1", (-2, 1))])
def test_int_range(text, expected):
    assert int_range(text) == expected


@pytest.mark.parametrize("text", ["7..3", "a..b", ""])
def test_int_range_rejects(text):
    with pytest.raises(argparse.ArgumentTypeError):
        int_range(text)


def test_int_list():
    assert int_list("3,2,3") == (3, 2, 3)
    with pytest.raises(argparse.ArgumentTypeError):
        int_list("3,x")
    with pytest.raises(argparse.ArgumentTypeError):
        int_list(",")


def test_compute_config():
    config = parse("compute", "--dsl", "cycle(5)", "-m", "3", "--degrees", "0..2", "--json").validate()
    assert config.sources == ("dsl",)
    assert not config.is_diagram
    assert (config.m, config.degrees, config.json_output) == (3, (0, 2), True)


def test_diagram_source():
    config = parse("compute", "--pretzel", "3,2,3").validate()
    assert config.is_diagram
    assert config.pretzel == (3, 2, 3)


@pytest.mark.parametrize("argv", [
    ("compute",),
    ("compute", "--dsl", "cycle(3)", "--knot", "trefoil"),
    ("compute", "--rational", "3,5,7"),
    ("compute", "--pretzel", "3"),
    ("compute", "--dsl", "cycle(3)", "-m", "1"),
    ("compute", "--dsl", "cycle(3)", "--workers", "0"),
    ("verify", "polygon", "--m-values", "2,1"),
    ("distinguish", "--v", "0"),
])
def test_validate_rejects(argv):
    with pytest.raises(UsageError):
        parse(*argv).validate()


def test_verify_config():
    config = parse("verify", "polygon", "twocycle", "--s", "3..4", "--max-v", "4").validate()
    assert config.theorems == ("polygon", "twocycle")
    assert config.s_range == (3, 4)
    assert config.max_v == 4


def test_environment_defaults(monkeypatch):
    monkeypatch.setenv("CHROMKH_WORKERS", "3")
    monkeypatch.setenv("CHROMKH_CACHE_DIR", "/tmp/chromkh-cache")
    config = parse("table", "2")
    assert config.workers == 3
    assert config.cache_dir == "/tmp/chromkh-cache"


def test_unknown_command():
    with pytest.raises(UsageError):
        RunConfig(command="draw").validate()
