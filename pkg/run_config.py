import argparse
from dataclasses import dataclass
from typing import Optional, Tuple

from homology_errors import UsageError

Window = Optional[Tuple[int, int]]

COMMANDS = ("compute", "verify", "distinguish", "table", "experiment")
GRAPH_SOURCES = ("graph_file", "dsl")
DIAGRAM_SOURCES = ("pd_file", "knot", "pretzel", "torus", "rational")


@dataclass
class RunConfig:
    """Everything one invocation needs, built from parsed arguments."""
    command: str
    # compute inputs
    graph_file: Optional[str] = None
    dsl: Optional[str] = None
    pd_file: Optional[str] = None
    knot: Optional[str] = None
    pretzel: Optional[Tuple[int, ...]] = None
    torus: Optional[int] = None
    rational: Optional[Tuple[int, ...]] = None
    m: int = 2
    degrees: Window = None
    quantum: Window = None
    # verify / experiment
    theorems: Tuple[str, ...] = ()
    experiments: Tuple[str, ...] = ()
    max_v: int = 5
    sample_v: Optional[int] = None
    sample_size: int = 50
    seed: int = 0
    s_range: Tuple[int, int] = (3, 7)
    t_range: Tuple[int, int] = (3, 7)
    n_range: Tuple[int, int] = (3, 6)
    m_values: Tuple[int, ...] = (2, 3)
    # distinguish / table
    vertex_count: Optional[int] = None
    table: Optional[int] = None
    count: int = 4
    brute_force: bool = False
    # resources and output
    workers: int = 1
    max_edges: int = 24
    max_crossings: int = 16
    cache_dir: Optional[str] = None
    show_progress: bool = False
    json_output: bool = False
    output: Optional[str] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        values = vars(args)
        config = cls(command=values["command"])
        for name in config.__dataclass_fields__:
            if name in values and values[name] is not None and name != "command":
                setattr(config, name, values[name])
        config.theorems = tuple(values.get("theorems") or ())
        config.experiments = tuple(values.get("experiments") or ())
        config.show_progress = bool(values.get("progress"))
        config.json_output = bool(values.get("json"))
        return config

    @property
    def sources(self) -> Tuple[str, ...]:
        return tuple(name for name in GRAPH_SOURCES + DIAGRAM_SOURCES if getattr(self, name) is not None)

    @property
    def is_diagram(self) -> bool:
        return any(getattr(self, name) is not None for name in DIAGRAM_SOURCES)

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}; choose from {COMMANDS}")
        if self.command == "compute":
            if len(self.sources) != 1:
                raise UsageError(f"compute needs exactly one input source, got {list(self.sources) or 'none'}")
            if self.rational is not None and len(self.rational) != 2:
                raise UsageError(f"--rational takes two integers P,Q, got {self.rational}")
            if self.pretzel is not None and len(self.pretzel) < 2:
                raise UsageError(f"--pretzel needs at least two parameters, got {self.pretzel}")
        if self.m < 2 or any(m < 2 for m in self.m_values):
            raise UsageError(f"A_m needs m >= 2, got m={self.m}, m-values={self.m_values}")
        for name in ("workers", "max_edges", "max_crossings", "max_v", "sample_size", "count"):
            if getattr(self, name) < 1:
                raise UsageError(f"{name.replace('_', '-')} must be positive, got {getattr(self, name)}")
        if self.command == "distinguish" and (self.vertex_count is None or self.vertex_count < 1):
            raise UsageError(f"distinguish needs a positive vertex count, got {self.vertex_count}")
        if self.command == "table" and self.table not in (1, 2, 3):
            raise UsageError(f"table must be 1, 2 or 3, got {self.table}")
        return self
