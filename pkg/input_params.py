import argparse
import os
from typing import Tuple


def int_range(text: str) -> Tuple[int, int]:
    """Parses `3..7` (inclusive) or a single integer."""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            bounds = (int(low), int(high))
        else:
            bounds = (int(text), int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or N..M, got {text!r}")
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return bounds


def int_list(text: str) -> Tuple[int, ...]:
    """Parses a comma-separated list such as `3,2,3`."""
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def add_logging_args(parser: argparse.ArgumentParser):
    """Adds logging related arguments to the parser."""
    group = parser.add_argument_group("Logging Configuration")
    group.add_argument("--log-level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                       help="Set the console logging level (default: INFO)")
    group.add_argument("--log-file", default="debug.log",
                       help="Set the file for debug logging (default: debug.log). Only DEBUG messages are written here.")


def add_limit_args(parser: argparse.ArgumentParser):
    """Adds resource ceilings, worker count and cache location."""
    group = parser.add_argument_group("Resources")
    group.add_argument("--workers", type=int, default=int(os.getenv("CHROMKH_WORKERS", "1")),
                       help="Worker count; 1 runs serially (default: 1 or CHROMKH_WORKERS env var)")
    group.add_argument("--max-edges", type=int, default=int(os.getenv("CHROMKH_MAX_EDGES", "24")),
                       help="Largest chromatic cube, in edges (default: 24 or CHROMKH_MAX_EDGES env var)")
    group.add_argument("--max-crossings", type=int, default=int(os.getenv("CHROMKH_MAX_CROSSINGS", "16")),
                       help="Largest Khovanov cube, in crossings (default: 16 or CHROMKH_MAX_CROSSINGS env var)")
    group.add_argument("--cache-dir", default=os.getenv("CHROMKH_CACHE_DIR"),
                       help="Directory of the homology cache; no cache when unset (CHROMKH_CACHE_DIR env var)")
    group.add_argument("--progress", action="store_true", help="Show progress bars.")
    group.add_argument("--json", action="store_true", help="Print JSON instead of text tables.")
    group.add_argument("--output", help="Write the result to this file instead of stdout.")


def add_input_args(parser: argparse.ArgumentParser):
    """Adds the graph and diagram sources of `compute`; exactly one must be given."""
    group = parser.add_argument_group("Input (exactly one)")
    group.add_argument("--graph-file", help="Edge-list file ('v N' then 'e a b' lines).")
    group.add_argument("--dsl", help="Construction expression, e.g. \"edge_glue(cycle(4), cycle(6))\".")
    group.add_argument("--pd-file", help="PD code file ('X a b c d [+|-]' lines or KnotAtlas PD[...] text).")
    group.add_argument("--knot", help="Built-in diagram: unknot, trefoil, trefoil_kinked, figure_eight, figure_eight_kinked.")
    group.add_argument("--pretzel", type=int_list, help="Pretzel diagram (-a1,...,-ak) from a1,...,ak.")
    group.add_argument("--torus", type=int, help="Torus link T(2,n) from n.")
    group.add_argument("--rational", type=int_list, help="Rational link -P Q from P,Q.")
    grading = parser.add_argument_group("Algebra and gradings")
    grading.add_argument("-m", type=int, default=2, help="Chromatic algebra A_m = Z[x]/(x^m) (default: 2)")
    grading.add_argument("--degrees", type=int_range, help="Homological window, e.g. 0..4")
    grading.add_argument("--quantum", type=int_range, help="Quantum window, e.g. 8..13")


def add_verify_args(parser: argparse.ArgumentParser):
    parser.add_argument("theorems", nargs="+", help="Theorem ids to verify.")
    group = parser.add_argument_group("Instance families")
    group.add_argument("--max-v", type=int, default=5, help="Enumerate every connected graph up to this size (default: 5)")
    group.add_argument("--sample-v", type=int, help="Also sample connected graphs of this size.")
    group.add_argument("--sample-size", type=int, default=50, help="Graphs drawn at --sample-v (default: 50)")
    group.add_argument("--seed", type=int, default=0)
    group.add_argument("--s", dest="s_range", type=int_range, default=(3, 7), help="First cycle length range (default: 3..7)")
    group.add_argument("--t", dest="t_range", type=int_range, default=(3, 7), help="Second cycle length range (default: 3..7)")
    group.add_argument("--n", dest="n_range", type=int_range, default=(3, 6), help="Polygon size range (default: 3..6)")
    group.add_argument("--m-values", type=int_list, default=(2, 3), help="Algebras for A_m statements (default: 2,3)")
    group.add_argument("--pretzel", type=int_list, help="Restrict pretzel statements to this parameter triple.")


def add_distinguish_args(parser: argparse.ArgumentParser):
    parser.add_argument("--v", dest="vertex_count", type=int, required=True, help="Vertex count, at most 7.")
    parser.add_argument("-m", type=int, default=3, help="Chromatic algebra A_m (default: 3)")


def add_table_args(parser: argparse.ArgumentParser):
    parser.add_argument("table", type=int, choices=[1, 2, 3], help="Reference table to reproduce.")
    parser.add_argument("--count", type=int, default=4,
                        help="Table 1: number of squares in the state graph; 3 gives the 12-crossing fallback (default: 4)")
    parser.add_argument("--brute-force", action="store_true",
                        help="Table 2: compute the cube instead of reconstructing from the chromatic polynomial.")


def add_experiment_args(parser: argparse.ArgumentParser):
    parser.add_argument("experiments", nargs="*",
                        help="span, torsion-width, wheel-tail, complete-tail (default: all)")
    parser.add_argument("--max-v", type=int, default=5, help="Largest enumerated graph (default: 5)")
    parser.add_argument("--m-values", type=int_list, default=(3,), help="Algebras to observe (default: 3)")
