import argparse
import logging
import sys
from pathlib import Path

# Import modules from the same directory
from command_orchestrator import CommandOrchestrator
from homology_errors import (
    GraphBuildError,
    GraphParseError,
    HypothesisError,
    ResourceLimitError,
    UsageError,
)
from input_params import (
    add_distinguish_args,
    add_experiment_args,
    add_input_args,
    add_limit_args,
    add_logging_args,
    add_table_args,
    add_verify_args,
)
from log_manager import init_logging
from run_config import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    add_logging_args(common)
    add_limit_args(common)

    parser = argparse.ArgumentParser(
        description="Integral chromatic homology over A_m, Khovanov homology, and checks of their closed forms."
    )
    commands = parser.add_subparsers(dest="command", required=True)
    add_input_args(commands.add_parser("compute", parents=[common], help="Compute homology of a graph or diagram."))
    add_verify_args(commands.add_parser("verify", parents=[common], help="Check closed forms against computed homology."))
    add_distinguish_args(commands.add_parser("distinguish", parents=[common],
                                             help="Find cochromatic graphs told apart by homology."))
    add_table_args(commands.add_parser("table", parents=[common], help="Reproduce a reference table."))
    add_experiment_args(commands.add_parser("experiment", parents=[common],
                                            help="Record observations on open questions; nothing is asserted."))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    init_logging(log_file=args.log_file, console_level=args.log_level.upper())

    try:
        config = RunConfig.from_args(args).validate()
        result = CommandOrchestrator(config).run()
        if config.output:
            Path(config.output).write_text(result.text, encoding="utf-8")
            logger.info(f"Wrote result to {config.output}")
        else:
            sys.stdout.write(result.text)
        return EXIT_OK if result.ok else EXIT_MISMATCH
    except (UsageError, GraphParseError, GraphBuildError, HypothesisError) as e:
        logger.error(f"Configuration Error: {e}")
        return EXIT_USAGE
    except ResourceLimitError as e:
        logger.error(f"Resource limit: {e}")
        return EXIT_RESOURCE
    except OSError as e:
        logger.error(f"Could not read or write a file: {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.critical(f"An unexpected error occurred: {e}", exc_info=True)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
