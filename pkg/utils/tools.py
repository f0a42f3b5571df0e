"""
File: tools.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Parses the command line and loads the JSON configuration file.
"""

import argparse
import json

from utils.logger import logger


def _global_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--debug", "-d", help="Enable debug mode", action="store_true")
    parser.add_argument("--stream", "-s", help="Enable console stream", action="store_true")
    parser.add_argument("--env", help="Path to the .env file (default: .env)", default=".env")
    parser.add_argument(
        "--config",
        help="Path to the config.json file (default: utils/config.json)",
        default="utils/config.json",
    )
    parser.add_argument(
        "--logs-path",
        help="Path to the logs file (default: logs/ultraorder.log)",
        default="logs/ultraorder.log",
    )
    parser.add_argument("--format", choices=("json", "text"), help="Report format (default from config)")
    parser.add_argument("--seed", type=int, help="Seed of randomized sweeps")
    parser.add_argument("--report-dir", help="Directory for report files (default: $ULTRAORDER_REPORT_DIR)")
    parser.add_argument("--output", "-o", help="Write this run's report to this directory instead")
    parser.add_argument("--timing", help="Include wall-clock time in JSON reports", action="store_true")


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        usage="%(prog)s [options] <command> ...",
        description="Ultrafilter orders on chainable continua: comparisons, order counts and witnesses.",
        epilog="See https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder",
    )
    _global_flags(parser)
    commands = parser.add_subparsers(dest="command", required=True)

    catalog = commands.add_parser("catalog", help="Example continua")
    catalog_commands = catalog.add_subparsers(dest="action", required=True)
    catalog_commands.add_parser("list", help="Spaces, chain families and witness points")
    validate = catalog_commands.add_parser("validate", help="Check chain levels against the geometry")
    validate.add_argument("--space", required=True)
    validate.add_argument("--variant", required=True)
    validate.add_argument("--depth", type=int, default=2, help="Check levels 1..depth (default: 2)")

    compare = commands.add_parser("compare", help="Compare two points in an ultrafilter order")
    compare.add_argument("--space", required=True)
    compare.add_argument("--variant", help="Chain family (for s3 the bit prefix may be given with --prefix)")
    compare.add_argument("--prefix", help="Binary prefix or bit set selecting the s3 family")
    compare.add_argument("--x", required=True, help="Point as strand:param; bare rationals are arc points")
    compare.add_argument("--y", required=True)
    compare.add_argument("--depth", type=int)
    compare.add_argument("--tower", help="Ultrafilter tower, e.g. r2=0 or pow2:10")

    orders = commands.add_parser("orders-count", help="Count the orders the chain families induce")
    orders.add_argument("--space", required=True)
    orders.add_argument("--depth", type=int)
    orders.add_argument("--tower")

    witness = commands.add_parser("knaster-witness", help="Thread pair ordered by an index set")
    witness.add_argument("--set", required=True, help="Index set, e.g. even, mod:3:1, bits:0|01")
    witness.add_argument("--depth", type=int)
    witness.add_argument("--u1", default="r2=0")
    witness.add_argument("--u2", default="r2=1")

    bridge = commands.add_parser("bridge", help="Pulled-back chains against coordinate order on random threads")
    bridge.add_argument("--samples", type=int)
    bridge.add_argument("--depth", type=int, default=12)

    orientation = commands.add_parser("orientation", help="Tail-flip combinatorics on binary words")
    orientation_commands = orientation.add_subparsers(dest="action", required=True)
    decompose = orientation_commands.add_parser("decompose", help="Odd decomposition of s_n on a cylinder")
    decompose.add_argument("--n", type=int, required=True)
    decompose.add_argument("--prefix", default="")
    decompose.add_argument("--depth", type=int)
    reach = orientation_commands.add_parser("reach", help="Composition of given parity between cylinders")
    reach.add_argument("--from", dest="source", default="")
    reach.add_argument("--to", dest="target", required=True)
    reach.add_argument("--parity", choices=("even", "odd"), required=True)
    reach.add_argument("--depth", type=int)
    sweep = orientation_commands.add_parser("sweep", help="Exhaustive decomposition and reach checks")
    sweep.add_argument("--depth", type=int)

    axioms = commands.add_parser("axioms", help="Ultrafilter laws and order axioms on seeded samples")
    axioms.add_argument("--pairs", type=int)
    axioms.add_argument("--depth", type=int)

    suite = commands.add_parser("suite", help="Run the acceptance suite")
    suite.add_argument("--only", nargs="*", default=[], help="Criterion ids to run")
    return parser.parse_args(argv)


def load_config_file(path: str = "utils/config.json") -> dict:
    """
    Loads a JSON configuration file with the experiment defaults.

    :param path: Path to the configuration file. Default: 'utils/config.json'.
    :return dict: File contents as a dictionary or empty dictionary in case of error.
    """
    try:
        with open(path) as json_file:
            logger.info(f"Loading config from {path}")
            return json.load(json_file)
    except FileNotFoundError:
        logger.warning(f"Config file not found: {path}")
    except json.JSONDecodeError:
        logger.warning(f"Config file does not contain valid JSON: {path}")
    return {}
