#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
File: main.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    The main file you should run.
    At the beginning, start with the --help flag.
"""

import argparse
import sys
from pathlib import Path

from continua.errors import UltraorderError
from core.config import Config
from core.reports import emit_report
from core.runner import ExperimentSpec, setup_runner
from utils.logger import logger, set_logger
from utils.tools import parse_args

GLOBAL_FLAGS = {
    "debug", "stream", "env", "config", "logs_path", "format", "seed", "report_dir", "timing", "output"
}


def experiment_id(args: argparse.Namespace) -> str:
    if args.command == "catalog":
        return f"catalog-{args.action}"
    if args.command == "orientation":
        return f"orientation-{args.action}"
    return args.command


def build_spec(args: argparse.Namespace) -> ExperimentSpec:
    """Turns the parsed command line into an ExperimentSpec."""
    options = {k: v for k, v in vars(args).items() if k not in GLOBAL_FLAGS | {"command", "action"}}
    depth = options.pop("depth", None)
    return ExperimentSpec(
        experiment_id(args),
        {k: v for k, v in options.items() if v is not None},
        depth,
        args.seed,
        args.format,
        Path(args.output) if args.output else None,
    )


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    config_path = Path(args.config)
    env_path = Path(args.env)
    log_path = Path(args.logs_path)

    set_logger(log_path, args.debug, args.stream)
    logger.info(f"Logs path: {log_path} - debug: {args.debug} - stream: {args.stream}")

    try:
        config = Config(
            env_path=env_path,
            config_path=config_path,
            is_debug=args.debug,
            overrides={
                "report_dir": args.report_dir,
                "seed": args.seed,
                "format": args.format,
                "timing": args.timing,
            },
        )
        runner = setup_runner(config)
        spec = build_spec(args)
        report = runner.run(spec)
    except UltraorderError as err:
        logger.error(f"{type(err).__name__}: {err}")
        print(f"error: {err}", file=sys.stderr)
        return 2
    except Exception as err:
        logger.critical(f"Critical error running {args.command}: {err}", exc_info=True)
        print(f"error: {err}", file=sys.stderr)
        return 2

    sys.stdout.write(emit_report(report, spec.format or config.format, config.timing))
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
