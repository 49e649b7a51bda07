"""Command-line entry point: ``verify --k 5..30 --checks all``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from c2v.checks import CATALOG
from c2v.config import (
    FORMATS,
    MODES,
    ConfigError,
    load_config,
    parse_check_ids,
    parse_k_range,
    parse_weight_cap,
)
from c2v.corpus import Corpus
from c2v.report import ReportError, render_report, write_report
from c2v.runner import exit_code, run_suite

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Exact verification of the C2-algebra claims for parafermion vertex algebras",
    )
    parser.add_argument("--config", type=Path, help="YAML file with run and limits sections")
    parser.add_argument("--k", help="levels: 5..30, 5,7,9 or 5")
    parser.add_argument("--checks", help="'all' or a comma list such as C1,C4,C14")
    parser.add_argument("--weight-cap", help="'auto' (2k+6) or an integer")
    parser.add_argument("--mode", choices=MODES, help="scalar mode preference")
    parser.add_argument("--jobs", type=int, help="worker processes")
    parser.add_argument("--format", choices=FORMATS, help="report format")
    parser.add_argument("--out", type=Path, help="write the report here instead of stdout")
    parser.add_argument("--strict", action="store_true", default=None, help="exit 3 on resource skips")
    parser.add_argument(
        "--mutate",
        action="append",
        metavar="NAME:INDEX[:DELTA]",
        help="corrupt one corpus coefficient (repeatable)",
    )
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--list-checks", action="store_true", help="print the check catalogue")
    parser.add_argument("--list-corpus", action="store_true", help="print the corpus names")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    if args.list_checks:
        for check in CATALOG.values():
            print(check.describe())
        return EXIT_OK
    if args.list_corpus:
        for name in Corpus.names():
            print(name)
        return EXIT_OK

    try:
        config = load_config(args.config)
        config = config.with_overrides(
            k_values=parse_k_range(args.k) if args.k else None,
            check_ids=parse_check_ids(args.checks) if args.checks else None,
            weight_cap=parse_weight_cap(args.weight_cap) if args.weight_cap else None,
            mode=args.mode,
            jobs=args.jobs,
            format=args.format,
            out=str(args.out) if args.out else None,
            strict=args.strict,
            log_level=args.log_level,
            mutations=tuple(args.mutate) if args.mutate else None,
        )
    except ConfigError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_INVALID

    logging.basicConfig(
        level=getattr(logging, config.log_level.upper()),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        results = run_suite(config)
    except ConfigError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_INVALID

    document = render_report(results, config.format, config)
    if config.out:
        try:
            write_report(document, Path(config.out))
        except ReportError as exc:
            print(f"verify: {exc}", file=sys.stderr)
            return EXIT_INVALID
    else:
        sys.stdout.write(document)
    code = exit_code(results, config.strict)
    logger.info(f"{len(results)} results, exit code {code}")
    return code


__all__ = ["EXIT_FAIL", "EXIT_INVALID", "EXIT_OK", "EXIT_RESOURCE", "build_parser", "main"]
