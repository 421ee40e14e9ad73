"""
main.py
-------
Command-line entry point.

    python -m fermicat normalize "cup(-+) ; cap(-+)" --source 0
    python -m fermicat inner -- -+ 1
    python -m fermicat verify iso --format json --save

Words starting with '-' go after a '--' separator so argparse does not
take them for options.

Exit codes: 0 success, 1 a verification or oracle check failed, 2 usage,
parse, boundary or domain error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import config as defaults
from .commands import COMMANDS, EXIT_USAGE, SUITES
from .config import CliConfig
from .errors import FermicatError, ParseError

logger = logging.getLogger(__name__)

_LOG_FORMAT = "%(asctime)s  %(levelname)-8s  %(name)s — %(message)s"


def configure_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format=_LOG_FORMAT,
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _source_label(text: str) -> int | None:
    if text.lower() in ("none", "unlabeled"):
        return None
    if text in ("0", "1"):
        return int(text)
    raise argparse.ArgumentTypeError(f"source must be 0, 1 or none, got {text!r}")


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--source", type=_source_label, default=defaults.DEFAULT_SOURCE,
                        help="label of the rightmost region: 0, 1, or none for the unlabeled category")
    common.add_argument("--n", type=int, default=defaults.DEFAULT_N,
                        help="matrix size of the bimodule representation")
    common.add_argument("--max-len", type=_non_negative, default=defaults.MAX_SWEEP_LENGTH,
                        help="longest word enumerated by sweeps")
    common.add_argument("--samples", type=_non_negative, default=defaults.DEFAULT_SAMPLES,
                        help="number of random diagrams drawn by sampled checks")
    common.add_argument("--seed", type=int, default=defaults.DEFAULT_SEED)
    common.add_argument("--format", choices=defaults.FORMATS, default="text")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(
        prog="fermicat",
        description="Diagrammatic categorified fermion algebra: normal forms, hom dimensions, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="normal form of a diagram")
    p.add_argument("args", nargs=1, metavar="DIAGRAM")

    p = sub.add_parser("inner", parents=[common], help="hom dimension next to the Fock inner product")
    p.add_argument("args", nargs=2, metavar="WORD")

    p = sub.add_parser("reduce", parents=[common], help="reduce a word to its atom")
    p.add_argument("args", nargs=1, metavar="WORD")

    p = sub.add_parser("render", parents=[common], help="render the normal form of a diagram")
    p.add_argument("args", nargs=1, metavar="DIAGRAM")
    p.add_argument("--png", metavar="PATH", help="also write a PNG drawing")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--save", action="store_true", help="archive the report")

    p = sub.add_parser("history", parents=[common], help="list archived reports")
    p.add_argument("--limit", type=_non_negative, default=20)
    p.add_argument("--offset", type=_non_negative, default=0)
    p.add_argument("--delete", type=_non_negative, metavar="ID", help="delete one archived report")

    sub.add_parser("export", parents=[common], help="archived reports as CSV")
    return parser


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    return CliConfig(
        command=ns.command,
        args=tuple(getattr(ns, "args", ())),
        source=ns.source,
        n=ns.n,
        max_len=ns.max_len,
        samples=ns.samples,
        seed=ns.seed,
        format=ns.format,
        suite=getattr(ns, "suite", "all"),
        save=getattr(ns, "save", False),
        png=getattr(ns, "png", None),
        limit=getattr(ns, "limit", 20),
        offset=getattr(ns, "offset", 0),
        delete=getattr(ns, "delete", None),
        verbose=ns.verbose,
    )


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    config = config_from_args(ns)
    configure_logging(config.verbose)

    try:
        return COMMANDS[config.command](config)
    except ParseError as e:
        print(f"error: {e}\n{e.caret()}", file=sys.stderr)
        return EXIT_USAGE
    except FermicatError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
