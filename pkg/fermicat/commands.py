"""
commands.py
-----------
Command handlers behind the CLI. Each handler takes a CliConfig, prints its
result to stdout (text or JSON) and returns the process exit code.

Public API:
    cmd_normalize(config)   → normal form of a diagram
    cmd_inner(config)       → hom-space dimension next to the Fock oracle
    cmd_reduce(config)      → atom of a word and its witness maps
    cmd_render(config)      → ASCII/JSON rendering, optional PNG
    cmd_verify(config)      → one verification suite, or all of them
    cmd_history(config)     → archived reports, newest first, or delete one
    cmd_export(config)      → archived reports as CSV
"""

from __future__ import annotations

import json
import logging
from typing import Callable

from .bimodule import dimension_check, make_context, soundness_check, verify_adjunctions, verify_zigzags
from .config import CliConfig
from .db.database import init_db
from .db.queries import count_reports, delete_report, export_csv, list_reports, save_report
from .errors import DomainError
from .lang import parse_diagram, parse_word, pretty_print, render_ascii, render_json
from .normalize import hom_dim, normalize
from .reduction import (
    curl_check,
    direct_sum_witness,
    grothendieck_check,
    nilpotence_check,
    normal_order_check,
    reduce_word,
    reduction_sweep,
)
from .render import render_png
from .reports import Report
from .signwords import inner_product_at
from .twocat import oracle_sweep, orthonormality_check

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Random diagrams and orthonormal families are drawn with boundaries up to
# this length, whatever --max-len says.
MAX_SAMPLE_BOUNDARY = 6
NORMAL_ORDER_LENGTH = 10


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------

def _emit(config: CliConfig, text: str, payload: dict) -> None:
    if config.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _require_args(config: CliConfig, count: int, usage: str) -> tuple[str, ...]:
    if len(config.args) != count:
        raise DomainError(f"Usage: {usage} (got {len(config.args)} argument(s), expected {count}).")
    return config.args


# ---------------------------------------------------------------------------
# normalize / render
# ---------------------------------------------------------------------------

def cmd_normalize(config: CliConfig) -> int:
    (text,) = _require_args(config, 1, "normalize DIAGRAM")
    m = normalize(parse_diagram(text), config.source)
    _emit(config, render_ascii(m), {"input": text, "source": config.source, "morphism": render_json(m)})
    return EXIT_OK


def cmd_render(config: CliConfig) -> int:
    (text,) = _require_args(config, 1, "render DIAGRAM")
    d = parse_diagram(text)
    m = normalize(d, config.source)
    payload = {
        "input": text,
        "pretty": pretty_print(d),
        "source": config.source,
        "morphism": render_json(m),
    }
    _emit(config, f"{pretty_print(d)}\n\n{render_ascii(m)}", payload)
    if config.png:
        render_png(m, config.png)
    return EXIT_OK


# ---------------------------------------------------------------------------
# inner / reduce
# ---------------------------------------------------------------------------

def cmd_inner(config: CliConfig) -> int:
    left_text, right_text = _require_args(config, 2, "inner WORD WORD")
    if config.source is None:
        raise DomainError("The inner product needs a source label, 0 or 1.")
    left, right = parse_word(left_text), parse_word(right_text)

    dim = hom_dim(right, left, config.source)
    oracle = inner_product_at(left, right, config.source)
    agree = dim == oracle
    if not agree:
        logger.warning("hom_dim(%s, %s) = %d but the Fock oracle gives %d.",
                       right.display, left.display, dim, oracle)

    _emit(
        config,
        f"{dim} {'=' if agree else '!='} {oracle}",
        {
            "left": left.text,
            "right": right.text,
            "source": config.source,
            "hom_dim": dim,
            "oracle": oracle,
            "agree": agree,
        },
    )
    return EXIT_OK if agree else EXIT_FAILED


def cmd_reduce(config: CliConfig) -> int:
    (text,) = _require_args(config, 1, "reduce WORD")
    w = parse_word(text)
    r = reduce_word(w, config.source)
    atom = r.atom.word.display if r.atom.word is not None else "0"

    if r.down is None:
        _emit(config, f"{w.display} ~ 0",
              {"word": w.text, "source": config.source, "atom": None, "down": None, "up": None})
        return EXIT_OK

    word_ok, atom_ok = r.witness_holds(config.source)
    lines = [
        f"{w.display} ~ {atom}",
        f"  down: {pretty_print(r.down)}",
        f"  up:   {pretty_print(r.up)}",
        f"  up . down = id: {word_ok}",
        f"  down . up = id: {atom_ok}",
    ]
    _emit(
        config,
        "\n".join(lines),
        {
            "word": w.text,
            "source": config.source,
            "atom": r.atom.word.text,
            "down": pretty_print(r.down),
            "up": pretty_print(r.up),
            "witness": [word_ok, atom_ok],
        },
    )
    return EXIT_OK if word_ok and atom_ok else EXIT_FAILED


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _soundness(config: CliConfig) -> Report:
    ctx = make_context(config.n)
    report = Report("soundness", n=config.n, seed=config.seed)
    report.extend(dimension_check(ctx, min(config.max_len, MAX_SAMPLE_BOUNDARY)))
    report.extend(soundness_check(ctx, min(config.max_len, MAX_SAMPLE_BOUNDARY), config.samples, config.seed))
    return report


SUITES: dict[str, Callable[[CliConfig], Report]] = {
    "iso": lambda c: direct_sum_witness(),
    "adjunction": lambda c: verify_adjunctions(make_context(c.n)),
    "zigzag": lambda c: verify_zigzags(make_context(c.n)),
    "soundness": _soundness,
    "sweep": lambda c: oracle_sweep(c.max_len),
    "orthonormal": lambda c: orthonormality_check(min(c.max_len, MAX_SAMPLE_BOUNDARY)),
    "reduce": lambda c: reduction_sweep(c.max_len),
    "nilpotent": lambda c: nilpotence_check(min(c.max_len, MAX_SAMPLE_BOUNDARY), c.samples, c.seed),
    "normal-order": lambda c: normal_order_check(max(c.max_len, NORMAL_ORDER_LENGTH)),
    "curl": lambda c: curl_check(),
    "grothendieck": lambda c: grothendieck_check(c.max_len),
}


def run_suite(config: CliConfig) -> Report:
    if config.suite == "all":
        report = Report("all", n=config.n, seed=config.seed)
        for name, suite in SUITES.items():
            logger.info("Running suite %s ...", name)
            report.extend(suite(config))
        return report
    if config.suite not in SUITES:
        raise DomainError(
            f"Unknown suite {config.suite!r}; expected one of {', '.join(SUITES)} or all."
        )
    logger.info("Running suite %s ...", config.suite)
    return SUITES[config.suite](config)


def cmd_verify(config: CliConfig) -> int:
    report = run_suite(config)
    logger.info("Suite %s finished: %d/%d passed.",
                report.suite, report.passed_count, len(report.checks))
    _emit(config, report.to_text(), report.to_dict())

    if config.save:
        # Archive failures never change the exit code.
        try:
            init_db()
            save_report(report)
        except Exception:
            logger.exception("Failed to archive the %s report.", report.suite)

    return EXIT_OK if report.ok else EXIT_FAILED


# ---------------------------------------------------------------------------
# history / export
# ---------------------------------------------------------------------------

def cmd_history(config: CliConfig) -> int:
    init_db()
    if config.delete is not None:
        if not delete_report(config.delete):
            raise DomainError(f"No archived report with id {config.delete}.")
        _emit(config, f"deleted report #{config.delete}", {"deleted": config.delete})
        return EXIT_OK

    rows = list_reports(config.limit, config.offset)
    total = count_reports()
    lines = [f"{len(rows)} of {total} archived report(s)"]
    for row in rows:
        lines.append(
            f"  #{row['id']}  {row['created_at']}  {row['suite']:<12}  "
            f"n={row['n']}  seed={row['seed']}  {row['passed']} passed, {row['failed']} failed"
        )
    _emit(config, "\n".join(lines), {"total": total, "reports": rows})
    return EXIT_OK


def cmd_export(config: CliConfig) -> int:
    init_db()
    print(export_csv(), end="")
    return EXIT_OK


COMMANDS: dict[str, Callable[[CliConfig], int]] = {
    "normalize": cmd_normalize,
    "inner": cmd_inner,
    "reduce": cmd_reduce,
    "render": cmd_render,
    "verify": cmd_verify,
    "history": cmd_history,
    "export": cmd_export,
}
