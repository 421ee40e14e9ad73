"""
config.py
---------
Run configuration shared by the CLI and the command handlers.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_SOURCE = 0
DEFAULT_N = 2
MAX_SWEEP_LENGTH = 8
DEFAULT_SAMPLES = 200
DEFAULT_SEED = 0
FORMATS = ("text", "json")


@dataclass(frozen=True)
class CliConfig:
    """
    One invocation. `args` holds the positional word or diagram arguments;
    `source` is None for the unlabeled category.
    """

    command: str
    args: tuple[str, ...] = ()
    source: int | None = DEFAULT_SOURCE
    n: int = DEFAULT_N
    max_len: int = MAX_SWEEP_LENGTH
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    format: str = "text"
    suite: str = "all"
    save: bool = False
    png: str | None = None
    limit: int = 20
    offset: int = 0
    delete: int | None = None
    verbose: bool = False
