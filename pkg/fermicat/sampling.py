"""
sampling.py
-----------
Seeded random words and diagrams for the property sweeps.

Everything draws from `numpy.random.default_rng(seed)`, so a seed fixes the
whole sequence of samples on every platform. Diagrams are grown one layer
at a time from a bottom word; the valid sampler only proposes moves that
keep every row valid from the chosen source.
"""

from __future__ import annotations

import logging

import numpy as np

from .diagrams import DiagramExpr, GeneratorSlice, Kind, apply_layer, from_layers
from .signwords import MINUS, PLUS, SignWord

logger = logging.getLogger(__name__)

DEFAULT_MAX_LAYERS = 6


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def _pick(rng: np.random.Generator, options: list):
    return options[int(rng.integers(len(options)))]


def random_word(rng: np.random.Generator, max_len: int) -> SignWord:
    length = int(rng.integers(max_len + 1))
    return SignWord(tuple(PLUS if bit else MINUS for bit in rng.integers(2, size=length)))


def valid_word(source: int, length: int) -> SignWord:
    """The unique word of the given length valid from `source`."""
    last = PLUS if source == 0 else MINUS
    return SignWord(tuple(last * (-1) ** (length - 1 - i) for i in range(length)))


def random_valid_word(rng: np.random.Generator, source: int, max_len: int) -> SignWord:
    return valid_word(source, int(rng.integers(max_len + 1)))


# ---------------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------------

def _valid_moves(row: SignWord, source: int, max_len: int) -> list[GeneratorSlice]:
    """Cups and caps that keep an alternating row valid from `source`."""
    moves = []
    for p in range(len(row) - 1):
        moves.append(GeneratorSlice(Kind.CAP, row[p:p + 2], p))
    if len(row) + 2 <= max_len:
        for p in range(len(row) + 1):
            for pair in ((PLUS, MINUS), (MINUS, PLUS)):
                if p > 0 and row[p - 1] == pair[0]:
                    continue
                if p < len(row) and row[p] == pair[1]:
                    continue
                if p == len(row) and pair[1] != (PLUS if source == 0 else MINUS):
                    continue
                moves.append(GeneratorSlice(Kind.CUP, SignWord(pair), p))
    return moves


def _any_moves(row: SignWord, max_len: int) -> list[GeneratorSlice]:
    moves = []
    for p in range(len(row) - 1):
        if row[p] != row[p + 1]:
            moves.append(GeneratorSlice(Kind.CAP, row[p:p + 2], p))
        moves.append(GeneratorSlice(Kind.CROSSING, row[p:p + 2], p))
    if len(row) + 2 <= max_len:
        for p in range(len(row) + 1):
            for pair in ((PLUS, MINUS), (MINUS, PLUS)):
                moves.append(GeneratorSlice(Kind.CUP, SignWord(pair), p))
    return moves


# ---------------------------------------------------------------------------
# Diagrams
# ---------------------------------------------------------------------------

def random_valid_diagram(
    rng: np.random.Generator,
    source: int,
    max_len: int,
    max_layers: int = DEFAULT_MAX_LAYERS,
) -> DiagramExpr:
    """A crossing-free diagram whose every row is valid from `source`."""
    bottom = random_valid_word(rng, source, max_len)
    row, layers = bottom, []
    for _ in range(int(rng.integers(max_layers + 1))):
        moves = _valid_moves(row, source, max_len)
        if not moves:
            break
        layer = _pick(rng, moves)
        layers.append(layer)
        row = apply_layer(row, layer)
    return from_layers(bottom, layers)


def random_crossing_diagram(
    rng: np.random.Generator,
    max_len: int,
    max_layers: int = DEFAULT_MAX_LAYERS,
) -> DiagramExpr:
    """An arbitrary diagram with at least one crossing layer."""
    bottom = random_word(rng, max_len)
    row, layers = bottom, []
    total = int(rng.integers(1, max_layers + 1))
    forced_at = int(rng.integers(total))
    for step in range(total):
        if step >= forced_at and not any(l.kind is Kind.CROSSING for l in layers) and len(row) >= 2:
            p = int(rng.integers(len(row) - 1))
            layer = GeneratorSlice(Kind.CROSSING, row[p:p + 2], p)
        else:
            moves = _any_moves(row, max_len)
            if not moves:
                break
            layer = _pick(rng, moves)
        layers.append(layer)
        row = apply_layer(row, layer)

    if not any(l.kind is Kind.CROSSING for l in layers):
        if len(row) < 2:
            cup_layer = GeneratorSlice(Kind.CUP, SignWord((PLUS, MINUS)), len(row))
            layers.append(cup_layer)
            row = apply_layer(row, cup_layer)
        layers.append(GeneratorSlice(Kind.CROSSING, row[:2], 0))
    return from_layers(bottom, layers)


def sample_valid_diagrams(seed: int, samples: int, max_len: int) -> list[tuple[int, DiagramExpr]]:
    """`samples` (source, diagram) pairs alternating between the two sources."""
    rng = make_rng(seed)
    out = []
    for k in range(samples):
        source = k % 2
        out.append((source, random_valid_diagram(rng, source, max_len)))
    logger.debug("Sampled %d valid diagrams (seed=%d, max_len=%d).", samples, seed, max_len)
    return out


def sample_crossing_diagrams(seed: int, samples: int, max_len: int) -> list[DiagramExpr]:
    rng = make_rng(seed)
    return [random_crossing_diagram(rng, max_len) for _ in range(samples)]
