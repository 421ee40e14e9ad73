"""
spaces.py
---------
The representation context and the tensor spaces of sign words.

R0 is the rationals and R1 the n x n matrices. Letter '+' is the bimodule
M of columns (basis e_i), letter '-' the bimodule N of rows (basis e^i).
A word valid from a source alternates, so its internal junctions are "+-"
over R0 (a plain tensor product) or "-+" over R1. The tensor space of a
word therefore splits into blocks

    [M] (N (x)_R1 M)* [N]

and is the plain tensor product of the block quotients. Each N (x)_R1 M
block is computed by row-reducing its middle-action relations.

`TensorSpace.relations` also places every R1 junction's relations in the
ambient space of the whole word; `dimension_check` row-reduces them to
confirm that ambient dim - rank equals the block product.

Ambient elements are dicts {index tuple: coefficient}, one index per
letter. The empty word at source 1 is R1 itself, with index pairs (a, b)
standing for the matrix units E_ab.
"""

from __future__ import annotations

import enum
import itertools
import logging
import threading
from dataclasses import dataclass, field
from functools import cached_property

import sympy

from ..errors import DomainError
from ..signwords import MINUS, PLUS, SignWord, is_valid_from, target
from .linalg import Quotient, quotient_by, row_reduce

logger = logging.getLogger(__name__)

Ambient = dict[tuple[int, ...], sympy.Rational]


class BlockKind(enum.Enum):
    R0 = "R0"
    R1 = "R1"
    M = "M"
    N = "N"
    NM = "N(x)M"


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    width: int                  # letters covered
    dim: int
    representatives: tuple[tuple[int, ...], ...]
    quotient: Quotient | None = None
    n: int = 2

    def project(self, local: tuple[int, ...]) -> list[tuple[int, sympy.Rational]]:
        """Quotient coordinates of one local ambient basis element."""
        if self.kind is BlockKind.R0:
            return [(0, sympy.Integer(1))]
        if self.kind in (BlockKind.M, BlockKind.N):
            return [(local[0], sympy.Integer(1))]
        if self.kind is BlockKind.R1:
            a, b = local
            return [(a * self.n + b, sympy.Integer(1))]
        a, b = local
        column = self.quotient.projection[:, a * self.n + b]
        return [(k, column[k]) for k in range(column.rows) if column[k] != 0]


@dataclass
class RepContext:
    """
    The representation at size n.

    `g0_factor` is the normalisation of g0 (1/n); the negative control
    builds a context with factor 1.
    """

    n: int
    g0_factor: sympy.Rational
    _spaces: dict = field(default_factory=dict, repr=False)
    _nm: Quotient | None = field(default=None, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def basis_m(self) -> list[str]:
        return [f"e_{i + 1}" for i in range(self.n)]

    def basis_n(self) -> list[str]:
        return [f"e^{i + 1}" for i in range(self.n)]

    def without_normalisation(self) -> "RepContext":
        return RepContext(self.n, sympy.Integer(1))

    def nm_quotient(self) -> Quotient:
        with self._lock:
            if self._nm is None:
                self._nm = quotient_by(nm_relations(self.n), self.n * self.n)
                logger.debug("N (x)_R1 M at n=%d: ambient %d, quotient %d.",
                             self.n, self.n * self.n, self._nm.dim)
            return self._nm

    def space(self, w: SignWord, source: int) -> "TensorSpace":
        key = (w, source)
        nm = self.nm_quotient()
        with self._lock:
            if key not in self._spaces:
                self._spaces[key] = TensorSpace.build(self.n, w, source, nm)
            return self._spaces[key]


def make_context(n: int) -> RepContext:
    if n < 2:
        raise DomainError(f"Representation size must be at least 2, got {n}.")
    return RepContext(n, sympy.Rational(1, n))


def nm_relations(n: int) -> list[list[int]]:
    """
    Rows (h r) (x) g - h (x) (r g) for h = e^a, g = e_b, r = E_cd, written
    in the ambient basis e^x (x) e_y (coordinate x*n + y).
    """
    rows = []
    for a, b, c, d in itertools.product(range(n), repeat=4):
        row = [0] * (n * n)
        if a == c:
            row[d * n + b] += 1
        if d == b:
            row[a * n + c] -= 1
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# TensorSpace
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TensorSpace:
    word: SignWord
    source: int
    n: int
    blocks: tuple[Block, ...]

    @property
    def target(self) -> int:
        return target(self.word, self.source)

    @property
    def ambient_dim(self) -> int:
        if not self.word:
            return self.dim
        return self.n ** len(self.word)

    @property
    def dim(self) -> int:
        result = 1
        for block in self.blocks:
            result *= block.dim
        return result

    @property
    def is_ring(self) -> bool:
        return len(self.blocks) == 1 and self.blocks[0].kind is BlockKind.R1

    @classmethod
    def build(cls, n: int, w: SignWord, source: int, nm: Quotient) -> "TensorSpace":
        if not is_valid_from(w, source):
            raise DomainError(
                f"Q_{w.display} is the zero 1-morphism from source {source}; it has no tensor space."
            )
        idx = list(range(n))
        if len(w) == 0:
            if source == 0:
                return cls(w, source, n, (Block(BlockKind.R0, 0, 1, ((),), n=n),))
            reps = tuple(itertools.product(idx, idx))
            return cls(w, source, n, (Block(BlockKind.R1, 0, n * n, reps, n=n),))

        blocks = []
        i = 0
        if w[0] == PLUS:
            blocks.append(Block(BlockKind.M, 1, n, tuple((k,) for k in idx), n=n))
            i = 1
        while i < len(w):
            if w[i] == MINUS and i + 1 < len(w):
                reps = tuple(divmod(c, n) for c in nm.free)
                blocks.append(Block(BlockKind.NM, 2, nm.dim, reps, nm, n=n))
                i += 2
            else:
                blocks.append(Block(BlockKind.N, 1, n, tuple((k,) for k in idx), n=n))
                i += 1
        return cls(w, source, n, tuple(blocks))

    def junctions(self) -> list[int]:
        """Positions p where letters p, p+1 meet over R1."""
        return [p for p in range(len(self.word) - 1)
                if self.word[p] == MINUS and self.word[p + 1] == PLUS]

    @cached_property
    def relations(self) -> tuple[tuple[sympy.Rational, ...], ...]:
        """
        Middle-action relations of every R1 junction, as rows over the full
        ambient basis (coordinate of index tuple i is sum i_q n^(L-1-q)).
        """
        length = len(self.word)
        local = row_reduce(sympy.Matrix(nm_relations(self.n)))
        basis = [local.reduced.row(r) for r in range(local.rank)]
        rows = []
        for p in self.junctions():
            others = [q for q in range(length) if q not in (p, p + 1)]
            for relation in basis:
                for rest in itertools.product(range(self.n), repeat=length - 2):
                    index = dict(zip(others, rest))
                    row = [sympy.Integer(0)] * self.ambient_dim
                    for x, y in itertools.product(range(self.n), repeat=2):
                        coeff = relation[x * self.n + y]
                        if coeff == 0:
                            continue
                        index[p], index[p + 1] = x, y
                        row[_flat(index, length, self.n)] += coeff
                    rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def relation_rank(self) -> int:
        if not self.relations:
            return 0
        return quotient_by(list(self.relations), self.ambient_dim).relation_rank

    def block_dims(self) -> list[int]:
        return [b.dim for b in self.blocks]

    def lift(self, k: int) -> tuple[int, ...]:
        """Ambient representative of quotient basis vector k."""
        parts = []
        for block, digit in zip(self.blocks, _digits(k, self.block_dims())):
            parts.extend(block.representatives[digit])
        return tuple(parts)

    def project(self, element: Ambient) -> sympy.Matrix:
        column = sympy.zeros(self.dim, 1)
        dims = self.block_dims()
        for local, coeff in element.items():
            if coeff == 0:
                continue
            per_block = []
            offset = 0
            for block in self.blocks:
                width = 2 if block.kind is BlockKind.R1 else block.width
                per_block.append(block.project(local[offset:offset + width]))
                offset += width
            for combo in itertools.product(*per_block):
                index, value = 0, coeff
                for (digit, factor), size in zip(combo, dims):
                    index = index * size + digit
                    value *= factor
                column[index] += value
        return column

    def describe(self) -> str:
        return " (x) ".join(b.kind.value for b in self.blocks)


def _flat(index: dict[int, int], length: int, n: int) -> int:
    position = 0
    for q in range(length):
        position = position * n + index[q]
    return position


def _digits(k: int, sizes: list[int]) -> list[int]:
    digits = []
    for size in reversed(sizes):
        k, d = divmod(k, size)
        digits.append(d)
    return list(reversed(digits))


def space_of_word(ctx: RepContext, w: SignWord, source: int) -> TensorSpace:
    return ctx.space(w, source)
