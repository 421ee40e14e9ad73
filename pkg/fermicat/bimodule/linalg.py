"""
linalg.py
---------
Exact rational linear algebra on top of sympy matrices.

Quotients V / W are described by the reduced row-echelon form of a matrix
whose rows span W: the non-pivot columns index the quotient basis, and an
ambient vector is projected by clearing its pivot coordinates with the
echelon rows.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import sympy

logger = logging.getLogger(__name__)

RationalMatrix = sympy.Matrix


@dataclass(frozen=True)
class RowReduction:
    reduced: sympy.Matrix
    rank: int
    pivots: tuple[int, ...]
    kernel: tuple[sympy.Matrix, ...]


def row_reduce(m: sympy.Matrix) -> RowReduction:
    """Reduced row-echelon form, rank, pivot columns and a kernel basis."""
    reduced, pivots = m.rref()
    return RowReduction(reduced, len(pivots), tuple(pivots), tuple(m.nullspace()))


@dataclass(frozen=True)
class Quotient:
    """
    V / W with V of dimension `ambient_dim`.

    `free` lists the ambient coordinates whose classes form the quotient
    basis; `projection` is the (len(free) x ambient_dim) matrix sending an
    ambient vector to its quotient coordinates.
    """

    ambient_dim: int
    relation_rank: int
    free: tuple[int, ...]
    projection: sympy.Matrix

    @property
    def dim(self) -> int:
        return len(self.free)


def quotient_by(relations: list[list], ambient_dim: int) -> Quotient:
    """Quotient of Q^ambient_dim by the span of `relations` (each a row of length ambient_dim)."""
    distinct = sorted({tuple(row) for row in relations if any(row)})
    if not distinct:
        return Quotient(ambient_dim, 0, tuple(range(ambient_dim)), sympy.eye(ambient_dim))

    rr = row_reduce(sympy.Matrix(distinct))
    pivots = set(rr.pivots)
    free = tuple(c for c in range(ambient_dim) if c not in pivots)
    free_pos = {c: k for k, c in enumerate(free)}

    projection = sympy.zeros(len(free), ambient_dim)
    for col in range(ambient_dim):
        if col in free_pos:
            projection[free_pos[col], col] = 1
            continue
        # e_col = row_i - (non-pivot tail of row_i) modulo W, where row_i has its pivot at col.
        i = rr.pivots.index(col)
        for f in free:
            value = rr.reduced[i, f]
            if value != 0:
                projection[free_pos[f], col] = -value

    logger.debug("Quotient of dimension %d by %d relation(s) of rank %d.",
                 len(free), len(distinct), rr.rank)
    return Quotient(ambient_dim, rr.rank, free, projection)


def kron(a: sympy.Matrix, b: sympy.Matrix) -> sympy.Matrix:
    return sympy.Matrix(sympy.kronecker_product(a, b))


def is_identity(m: sympy.Matrix) -> bool:
    return m.is_square and m == sympy.eye(m.rows)
