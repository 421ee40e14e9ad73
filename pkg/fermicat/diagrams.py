"""
diagrams.py
-----------
String-diagram expressions: generator slices (identity strand, cup, cap,
crossing) combined by vertical composition (bottom to top) and horizontal
tensor (left to right).

An expression is only a description. `normalize.normalize` gives it a
value in the category, `bimodule.functor.eval_diagram` gives it a value in
the matrix-bimodule representation. Both walk the flattened form produced
by `flatten`, which has exactly one non-identity generator per layer.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field, replace

from .errors import BoundaryError, DomainError
from .signwords import EMPTY, MINUS, PLUS, SignWord

logger = logging.getLogger(__name__)


class Kind(enum.Enum):
    IDENTITY = "id"
    CUP = "cup"
    CAP = "cap"
    CROSSING = "x"


# ---------------------------------------------------------------------------
# Generator slices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSlice:
    """
    One generator.

    `signs` are the signs of the strands it touches: one sign for an
    identity strand, an opposite pair for a cup or cap (left to right), any
    pair for a crossing (read along the bottom). `position` is the index of
    the leftmost strand it occupies within its row; it is only meaningful
    on slices produced by `flatten`.
    """

    kind: Kind
    signs: SignWord
    position: int = 0

    def __post_init__(self):
        expected = 1 if self.kind is Kind.IDENTITY else 2
        if len(self.signs) != expected:
            raise DomainError(
                f"{self.kind.value} takes {expected} sign(s), got {self.signs.display!r}."
            )
        if self.kind in (Kind.CUP, Kind.CAP) and self.signs[0] == self.signs[1]:
            raise DomainError(
                f"{self.kind.value}({self.signs}) needs one '+' and one '-' so the "
                f"orientation can flow around the turn."
            )

    @property
    def bottom(self) -> SignWord:
        if self.kind is Kind.CUP:
            return EMPTY
        return self.signs

    @property
    def top(self) -> SignWord:
        if self.kind is Kind.CAP:
            return EMPTY
        if self.kind is Kind.CROSSING:
            return SignWord((self.signs[1], self.signs[0]))
        return self.signs

    def at(self, position: int) -> "GeneratorSlice":
        return replace(self, position=position)

    def __str__(self) -> str:
        return f"{self.kind.value}({self.signs})"


# ---------------------------------------------------------------------------
# Expressions
# ---------------------------------------------------------------------------

class DiagramExpr:
    """Base class; every node caches its bottom and top words."""

    bottom: SignWord
    top: SignWord

    def __matmul__(self, other: "DiagramExpr") -> "DiagramExpr":
        return tensor(self, other)

    def __rshift__(self, other: "DiagramExpr") -> "DiagramExpr":
        return compose(self, other)

    def has_crossing(self) -> bool:
        return any(s.kind is Kind.CROSSING for s in flatten(self)[1])


@dataclass(frozen=True)
class Empty(DiagramExpr):
    """The empty diagram: identity 2-morphism of the unit object."""

    bottom: SignWord = field(default=EMPTY, init=False)
    top: SignWord = field(default=EMPTY, init=False)


@dataclass(frozen=True)
class Generator(DiagramExpr):
    slice: GeneratorSlice
    bottom: SignWord = field(init=False, compare=False)
    top: SignWord = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "bottom", self.slice.bottom)
        object.__setattr__(self, "top", self.slice.top)


@dataclass(frozen=True)
class Compose(DiagramExpr):
    """`lower` first, then `upper` stacked on top of it."""

    lower: DiagramExpr
    upper: DiagramExpr
    bottom: SignWord = field(init=False, compare=False)
    top: SignWord = field(init=False, compare=False)

    def __post_init__(self):
        if self.lower.top != self.upper.bottom:
            raise BoundaryError(
                "Cannot compose: the top word of the lower diagram must equal the bottom word of the upper one",
                self.lower.top.text,
                self.upper.bottom.text,
            )
        object.__setattr__(self, "bottom", self.lower.bottom)
        object.__setattr__(self, "top", self.upper.top)


@dataclass(frozen=True)
class Tensor(DiagramExpr):
    """`left` placed to the left of `right`."""

    left: DiagramExpr
    right: DiagramExpr
    bottom: SignWord = field(init=False, compare=False)
    top: SignWord = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "bottom", self.left.bottom + self.right.bottom)
        object.__setattr__(self, "top", self.left.top + self.right.top)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def generator(kind: Kind, signs: SignWord | str) -> Generator:
    if isinstance(signs, str):
        signs = SignWord.parse(signs)
    return Generator(GeneratorSlice(kind, signs))


def cup(signs: SignWord | str) -> Generator:
    return generator(Kind.CUP, signs)


def cap(signs: SignWord | str) -> Generator:
    return generator(Kind.CAP, signs)


def crossing(signs: SignWord | str) -> Generator:
    return generator(Kind.CROSSING, signs)


def identity_diagram(w: SignWord | str) -> DiagramExpr:
    """Parallel identity strands on `w`; the empty word gives the empty diagram."""
    if isinstance(w, str):
        w = SignWord.parse(w)
    if len(w) == 0:
        return Empty()
    result: DiagramExpr = generator(Kind.IDENTITY, w[:1])
    for s in w.signs[1:]:
        result = Tensor(result, generator(Kind.IDENTITY, SignWord((s,))))
    return result


def tensor(a: DiagramExpr, b: DiagramExpr) -> DiagramExpr:
    return Tensor(a, b)


def compose(lower: DiagramExpr, upper: DiagramExpr) -> DiagramExpr:
    """Stack `upper` on `lower`; raises BoundaryError on an interface mismatch."""
    return Compose(lower, upper)


def compose_all(*parts: DiagramExpr) -> DiagramExpr:
    result = parts[0]
    for part in parts[1:]:
        result = compose(result, part)
    return result


def padded(left: SignWord, d: DiagramExpr, right: SignWord) -> DiagramExpr:
    """id(left) * d * id(right), skipping empty identities."""
    result = d
    if len(left):
        result = Tensor(identity_diagram(left), result)
    if len(right):
        result = Tensor(result, identity_diagram(right))
    return result


# ---------------------------------------------------------------------------
# Flattening
# ---------------------------------------------------------------------------

def flatten(d: DiagramExpr) -> tuple[SignWord, list[GeneratorSlice]]:
    """
    Bottom word plus the non-identity generators of `d`, one per layer,
    bottom to top, each carrying its absolute position in its row.

    A tensor a * b is read as (a * id) ; (id * b).
    """
    return d.bottom, list(_layers(d, 0))


def _layers(d: DiagramExpr, offset: int):
    if isinstance(d, Empty):
        return
    if isinstance(d, Generator):
        if d.slice.kind is not Kind.IDENTITY:
            yield d.slice.at(offset)
        return
    if isinstance(d, Compose):
        yield from _layers(d.lower, offset)
        yield from _layers(d.upper, offset)
        return
    if isinstance(d, Tensor):
        yield from _layers(d.left, offset)
        yield from _layers(d.right, offset + len(d.left.top))
        return
    raise TypeError(f"Unknown diagram node {type(d).__name__}")


def apply_layer(row: SignWord, layer: GeneratorSlice) -> SignWord:
    p = layer.position
    width = len(layer.bottom)
    if row[p:p + width] != layer.bottom:
        raise BoundaryError(
            f"Layer {layer} does not fit row at position {p}", row.text, layer.bottom.text
        )
    return row[:p] + layer.top + row[p + width:]


def rows_of(bottom: SignWord, layers: list[GeneratorSlice]) -> list[SignWord]:
    """Every row of the flattened diagram, bottom row first."""
    rows = [bottom]
    for layer in layers:
        rows.append(apply_layer(rows[-1], layer))
    return rows


def from_layers(bottom: SignWord, layers: list[GeneratorSlice]) -> DiagramExpr:
    """Rebuild an expression from flattened layers (inverse of `flatten` up to layout)."""
    result = identity_diagram(bottom)
    row = bottom
    for layer in layers:
        p = layer.position
        piece = padded(row[:p], Generator(replace(layer, position=0)), row[p + len(layer.bottom):])
        result = compose(result, piece)
        row = apply_layer(row, layer)
    return result


__all__ = [
    "Kind", "GeneratorSlice", "DiagramExpr", "Empty", "Generator", "Compose", "Tensor",
    "generator", "cup", "cap", "crossing", "identity_diagram", "tensor", "compose",
    "compose_all", "padded", "flatten", "apply_layer", "rows_of", "from_layers",
    "PLUS", "MINUS",
]
