"""
normalize.py
------------
Normal forms of string diagrams.

The diagram is flattened into single-generator layers and walked bottom to
top. Every row between two layers is a sign word, which is all the local
relations need:

    - a crossing anywhere kills the diagram
    - a row containing "++" or "--" passes through the zero object
    - with a source label, a row whose region labels leave {0,1} is zero
    - closed loops are traced with a union-find over strand points, and
      their nesting with a second union-find over regions

Because all label-valid matchings between two valid words agree, the
surviving term is always the reduced matching of the boundary words. The
union-find pass is still needed for the empty-boundary case, where
outermost loops of the unlabeled category stay formal.

Public API:
    normalize(d, source_label)        → Morphism
    trace(d)                          → Trace (raw matching and loops)
    equal_morphisms(a, b, source)     → bool
    compose_morphisms(lower, upper)   → Morphism
    tensor_morphisms(left, right)     → Morphism
    hom_dim(bottom, top, source)      → int
    hom_basis(bottom, top, source)    → list[Matching]
    matching_to_diagram(m)            → DiagramExpr
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .diagrams import DiagramExpr, GeneratorSlice, Kind, compose, flatten, rows_of, tensor
from .errors import BoundaryError, DomainError
from .matchings import (
    BOTTOM,
    NO_BUBBLES,
    TOP,
    Bubbles,
    Matching,
    Morphism,
    canonical_matching,
    enumerate_matchings,
)
from .signwords import LABELS, MINUS, SignWord, is_valid_from, region_labels, target

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Union-find
# ---------------------------------------------------------------------------

class _DisjointSets:
    def __init__(self):
        self._parent: dict = {}

    def find(self, x):
        self._parent.setdefault(x, x)
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self._parent[max(ra, rb)] = min(ra, rb)


# ---------------------------------------------------------------------------
# Tracing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Loop:
    """A closed component: its leftmost point in some row and whether it is outermost."""

    row: int
    index: int
    # "cw" names the label behaviour (interior = exterior + 1), not the drawing:
    # the leftmost strand of the loop reads -.
    clockwise: bool
    outermost: bool


@dataclass
class Trace:
    """Raw composition of a flattened diagram, before any relation is applied."""

    rows: list[SignWord]
    layers: list[GeneratorSlice]
    matching: Matching | None
    loops: list[Loop] = field(default_factory=list)

    @property
    def has_crossing(self) -> bool:
        return any(layer.kind is Kind.CROSSING for layer in self.layers)

    def loop_interior_label(self, loop: Loop, source: int) -> int:
        return region_labels(self.rows[loop.row], source)[loop.index + 1]


def _connect_layer(points: _DisjointSets, regions: _DisjointSets,
                   r: int, row: SignWord, layer: GeneratorSlice) -> None:
    """Join the points and regions of rows r and r + 1 across one layer."""
    p = layer.position
    wb, wt = len(layer.bottom), len(layer.top)

    for i in range(p):
        points.union((r, i), (r + 1, i))
    for i in range(p + wb, len(row)):
        points.union((r, i), (r + 1, i - wb + wt))

    if layer.kind is Kind.CUP:
        points.union((r + 1, p), (r + 1, p + 1))
    elif layer.kind is Kind.CAP:
        points.union((r, p), (r, p + 1))
    elif layer.kind is Kind.CROSSING:
        points.union((r, p), (r + 1, p + 1))
        points.union((r, p + 1), (r + 1, p))

    # Regions left of the generator, then regions right of it.
    for k in range(p + 1):
        regions.union((r, k), (r + 1, k))
    for k in range(p + wb, len(row) + 1):
        regions.union((r, k), (r + 1, k - wb + wt))


def trace(d: DiagramExpr) -> Trace:
    """
    Trace every strand of `d` through its layers.

    The returned matching joins the boundary points the way the drawn
    strands do; it is None when a crossing makes the result non-planar.
    """
    bottom, layers = flatten(d)
    rows = rows_of(bottom, layers)
    points, regions = _DisjointSets(), _DisjointSets()
    for r, row in enumerate(rows):
        for i in range(len(row)):
            points.find((r, i))
        for k in range(len(row) + 1):
            regions.find((r, k))
    for r, layer in enumerate(layers):
        _connect_layer(points, regions, r, rows[r], layer)

    last = len(rows) - 1
    boundary = {}
    for i in range(len(rows[0])):
        boundary.setdefault(points.find((0, i)), []).append((BOTTOM, i))
    for j in range(len(rows[last])):
        boundary.setdefault(points.find((last, j)), []).append((TOP, j))

    # Leftmost point of each closed component, taken in its lowest row.
    first_seen: dict = {}
    for r, row in enumerate(rows):
        for i in range(len(row)):
            root = points.find((r, i))
            if root not in boundary and root not in first_seen:
                first_seen[root] = (r, i)

    outer = regions.find((0, 0))
    loops = []
    for r, i in first_seen.values():
        loops.append(Loop(
            row=r,
            index=i,
            clockwise=rows[r][i] == MINUS,
            outermost=regions.find((r, i)) == outer,
        ))

    matching = None
    arcs = [tuple(ends) for ends in boundary.values()]
    try:
        matching = Matching(rows[0], rows[last], tuple(arcs))
    except DomainError:
        logger.debug("Traced strands do not form a planar oriented matching.")
    return Trace(rows, layers, matching, loops)


# ---------------------------------------------------------------------------
# Normalisation
# ---------------------------------------------------------------------------

def _admissible(rows: list[SignWord]) -> list[int]:
    return [s for s in LABELS if all(is_valid_from(row, s) for row in rows)]


def normalize(d: DiagramExpr, source_label: int | None = None) -> Morphism:
    """
    Normal form of `d`.

    With `source_label` the diagram is read in the labeled 2-category;
    without it, in the unlabeled category, where the curl relations are
    applied through the unique admissible labeling and free outermost
    loops on an empty boundary are kept as formal bubbles.
    """
    if source_label is not None and source_label not in LABELS:
        raise DomainError(f"Region label must be 0 or 1, got {source_label}.")

    t = trace(d)
    bottom, top = t.rows[0], t.rows[-1]
    zero = Morphism.zero(bottom, top, source_label)

    if t.has_crossing:
        return zero
    if any(row.has_square() for row in t.rows):
        return zero

    if source_label is not None:
        if not all(is_valid_from(row, source_label) for row in t.rows):
            return zero
        for loop in t.loops:
            if t.loop_interior_label(loop, source_label) not in LABELS:
                return zero
        return Morphism.single(canonical_matching(bottom, top), source_label)

    sources = _admissible(t.rows)
    if not sources:
        return zero
    s = sources[0]
    for loop in t.loops:
        if not loop.outermost and t.loop_interior_label(loop, s) not in LABELS:
            return zero

    matching = canonical_matching(bottom, top)
    if len(bottom) or len(top):
        return Morphism.single(matching)

    outermost = [loop for loop in t.loops if loop.outermost]
    bubbles = Bubbles(
        cw=sum(1 for loop in outermost if loop.clockwise),
        ccw=sum(1 for loop in outermost if not loop.clockwise),
    )
    if bubbles.is_mixed():
        return zero
    return Morphism.single(matching, bubbles=bubbles)


def _same(a: Morphism, b: Morphism) -> bool:
    if a.source is None and a.is_end_of_unit():
        return a.label_values() == b.label_values()
    return a == b


def same_morphism(a: Morphism, b: Morphism) -> bool:
    """Equality of normal forms, applying cw + ccw = id on unlabeled End(1)."""
    if (a.bottom, a.top) != (b.bottom, b.top):
        raise BoundaryError("Morphisms have different boundaries",
                            f"{a.bottom}->{a.top}", f"{b.bottom}->{b.top}")
    return _same(a, b)


def equal_morphisms(a: DiagramExpr, b: DiagramExpr, source_label: int | None = None) -> bool:
    if a.bottom != b.bottom:
        raise BoundaryError("Diagrams have different bottom words", a.bottom.text, b.bottom.text)
    if a.top != b.top:
        raise BoundaryError("Diagrams have different top words", a.top.text, b.top.text)
    return _same(normalize(a, source_label), normalize(b, source_label))


# ---------------------------------------------------------------------------
# Morphism composition and tensor
# ---------------------------------------------------------------------------

def _bilinear(a: Morphism, b: Morphism, combine, bottom: SignWord, top: SignWord) -> Morphism:
    if a.source != b.source:
        raise DomainError(f"Cannot combine morphisms at sources {a.source} and {b.source}.")
    result = Morphism.zero(bottom, top, a.source)
    for da, ca in a.term_diagrams():
        for db, cb in b.term_diagrams():
            result = result + normalize(combine(da, db), a.source).scale(ca * cb)
    return result


def compose_morphisms(lower: Morphism, upper: Morphism) -> Morphism:
    """`upper` after `lower`."""
    if lower.top != upper.bottom:
        raise BoundaryError("Cannot compose morphisms", lower.top.text, upper.bottom.text)
    return _bilinear(lower, upper, compose, lower.bottom, upper.top)


def tensor_morphisms(left: Morphism, right: Morphism) -> Morphism:
    return _bilinear(left, right, tensor, left.bottom + right.bottom, left.top + right.top)


# ---------------------------------------------------------------------------
# Hom spaces
# ---------------------------------------------------------------------------

def hom_basis(bottom: SignWord, top: SignWord, source_label: int) -> list[Matching]:
    """
    Reduced matchings spanning Hom(bottom, top) in the labeled 2-category.

    Every label-valid matching is enumerated and replaced by its reduced
    form; all of them coincide, so the basis has at most one element.
    """
    if source_label not in LABELS:
        raise DomainError(f"Region label must be 0 or 1, got {source_label}.")
    if not (is_valid_from(bottom, source_label) and is_valid_from(top, source_label)):
        return []
    if target(bottom, source_label) != target(top, source_label):
        return []
    reduced = {
        canonical_matching(bottom, top)
        for m in enumerate_matchings(bottom, top)
        if m.is_label_valid(source_label)
    }
    return sorted(reduced)


def hom_dim(bottom: SignWord, top: SignWord, source_label: int) -> int:
    return len(hom_basis(bottom, top, source_label))


def matching_to_diagram(m: Matching, bubbles: Bubbles = NO_BUBBLES) -> DiagramExpr:
    diagram = m.to_diagram()
    loops = bubbles.to_diagram()
    if loops is None:
        return diagram
    if len(m.bottom) or len(m.top):
        raise DomainError("Formal bubbles only occur on endomorphisms of the unit object.")
    return compose(diagram, loops)


__all__ = [
    "Loop", "Trace", "trace", "normalize", "same_morphism", "equal_morphisms",
    "compose_morphisms", "tensor_morphisms", "hom_basis", "hom_dim",
    "matching_to_diagram",
]
