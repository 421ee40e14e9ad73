"""
matchings.py
------------
Crossingless oriented matchings and the Morphism type built on them.

A Matching pairs every boundary point of a strip diagram with exactly one
other point. Points are tagged (side, index) with side 0 = bottom and
1 = top, indices counted from the left. Walking the boundary of the strip
(bottom left to right, then top right to left) turns a matching into a
bracket sequence, which is how planarity is checked and how matchings are
enumerated.

A Morphism is a finite rational combination of (Matching, Bubbles) keys
sharing one pair of boundary words.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import sympy

from .diagrams import (
    DiagramExpr,
    GeneratorSlice,
    Kind,
    cap,
    compose,
    cup,
    from_layers,
)
from .errors import BoundaryError, DomainError
from .signwords import EMPTY, LABELS, MINUS, PLUS, SignWord, is_valid_from, target

logger = logging.getLogger(__name__)

BOTTOM = 0
TOP = 1
_SIDE_NAMES = {BOTTOM: "bottom", TOP: "top"}

Endpoint = tuple[int, int]
Arc = tuple[Endpoint, Endpoint]


# ---------------------------------------------------------------------------
# Matching
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Matching:
    """
    A reduced crossingless oriented matching from `bottom` to `top`.

    `arcs` is kept sorted (each arc sorted internally, arcs sorted
    lexicographically), so dataclass equality and ordering are canonical.
    """

    bottom: SignWord
    top: SignWord
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        arcs = tuple(sorted(tuple(sorted(arc)) for arc in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        self._validate()

    # ---- validation -------------------------------------------------------

    def _sign(self, point: Endpoint) -> int:
        side, index = point
        return (self.bottom if side == BOTTOM else self.top)[index]

    def _circle_position(self, point: Endpoint) -> int:
        side, index = point
        if side == BOTTOM:
            return index
        return len(self.bottom) + len(self.top) - 1 - index

    def _validate(self) -> None:
        expected = {(BOTTOM, i) for i in range(len(self.bottom))}
        expected |= {(TOP, j) for j in range(len(self.top))}
        seen = [p for arc in self.arcs for p in arc]
        if len(seen) != len(set(seen)) or set(seen) != expected:
            raise DomainError(f"Arcs {self.arcs} do not cover every boundary point exactly once.")

        for a, b in self.arcs:
            same_side = a[0] == b[0]
            if same_side and self._sign(a) == self._sign(b):
                raise DomainError(f"U-turn {a}-{b} joins two equal signs.")
            if not same_side and self._sign(a) != self._sign(b):
                raise DomainError(f"Through strand {a}-{b} joins opposite signs.")

        # Bracket check along the boundary circle (balanced <=> crossingless).
        partner = {}
        for a, b in self.arcs:
            pa, pb = self._circle_position(a), self._circle_position(b)
            partner[pa], partner[pb] = pb, pa
        stack = []
        for position in range(len(partner)):
            if position < partner[position]:
                stack.append(partner[position])
            elif not stack or stack.pop() != position:
                raise DomainError(f"Arcs {self.arcs} cross.")

    # ---- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, w: SignWord) -> "Matching":
        return cls(w, w, tuple(((BOTTOM, i), (TOP, i)) for i in range(len(w))))

    @classmethod
    def empty(cls) -> "Matching":
        return cls(EMPTY, EMPTY, ())

    # ---- structure --------------------------------------------------------

    def through_strands(self) -> list[Arc]:
        return [arc for arc in self.arcs if arc[0][0] != arc[1][0]]

    def caps(self) -> list[Arc]:
        return [arc for arc in self.arcs if arc[0][0] == arc[1][0] == BOTTOM]

    def cups(self) -> list[Arc]:
        return [arc for arc in self.arcs if arc[0][0] == arc[1][0] == TOP]

    def is_identity(self) -> bool:
        return self.bottom == self.top and all(
            a == (BOTTOM, b[1]) and b[0] == TOP for a, b in self.arcs
        )

    def is_label_valid(self, source: int) -> bool:
        """Every region touches the boundary, so checking both words suffices."""
        return (
            is_valid_from(self.bottom, source)
            and is_valid_from(self.top, source)
            and target(self.bottom, source) == target(self.top, source)
        )

    def tensor(self, other: "Matching") -> "Matching":
        shifted = []
        for a, b in other.arcs:
            shifted.append(tuple(
                (side, index + (len(self.bottom) if side == BOTTOM else len(self.top)))
                for side, index in (a, b)
            ))
        return Matching(self.bottom + other.bottom, self.top + other.top, self.arcs + tuple(shifted))

    def arcs_json(self) -> list:
        return [
            [[_SIDE_NAMES[side], index + 1] for side, index in arc]
            for arc in self.arcs
        ]

    # ---- realisation as a diagram ------------------------------------------

    def to_diagram(self) -> DiagramExpr:
        """
        A cups/caps/identities expression realising this matching: caps are
        closed innermost first from the bottom row, then the cups are opened
        in the reverse order of closing them from the top row.
        """
        partner = {}
        for a, b in self.arcs:
            partner[a], partner[b] = b, a

        layers: list[GeneratorSlice] = []
        row = [(BOTTOM, i) for i in range(len(self.bottom))]
        while True:
            p = _adjacent_pair(row, partner)
            if p is None:
                break
            signs = SignWord((self._sign(row[p]), self._sign(row[p + 1])))
            layers.append(GeneratorSlice(Kind.CAP, signs, p))
            del row[p:p + 2]

        removals: list[GeneratorSlice] = []
        row = [(TOP, j) for j in range(len(self.top))]
        while True:
            p = _adjacent_pair(row, partner)
            if p is None:
                break
            signs = SignWord((self._sign(row[p]), self._sign(row[p + 1])))
            removals.append(GeneratorSlice(Kind.CUP, signs, p))
            del row[p:p + 2]
        layers.extend(reversed(removals))

        return from_layers(self.bottom, layers)


def _adjacent_pair(row: list[Endpoint], partner: dict) -> int | None:
    for p in range(len(row) - 1):
        if partner[row[p]] == row[p + 1]:
            return p
    return None


def canonical_matching(bottom: SignWord, top: SignWord) -> Matching:
    """
    The reduced matching between two words valid from a common source with
    a common target: the words are aligned on the right, the overlapping
    suffix is joined by through strands and the leftover prefix of the
    longer word is closed by adjacent U-turns.
    """
    m, k = len(bottom), len(top)
    t = min(m, k)
    if bottom[m - t:] != top[k - t:] or (m - k) % 2:
        raise DomainError(
            f"No reduced matching from {bottom.display!r} to {top.display!r}: "
            f"the words do not share an alternating suffix of equal parity."
        )
    arcs: list[Arc] = [((BOTTOM, m - t + i), (TOP, k - t + i)) for i in range(t)]
    side, extra = (BOTTOM, m - t) if m > k else (TOP, k - t)
    for j in range(0, extra, 2):
        arcs.append(((side, j), (side, j + 1)))
    return Matching(bottom, top, tuple(arcs))


def enumerate_matchings(bottom: SignWord, top: SignWord) -> Iterator[Matching]:
    """All crossingless orientation-consistent matchings from `bottom` to `top`."""
    m, k = len(bottom), len(top)
    points: list[Endpoint] = [(BOTTOM, i) for i in range(m)] + [(TOP, j) for j in reversed(range(k))]
    signs = [bottom[i] for i in range(m)] + [top[j] for j in reversed(range(k))]

    def compatible(x: int, y: int) -> bool:
        same_side = points[x][0] == points[y][0]
        return (signs[x] != signs[y]) if same_side else (signs[x] == signs[y])

    def place(lo: int, hi: int) -> Iterator[list[Arc]]:
        if lo >= hi:
            yield []
            return
        for mate in range(lo + 1, hi, 2):
            if not compatible(lo, mate):
                continue
            for inner in place(lo + 1, mate):
                for outer in place(mate + 1, hi):
                    yield [(points[lo], points[mate])] + inner + outer

    if (m + k) % 2:
        return
    for arcs in place(0, m + k):
        yield Matching(bottom, top, tuple(arcs))


# ---------------------------------------------------------------------------
# Bubbles and Morphism
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Bubbles:
    """
    Formal outermost closed loops of an unlabeled End(1) term.

    `cw` and `ccw` are names fixed by evaluation (cw is 1 at source 0, ccw
    at source 1); they do not describe the direction the loop is drawn in.
    """

    cw: int = 0
    ccw: int = 0

    def __add__(self, other: "Bubbles") -> "Bubbles":
        return Bubbles(self.cw + other.cw, self.ccw + other.ccw)

    def is_mixed(self) -> bool:
        return self.cw > 0 and self.ccw > 0

    def value_at(self, source: int) -> int:
        """Value of the monomial cw^a ccw^b once the outer region is labeled."""
        if source == 0:
            return int(self.ccw == 0)
        return int(self.cw == 0)

    def to_diagram(self) -> DiagramExpr | None:
        """Stacked loops: cw is cup(-+) ; cap(-+), ccw is cup(+-) ; cap(+-)."""
        parts = [cup("-+"), cap("-+")] * self.cw + [cup("+-"), cap("+-")] * self.ccw
        if not parts:
            return None
        result = parts[0]
        for part in parts[1:]:
            result = compose(result, part)
        return result


NO_BUBBLES = Bubbles()

TermKey = tuple[Matching, Bubbles]


@dataclass(frozen=True)
class Morphism:
    """
    A rational combination of matchings between `bottom` and `top`.

    `source` is the region label of the rightmost region when the morphism
    lives in the labeled 2-category, None in the unlabeled category. The
    zero morphism has no terms.
    """

    bottom: SignWord
    top: SignWord
    source: int | None = None
    terms: tuple[tuple[TermKey, sympy.Rational], ...] = field(default=())

    def __post_init__(self):
        merged: dict[TermKey, sympy.Rational] = {}
        for key, coeff in self.terms:
            matching, _ = key
            if matching.bottom != self.bottom or matching.top != self.top:
                raise BoundaryError("Term boundary differs from morphism boundary",
                                    f"{matching.bottom}->{matching.top}",
                                    f"{self.bottom}->{self.top}")
            merged[key] = merged.get(key, sympy.Integer(0)) + sympy.Rational(coeff)
        cleaned = tuple(sorted((k, c) for k, c in merged.items() if c != 0))
        object.__setattr__(self, "terms", cleaned)

    # ---- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, bottom: SignWord, top: SignWord, source: int | None = None) -> "Morphism":
        return cls(bottom, top, source, ())

    @classmethod
    def single(cls, matching: Matching, source: int | None = None,
               coeff=1, bubbles: Bubbles = NO_BUBBLES) -> "Morphism":
        return cls(matching.bottom, matching.top, source, (((matching, bubbles), sympy.Rational(coeff)),))

    @classmethod
    def identity(cls, w: SignWord, source: int | None = None) -> "Morphism":
        """Identity in normal form; zero when the object is zero."""
        if w.has_square():
            return cls.zero(w, w, source)
        if source is not None and not is_valid_from(w, source):
            return cls.zero(w, w, source)
        return cls.single(Matching.identity(w), source)

    # ---- linear structure -------------------------------------------------

    def term_map(self) -> dict[TermKey, sympy.Rational]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "Morphism") -> None:
        if (self.bottom, self.top) != (other.bottom, other.top):
            raise BoundaryError("Morphisms have different boundaries",
                                f"{self.bottom}->{self.top}", f"{other.bottom}->{other.top}")
        if self.source != other.source:
            raise DomainError(f"Cannot combine morphisms at sources {self.source} and {other.source}.")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check_compatible(other)
        return Morphism(self.bottom, self.top, self.source, self.terms + other.terms)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + other.scale(-1)

    def scale(self, factor) -> "Morphism":
        factor = sympy.Rational(factor)
        return Morphism(self.bottom, self.top, self.source,
                        tuple((key, factor * coeff) for key, coeff in self.terms))

    def is_end_of_unit(self) -> bool:
        return len(self.bottom) == 0 and len(self.top) == 0

    def label_values(self) -> tuple[sympy.Rational, sympy.Rational]:
        """
        For an unlabeled End(1) morphism: its value at source 0 and at
        source 1. Two such morphisms are equal modulo cw + ccw = id exactly
        when these pairs agree.
        """
        values = []
        for s in LABELS:
            values.append(sum(
                (coeff * bubbles.value_at(s) for (_, bubbles), coeff in self.terms),
                sympy.Integer(0),
            ))
        return values[0], values[1]

    def scalar(self) -> sympy.Rational:
        """Coefficient of the empty matching without bubbles."""
        return self.term_map().get((Matching.empty(), NO_BUBBLES), sympy.Integer(0)) \
            if self.is_end_of_unit() else sympy.Integer(0)

    # ---- emission ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "bottom": self.bottom.text,
            "top": self.top.text,
            "source": self.source,
            "terms": [
                {
                    "coeff": str(coeff),
                    "arcs": matching.arcs_json(),
                    "bubbles": {"cw": bubbles.cw, "ccw": bubbles.ccw},
                }
                for (matching, bubbles), coeff in self.terms
            ],
        }

    def term_diagrams(self) -> Iterable[tuple[DiagramExpr, sympy.Rational]]:
        """Each term realised as its own diagram expression."""
        for (matching, bubbles), coeff in self.terms:
            diagram = matching.to_diagram()
            loops = bubbles.to_diagram()
            if loops is not None:
                if not self.is_end_of_unit():
                    raise DomainError("Formal bubbles only occur on endomorphisms of the unit object.")
                diagram = compose(diagram, loops)
            yield diagram, coeff


__all__ = [
    "BOTTOM", "TOP", "Matching", "canonical_matching", "enumerate_matchings",
    "Bubbles", "NO_BUBBLES", "Morphism", "PLUS", "MINUS",
]
