"""
functor.py
----------
Diagrams evaluated as bimodule maps.

Each cup or cap acts on ambient elements by the formula of its U-turn:

    f0  cap(-+)   e^a (x) e_b  ->  delta_ab
    g0  cup(-+)   1            ->  (1/n) sum_i e^i (x) e_i
    f1  cap(+-)   e_a (x) e^b  ->  E_ab
    g1  cup(+-)   1            ->  sum_i e_i (x) e^i

E_ab produced by f1 is multiplied into the neighbouring letter (the row on
its left if there is one, else the column on its right), or kept as an
element of R1 when the row becomes empty. Layer matrices are computed in
the quotient bases by lifting each basis vector, applying the formula and
projecting. Crossings, and rows whose labels leave {0,1}, give zero maps.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import sympy

from ..diagrams import DiagramExpr, GeneratorSlice, Kind, flatten, rows_of
from ..errors import DomainError
from ..matchings import Morphism
from ..signwords import SignWord, is_valid_from
from .spaces import Ambient, RepContext, TensorSpace

logger = logging.getLogger(__name__)

UTURNS = ("f0", "g0", "f1", "g1")

_UTURN_GENERATORS = {
    "f0": (Kind.CAP, "-+", 0),
    "g0": (Kind.CUP, "-+", 0),
    "f1": (Kind.CAP, "+-", 1),
    "g1": (Kind.CUP, "+-", 1),
}


@dataclass(frozen=True)
class LinearMap:
    domain: TensorSpace
    codomain: TensorSpace
    matrix: sympy.Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.dim, self.domain.dim):
            raise DomainError(
                f"Matrix of shape {self.matrix.shape} does not fit "
                f"{self.domain.dim}-dimensional domain and {self.codomain.dim}-dimensional codomain."
            )

    def then(self, other: "LinearMap") -> "LinearMap":
        """`other` after `self`."""
        return LinearMap(self.domain, other.codomain, other.matrix * self.matrix)

    def is_identity(self) -> bool:
        return self.domain.dim == self.codomain.dim and self.matrix == sympy.eye(self.domain.dim)


# ---------------------------------------------------------------------------
# Ambient action of one layer
# ---------------------------------------------------------------------------

def _add(out: Ambient, key: tuple[int, ...], value) -> None:
    if value != 0:
        out[key] = out.get(key, sympy.Integer(0)) + value


def apply_ambient(ctx: RepContext, row: SignWord, source: int,
                  layer: GeneratorSlice, element: Ambient) -> Ambient:
    """Push an ambient element of `row` through one layer."""
    p = layer.position
    n = ctx.n
    out: Ambient = {}
    ring_row = len(row) == 0 and source == 1

    for t, coeff in element.items():
        if layer.kind is Kind.CROSSING:
            return {}

        if layer.kind is Kind.CAP and layer.signs.text == "-+":
            if t[p] == t[p + 1]:
                _add(out, t[:p] + t[p + 2:], coeff)

        elif layer.kind is Kind.CUP and layer.signs.text == "-+":
            for i in range(n):
                _add(out, t[:p] + (i, i) + t[p:], coeff * ctx.g0_factor)

        elif layer.kind is Kind.CAP:
            a, b = t[p], t[p + 1]
            if p > 0:
                # e^c E_ab = delta_ca e^b
                if t[p - 1] == a:
                    _add(out, t[:p - 1] + (b,) + t[p + 2:], coeff)
            elif p + 2 < len(row):
                # E_ab e_c = delta_bc e_a
                if t[p + 2] == b:
                    _add(out, (a,) + t[p + 3:], coeff)
            else:
                _add(out, (a, b), coeff)

        elif layer.kind is Kind.CUP:
            if ring_row:
                _add(out, t, coeff)
            else:
                for i in range(n):
                    _add(out, t[:p] + (i, i) + t[p:], coeff)

        else:
            _add(out, t, coeff)
    return out


def layer_map(ctx: RepContext, row: SignWord, source: int, layer: GeneratorSlice) -> LinearMap:
    next_row = row[:layer.position] + layer.top + row[layer.position + len(layer.bottom):]
    domain = ctx.space(row, source)
    codomain = ctx.space(next_row, source)
    matrix = sympy.zeros(codomain.dim, domain.dim)
    if layer.kind is not Kind.CROSSING:
        for k in range(domain.dim):
            image = apply_ambient(ctx, row, source, layer, {domain.lift(k): sympy.Integer(1)})
            matrix[:, k] = codomain.project(image)
    return LinearMap(domain, codomain, matrix)


# ---------------------------------------------------------------------------
# The 2-functor
# ---------------------------------------------------------------------------

def uturn_map(ctx: RepContext, kind: str) -> LinearMap:
    if kind not in _UTURN_GENERATORS:
        raise DomainError(f"Unknown U-turn {kind!r}; expected one of {', '.join(UTURNS)}.")
    gen_kind, signs, source = _UTURN_GENERATORS[kind]
    layer = GeneratorSlice(gen_kind, SignWord.parse(signs), 0)
    return layer_map(ctx, layer.bottom, source, layer)


def eval_diagram(ctx: RepContext, d: DiagramExpr, source: int) -> LinearMap:
    for end in (d.bottom, d.top):
        if not is_valid_from(end, source):
            raise DomainError(
                f"Boundary word {end.display!r} is not valid from source {source}."
            )
    bottom, layers = flatten(d)
    domain = ctx.space(d.bottom, source)
    codomain = ctx.space(d.top, source)

    rows = rows_of(bottom, layers)
    if any(layer.kind is Kind.CROSSING for layer in layers) or not all(
        is_valid_from(row, source) for row in rows
    ):
        return LinearMap(domain, codomain, sympy.zeros(codomain.dim, domain.dim))

    result = LinearMap(domain, domain, sympy.eye(domain.dim))
    for row, layer in zip(rows, layers):
        result = result.then(layer_map(ctx, row, source, layer))
    return result


def eval_morphism(ctx: RepContext, m: Morphism, source: int) -> LinearMap:
    """Sum of the evaluated term diagrams of a normal form."""
    domain = ctx.space(m.bottom, source)
    codomain = ctx.space(m.top, source)
    matrix = sympy.zeros(codomain.dim, domain.dim)
    for diagram, coeff in m.term_diagrams():
        matrix += coeff * eval_diagram(ctx, diagram, source).matrix
    return LinearMap(domain, codomain, matrix)
