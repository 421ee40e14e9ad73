"""
lang.py
-------
The textual diagram language.

Grammar (whitespace is ignored between tokens):

    expr   := term (';' term)*          vertical composition, bottom to top
    term   := factor ('*' factor)*      tensor, left to right
    factor := 'id(' word ')' | 'cup(' pair ')' | 'cap(' pair ')'
            | 'x(' pair ')' | '(' expr ')'
    word   := [+-]* | '1'
    pair   := two signs; opposite signs for cup and cap

Examples:
    cup(-+) ; cap(-+)                 the "cw" bubble (1 at source 0)
    id(+) * cup(-+) ; cap(+-) * id(+) the zig-zag on an upward strand

Public API:
    parse_word(text)       → SignWord
    parse_diagram(text)    → DiagramExpr
    pretty_print(e)        → str
    render_ascii(m)        → str
    render_json(m)         → dict
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from .diagrams import (
    Compose,
    DiagramExpr,
    Empty,
    Generator,
    Kind,
    Tensor,
    compose,
    generator,
    identity_diagram,
    tensor,
)
from .errors import BoundaryError, OrientationError, ParseError, SourceSpan
from .matchings import BOTTOM, TOP, Morphism
from .signwords import EMPTY, PLUS, SignWord, word_from_string

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def parse_word(text: str) -> SignWord:
    """A sign word; the literal "1" is the empty word."""
    if text.strip() == "1":
        return EMPTY
    return word_from_string(text)


# ---------------------------------------------------------------------------
# Tokens
# ---------------------------------------------------------------------------

_NAMES = {"id": Kind.IDENTITY, "cup": Kind.CUP, "cap": Kind.CAP, "x": Kind.CROSSING}

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_]+)|(?P<word>[+\-−1]+)|(?P<punct>[();*]))")


@dataclass(frozen=True)
class Token:
    kind: str           # "name", "word", "punct" or "end"
    text: str
    span: SourceSpan


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"Unexpected character {text[start]!r}", SourceSpan(start, start + 1), text)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), SourceSpan(m.start(kind), m.end(kind))))
        pos = m.end()
    tokens.append(Token("end", "", SourceSpan(len(text), len(text))))
    return tokens


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.i]

    def _advance(self) -> Token:
        token = self.tokens[self.i]
        self.i += 1
        return token

    def _error(self, message: str, token: Token | None = None) -> ParseError:
        token = token or self.current
        span = token.span
        if span.start == span.end and span.start > 0:
            span = SourceSpan(span.start - 1, span.end)
        return ParseError(message, span, self.text)

    def _expect(self, punct: str) -> Token:
        token = self.current
        if token.kind != "punct" or token.text != punct:
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise self._error(f"Expected {punct!r}, found {found}")
        return self._advance()

    def parse(self) -> DiagramExpr:
        result = self.expr()
        if self.current.kind != "end":
            raise self._error(f"Unexpected {self.current.text!r} after a complete expression")
        return result

    def expr(self) -> DiagramExpr:
        result = self.term()
        while self.current.kind == "punct" and self.current.text == ";":
            semicolon = self._advance()
            upper = self.term()
            if result.top != upper.bottom:
                raise BoundaryError(
                    "Cannot compose: the top word below ';' must equal the bottom word above it",
                    result.top.text, upper.bottom.text, semicolon.span,
                )
            result = compose(result, upper)
        return result

    def term(self) -> DiagramExpr:
        result = self.factor()
        while self.current.kind == "punct" and self.current.text == "*":
            self._advance()
            result = tensor(result, self.factor())
        return result

    def factor(self) -> DiagramExpr:
        token = self.current
        if token.kind == "punct" and token.text == "(":
            self._advance()
            inner = self.expr()
            self._expect(")")
            return inner
        if token.kind != "name":
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise self._error(f"Expected a generator or '(', found {found}")
        if token.text not in _NAMES:
            raise self._error(
                f"Unknown generator {token.text!r}; expected one of id, cup, cap, x", token
            )
        kind = _NAMES[self._advance().text]
        self._expect("(")
        if self.current.kind == "word":
            arg = self._advance()
        else:
            arg = Token("word", "", SourceSpan(self.current.span.start, self.current.span.start))
        self._expect(")")
        return self._generator(kind, token, arg)

    def _generator(self, kind: Kind, name: Token, arg: Token) -> DiagramExpr:
        try:
            signs = parse_word(arg.text)
        except ParseError as e:
            offset = arg.span.start + e.span.start
            raise ParseError(
                f"Unexpected character {arg.text[e.span.start]!r} in sign word",
                SourceSpan(offset, offset + 1), self.text,
            ) from e

        if kind is Kind.IDENTITY:
            return identity_diagram(signs)

        span = SourceSpan(name.span.start, arg.span.end + 1)
        if len(signs) != 2:
            raise ParseError(
                f"{name.text}(...) takes exactly two signs, got {signs.display!r}", span, self.text
            )
        if kind in (Kind.CUP, Kind.CAP) and signs[0] == signs[1]:
            raise OrientationError(
                f"{name.text}({signs}) needs one '+' and one '-' so the orientation can flow around the turn",
                span, self.text,
            )
        return generator(kind, signs)


def parse_diagram(text: str) -> DiagramExpr:
    """
    Parse a diagram expression.

    Raises:
        ParseError: syntax errors, with the span of the offending token.
        OrientationError: a cup or cap with two equal signs.
        BoundaryError: a ';' joining different interface words.
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

def pretty_print(e: DiagramExpr) -> str:
    """Text in the grammar above with the fewest parentheses."""
    return _pp(e, 0)


def _pp(e: DiagramExpr, level: int) -> str:
    if isinstance(e, Empty):
        return "id(1)"
    if isinstance(e, Generator):
        s = e.slice
        return f"{s.kind.value}({s.signs.display if s.kind is Kind.IDENTITY else s.signs})"
    if isinstance(e, Compose):
        text = f"{_pp(e.lower, 0)} ; {_pp(e.upper, 0)}"
        return f"({text})" if level > 0 else text
    if isinstance(e, Tensor):
        return f"{_pp(e.left, 1)} * {_pp(e.right, 1)}"
    raise TypeError(f"Unknown diagram node {type(e).__name__}")


def _coeff_text(coeff) -> str:
    return str(coeff)


def _scalar_text(m: Morphism) -> str:
    parts = []
    for (_, bubbles), coeff in m.terms:
        monomial = []
        if bubbles.cw:
            monomial.append("cw" + (f"^{bubbles.cw}" if bubbles.cw > 1 else ""))
        if bubbles.ccw:
            monomial.append("ccw" + (f"^{bubbles.ccw}" if bubbles.ccw > 1 else ""))
        if not monomial:
            parts.append(_coeff_text(coeff))
        elif coeff == 1:
            parts.append(" ".join(monomial))
        else:
            parts.append(f"{_coeff_text(coeff)} " + " ".join(monomial))
    return " + ".join(parts)


def _marks(word: SignWord, side: int, arcs, width: int) -> tuple[str, str]:
    """Sign line and bracket line for one boundary, right-aligned to `width` columns."""
    pad = width - len(word)
    signs = ["  "] * width
    marks = ["  "] * width
    for i, s in enumerate(word):
        signs[pad + i] = ("+" if s == PLUS else "-") + " "
    for a, b in arcs:
        if a[0] == side and b[0] == side:
            marks[pad + a[1]] = "( "
            marks[pad + b[1]] = ") "
        else:
            point = a if a[0] == side else b
            marks[pad + point[1]] = "| "
    return "".join(signs).rstrip(), "".join(marks).rstrip()


def render_ascii(m: Morphism) -> str:
    """
    One block per term: top signs, cups as brackets, through strands as
    bars, caps as brackets, bottom signs. Endomorphisms of the unit render
    as a scalar expression in the bubbles.
    """
    if m.is_zero():
        return "0"
    if m.is_end_of_unit():
        return _scalar_text(m)

    width = max(len(m.bottom), len(m.top))
    blocks = []
    for k, ((matching, bubbles), coeff) in enumerate(m.terms, start=1):
        top_signs, top_marks = _marks(matching.top, TOP, matching.arcs, width)
        bottom_signs, bottom_marks = _marks(matching.bottom, BOTTOM, matching.arcs, width)
        through = ["  "] * width
        for a, b in matching.through_strands():
            bottom_point = a if a[0] == BOTTOM else b
            through[width - len(matching.bottom) + bottom_point[1]] = "| "
        header = f"term {k}: coeff {_coeff_text(coeff)}"
        lines = [
            header,
            f"  top     {top_signs or '1'}",
            f"          {top_marks}",
            f"          {''.join(through).rstrip()}",
            f"          {bottom_marks}",
            f"  bottom  {bottom_signs or '1'}",
        ]
        blocks.append("\n".join(line.rstrip() for line in lines))
    return "\n\n".join(blocks)


def render_json(m: Morphism) -> dict:
    return m.to_json()
