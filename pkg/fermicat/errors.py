"""
errors.py
---------
Exception types raised by the engine.

All of them derive from FermicatError so the CLI can map them to exit
code 2 in one place. The ValueError bases keep them catchable by callers
that only care about "bad input".
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SourceSpan:
    """Half-open offsets [start, end) into the parsed text."""

    start: int
    end: int

    def __post_init__(self):
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"Invalid span [{self.start}, {self.end}).")

    def excerpt(self, text: str) -> str:
        return text[self.start:self.end]


class FermicatError(Exception):
    """Base class for every error the engine raises on purpose."""


class ParseError(FermicatError, ValueError):
    def __init__(self, message: str, span: SourceSpan, text: str = ""):
        self.span = span
        self.text = text
        super().__init__(f"{message} (at {span.start}..{span.end})")

    def caret(self) -> str:
        """Two-line rendering of the input with the span underlined."""
        width = max(1, self.span.end - self.span.start)
        return f"{self.text}\n{' ' * self.span.start}{'^' * width}"


class OrientationError(ParseError):
    """A cup or cap was given two equal signs, so orientation cannot flow around the turn."""


class BoundaryError(FermicatError, ValueError):
    """Two interface words that should agree do not."""

    def __init__(self, message: str, first: str, second: str, span: SourceSpan | None = None):
        self.first = first
        self.second = second
        self.span = span
        text = f"{message}: {first or '1'!r} vs {second or '1'!r}."
        if span is not None:
            text = f"{text[:-1]} (at {span.start}..{span.end})."
        super().__init__(text)


class DomainError(FermicatError, ValueError):
    """An argument lies outside the domain of the operation."""
