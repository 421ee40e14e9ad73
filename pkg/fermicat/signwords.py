"""
signwords.py
------------
Sign words and the decategorified ground truth: the one-mode fermion
algebra, its 2x2 Fock representation, normal ordering and the Fock inner
product. Every categorical computation elsewhere is checked against this
module.

Word convention: the leftmost sign is the leftmost strand, and the
rightmost sign is the operator applied first, so "+-" is f†f.
"""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Iterator

import sympy

from .errors import DomainError, ParseError, SourceSpan

logger = logging.getLogger(__name__)

PLUS = 1
MINUS = -1

_SIGN_CHARS = {"+": PLUS, "-": MINUS, "−": MINUS}

# Region labels admissible in the 2-category.
LABELS = (0, 1)


# ---------------------------------------------------------------------------
# SignWord
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class SignWord:
    """A finite sequence over {+1, -1}; the empty word is the unit object."""

    signs: tuple[int, ...] = ()

    def __post_init__(self):
        if any(s not in (PLUS, MINUS) for s in self.signs):
            raise ValueError(f"SignWord entries must be +1 or -1, got {self.signs!r}")

    @classmethod
    def parse(cls, text: str) -> "SignWord":
        return word_from_string(text)

    def __len__(self) -> int:
        return len(self.signs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.signs)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return SignWord(self.signs[index])
        return self.signs[index]

    def __add__(self, other: "SignWord") -> "SignWord":
        return SignWord(self.signs + other.signs)

    def __str__(self) -> str:
        return "".join("+" if s == PLUS else "-" for s in self.signs)

    @property
    def text(self) -> str:
        return str(self)

    @property
    def display(self) -> str:
        """Text form with the empty word shown as the unit object '1'."""
        return str(self) or "1"

    def has_square(self) -> bool:
        """True when the word contains '++' or '--' (and so names the zero object)."""
        return any(a == b for a, b in zip(self.signs, self.signs[1:]))

    def charge(self) -> int:
        return sum(self.signs)


EMPTY = SignWord()


def word_from_string(text: str) -> SignWord:
    """
    Parse a word over {+, -}.

    Raises:
        ParseError: naming the 1-based position of the first bad character.
    """
    signs = []
    for i, ch in enumerate(text):
        if ch not in _SIGN_CHARS:
            raise ParseError(
                f"Unexpected character {ch!r} at position {i + 1}; a sign word uses only '+' and '-'",
                SourceSpan(i, i + 1),
                text,
            )
        signs.append(_SIGN_CHARS[ch])
    return SignWord(tuple(signs))


def enumerate_words(max_len: int) -> list[SignWord]:
    """All words of length 0..max_len in shortlex order, '+' before '-'."""
    words = []
    for length in range(max_len + 1):
        for signs in itertools.product((PLUS, MINUS), repeat=length):
            words.append(SignWord(signs))
    return words


# ---------------------------------------------------------------------------
# Region labels
# ---------------------------------------------------------------------------

def region_labels(w: SignWord, source: int) -> list[int]:
    """
    Labels of the len(w) + 1 regions of a row, left to right.

    The rightmost region carries `source`; crossing a '+' strand from right
    to left adds 1 and crossing a '-' strand subtracts 1.
    """
    labels = [source]
    for s in reversed(w.signs):
        labels.append(labels[-1] + s)
    labels.reverse()
    return labels


def is_valid_from(w: SignWord, source: int) -> bool:
    return all(label in LABELS for label in region_labels(w, source))


def target(w: SignWord, source: int) -> int:
    return source + w.charge()


def admissible_sources(w: SignWord) -> tuple[int, ...]:
    return tuple(s for s in LABELS if is_valid_from(w, s))


# ---------------------------------------------------------------------------
# Fock representation
# ---------------------------------------------------------------------------

# Basis |0> = (1, 0)^T, |1> = (0, 1)^T.
CREATE = sympy.Matrix([[0, 0], [1, 0]])
ANNIHILATE = sympy.Matrix([[0, 1], [0, 0]])


@dataclass(frozen=True)
class FockVector:
    c0: sympy.Rational
    c1: sympy.Rational

    @classmethod
    def from_column(cls, column: sympy.Matrix) -> "FockVector":
        return cls(sympy.Rational(column[0]), sympy.Rational(column[1]))

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def dot(self, other: "FockVector") -> sympy.Rational:
        return self.c0 * other.c0 + self.c1 * other.c1

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for coeff, ket in ((self.c0, "|0>"), (self.c1, "|1>")):
            if coeff == 0:
                continue
            parts.append(ket if coeff == 1 else f"{coeff}{ket}")
        return " + ".join(parts)


VACUUM = sympy.Matrix([1, 0])


def matrix_rep(w: SignWord) -> sympy.Matrix:
    """Product of the per-letter matrices; the rightmost letter acts first."""
    result = sympy.eye(2)
    for s in w.signs:
        result = result * (CREATE if s == PLUS else ANNIHILATE)
    return result


@functools.lru_cache(maxsize=4096)
def apply_to_vacuum(w: SignWord) -> FockVector:
    return FockVector.from_column(matrix_rep(w) * VACUUM)


def inner_product(w_left: SignWord, w_right: SignWord) -> int:
    """<A_left|A_right> for the Fock states A_w|0>; always 0 or 1."""
    value = apply_to_vacuum(w_left).dot(apply_to_vacuum(w_right))
    return int(value)


def inner_product_at(w_left: SignWord, w_right: SignWord, occupation: int) -> int:
    """<k|A_left^T A_right|k> for the basis state |k>; occupation 0 is inner_product."""
    if occupation not in LABELS:
        raise DomainError(f"Occupation number must be 0 or 1 for a fermion, got {occupation}.")
    ket = sympy.Matrix([1 - occupation, occupation])
    left = FockVector.from_column(matrix_rep(w_left) * ket)
    right = FockVector.from_column(matrix_rep(w_right) * ket)
    return int(left.dot(right))


# ---------------------------------------------------------------------------
# Algebra elements and normal ordering
# ---------------------------------------------------------------------------

# Normally ordered monomials, in basis order (1, f†, f, f†f).
_BASIS_WORDS = (EMPTY, SignWord((PLUS,)), SignWord((MINUS,)), SignWord((PLUS, MINUS)))
_BASIS_NAMES = ("1", "f†", "f", "f†f")


@dataclass(frozen=True)
class AlgebraElement:
    """Coefficients on the ordered basis (1, f†, f, f†f)."""

    coefficients: tuple[sympy.Rational, sympy.Rational, sympy.Rational, sympy.Rational]

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls((sympy.Integer(0),) * 4)

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls((sympy.Integer(1),) + (sympy.Integer(0),) * 3)

    @classmethod
    def of(cls, one=0, create=0, annihilate=0, number=0) -> "AlgebraElement":
        return cls(tuple(sympy.Rational(c) for c in (one, create, annihilate, number)))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def scale(self, factor) -> "AlgebraElement":
        return AlgebraElement(tuple(sympy.Rational(factor) * c for c in self.coefficients))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        result = AlgebraElement.zero()
        for a, left in zip(self.coefficients, _BASIS_WORDS):
            if a == 0:
                continue
            for b, right in zip(other.coefficients, _BASIS_WORDS):
                if b == 0:
                    continue
                result = result + normal_order(left + right).scale(a * b)
        return result

    def to_matrix(self) -> sympy.Matrix:
        result = sympy.zeros(2, 2)
        for coeff, word in zip(self.coefficients, _BASIS_WORDS):
            result += coeff * matrix_rep(word)
        return result

    def __str__(self) -> str:
        terms = []
        for coeff, name in zip(self.coefficients, _BASIS_NAMES):
            if coeff == 0:
                continue
            if name == "1":
                body = f"{abs(coeff)}"
            elif abs(coeff) == 1:
                body = name
            else:
                body = f"{abs(coeff)}{name}"
            sign = "-" if coeff < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _rewrite_step(word: SignWord) -> list[tuple[SignWord, int]] | None:
    """
    One leftmost rewrite of `word`, or None if it is already normally ordered.

    ff† -> 1 - f†f, ff -> 0, f†f† -> 0.
    """
    signs = word.signs
    for i in range(len(signs) - 1):
        a, b = signs[i], signs[i + 1]
        if a == b:
            return []
        if a == MINUS and b == PLUS:
            head, tail = signs[:i], signs[i + 2:]
            return [
                (SignWord(head + tail), 1),
                (SignWord(head + (PLUS, MINUS) + tail), -1),
            ]
    return None


def normal_order(w: SignWord) -> AlgebraElement:
    """Rewrite `w` into span(1, f†, f, f†f) with the fermion relations."""
    pending: dict[SignWord, sympy.Rational] = {w: sympy.Integer(1)}
    done: dict[SignWord, sympy.Rational] = {}

    while pending:
        word = min(pending)
        coeff = pending.pop(word)
        if coeff == 0:
            continue
        step = _rewrite_step(word)
        if step is None:
            done[word] = done.get(word, sympy.Integer(0)) + coeff
            continue
        for new_word, factor in step:
            pending[new_word] = pending.get(new_word, sympy.Integer(0)) + coeff * factor

    coefficients = []
    for basis_word in _BASIS_WORDS:
        coefficients.append(done.pop(basis_word, sympy.Integer(0)))
    if any(c != 0 for c in done.values()):
        # Alternating words longer than two letters always contain "-+".
        raise AssertionError(f"normal_order left non-basis words: {done}")
    return AlgebraElement(tuple(coefficients))


def grothendieck_class(w: SignWord) -> AlgebraElement:
    """[Q_w] = [Q_e1]...[Q_en], read in the fermion algebra."""
    return normal_order(w)


# ---------------------------------------------------------------------------
# Hamiltonian
# ---------------------------------------------------------------------------

def hamiltonian_eigenvalue(n: int) -> sympy.Rational:
    """Energy n - 1/2 of the Fock state |n>."""
    if n not in (0, 1):
        raise DomainError(f"Occupation number must be 0 or 1 for a fermion, got {n}.")
    return sympy.Rational(n) - sympy.Rational(1, 2)


def hamiltonian_matrix() -> sympy.Matrix:
    """f†f - 1/2 in the Fock basis."""
    return matrix_rep(SignWord((PLUS, MINUS))) - sympy.Rational(1, 2) * sympy.eye(2)
