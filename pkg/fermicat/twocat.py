"""
twocat.py
---------
The region-labeled 2-category: 1-morphisms between the labels 0 and 1,
the categorical Fock states and their inner product.

States are 1-morphisms out of 0, not objects: psi_0 = Q_{-+} : 0 -> 0 and
psi_1 = Q_+ : 0 -> 1. The inner product of two states is the dimension of
the 2-morphism space between them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import sympy

from .errors import DomainError
from .normalize import hom_dim
from .reduction import Atom, reduce_word
from .reports import Report
from .signwords import (
    EMPTY,
    LABELS,
    MINUS,
    PLUS,
    SignWord,
    enumerate_words,
    inner_product,
    is_valid_from,
    target,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OneMorphism:
    """Q_word : source -> target; `target` is None when the 1-morphism is zero."""

    word: SignWord
    source: int
    target: int | None

    @property
    def is_zero(self) -> bool:
        return self.target is None

    def __str__(self) -> str:
        if self.is_zero:
            return f"Q_{self.word.display} : {self.source} -> 0 (zero)"
        return f"Q_{self.word.display} : {self.source} -> {self.target}"


def _check_label(source: int) -> None:
    if source not in LABELS:
        raise DomainError(f"Region label must be 0 or 1, got {source}.")


def validate_1morphism(w: SignWord, source: int) -> OneMorphism:
    _check_label(source)
    if not is_valid_from(w, source):
        return OneMorphism(w, source, None)
    return OneMorphism(w, source, target(w, source))


def state(n: int) -> OneMorphism:
    if n == 0:
        return validate_1morphism(SignWord((MINUS, PLUS)), 0)
    if n == 1:
        return validate_1morphism(SignWord((PLUS,)), 0)
    raise DomainError(f"Occupation number must be 0 or 1 for a fermion, got {n}.")


def categorical_inner(a: OneMorphism, b: OneMorphism) -> int:
    """dim Hom(Q_b, Q_a)."""
    if a.source != b.source:
        raise DomainError(
            f"States must share their source label, got {a.source} and {b.source}."
        )
    if a.is_zero or b.is_zero or a.target != b.target:
        return 0
    return hom_dim(b.word, a.word, a.source)


def act(sign: int, s: OneMorphism) -> OneMorphism:
    """Place Q_sign to the left of `s`, i.e. apply the operator after it."""
    if sign not in (PLUS, MINUS):
        raise DomainError(f"Expected a sign (+1 or -1), got {sign}.")
    return validate_1morphism(SignWord((sign,)) + s.word, s.source)


def state_matrix() -> sympy.Matrix:
    return sympy.Matrix(2, 2, lambda i, j: categorical_inner(state(i), state(j)))


def state_basis(n: int, max_len: int) -> list[SignWord]:
    """All words from source 0 to target n of length at most `max_len`, shortest first."""
    if n not in LABELS:
        raise DomainError(f"Occupation number must be 0 or 1 for a fermion, got {n}.")
    return [
        w for w in enumerate_words(max_len)
        if is_valid_from(w, 0) and target(w, 0) == n
    ]


# ---------------------------------------------------------------------------
# Check suites
# ---------------------------------------------------------------------------

def orthonormality_check(max_len: int = 6) -> Report:
    report = Report("orthonormal")
    matrix = state_matrix()
    report.add("<psi_n, psi_m> = delta", matrix == sympy.eye(2), str(matrix.tolist()))

    for n in LABELS:
        family = state_basis(n, max_len)
        atoms = {reduce_word(w, 0).atom for w in family}
        expected = {Atom.PLUS} if n == 1 else {Atom.UNIT, Atom.MINUS_PLUS}
        report.add(
            f"states with target {n} reduce to {sorted(a.name for a in expected)}",
            atoms <= expected,
            ", ".join(sorted(a.name for a in atoms)),
        )
        psi = state(n)
        report.add(
            f"every target-{n} state is isomorphic to psi_{n}",
            all(categorical_inner(psi, validate_1morphism(w, 0)) == 1 for w in family),
        )

    report.add("Q+ psi_0 ~ psi_1", reduce_word(act(PLUS, state(0)).word, 0).atom is Atom.PLUS)
    report.add("Q- psi_1 = psi_0", act(MINUS, state(1)).word == state(0).word)
    report.add("Q+ psi_1 = 0", act(PLUS, state(1)).is_zero)
    report.add("Q- psi_0 = 0", act(MINUS, state(0)).is_zero)
    report.add("identity at 1 is valid", not validate_1morphism(EMPTY, 1).is_zero)
    return report


def oracle_sweep(max_len: int = 8) -> Report:
    """hom_dim(e, e', 0) against the Fock inner product, for all word pairs."""
    report = Report("sweep")
    words = enumerate_words(max_len)
    mismatches = []
    for bottom in words:
        for top in words:
            if hom_dim(bottom, top, 0) != inner_product(top, bottom):
                mismatches.append(f"({bottom.display}, {top.display})")
    report.add(
        f"hom_dim = <A|A'> over {len(words) ** 2} pairs (length <= {max_len})",
        not mismatches,
        f"{len(mismatches)} mismatch(es): {', '.join(mismatches[:10])}" if mismatches else "0 mismatches",
    )
    logger.info("Oracle sweep to length %d: %d mismatch(es).", max_len, len(mismatches))
    return report
