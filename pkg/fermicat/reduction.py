"""
reduction.py
------------
Object reduction and the relation checks of the category.

Every nonzero object Q_w is isomorphic to one of five atoms. `reduce_word`
finds the atom together with a pair of mutually inverse diagrams, and the
check suites below verify the defining relations by normalization:

    direct_sum_witness()     1 = Q_{+-} (+) Q_{-+}
    curl_check()             bubbles beside strands, zig-zags
    grothendieck_check()     the fermion relation in the Grothendieck group
    reduction_sweep()        every word reduces to its predicted atom
    normal_order_check()     the algebra rewriting against the 2x2 oracle
    nilpotence_check()       Q_{++} = Q_{--} = 0, crossings vanish
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

from .diagrams import (
    DiagramExpr,
    Empty,
    cap,
    compose_all,
    cup,
    identity_diagram,
    padded,
    tensor,
)
from .matchings import Morphism, canonical_matching
from .normalize import compose_morphisms, equal_morphisms, normalize, same_morphism
from .reports import Report
from .sampling import sample_crossing_diagrams
from .signwords import (
    EMPTY,
    LABELS,
    SignWord,
    apply_to_vacuum,
    enumerate_words,
    grothendieck_class,
    hamiltonian_eigenvalue,
    hamiltonian_matrix,
    is_valid_from,
    matrix_rep,
    normal_order,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Atoms
# ---------------------------------------------------------------------------

class Atom(enum.Enum):
    ZERO = None
    UNIT = ""
    PLUS = "+"
    MINUS = "-"
    PLUS_MINUS = "+-"
    MINUS_PLUS = "-+"

    @property
    def word(self) -> SignWord | None:
        return None if self.value is None else SignWord.parse(self.value)


def atom_of_matrix(w: SignWord) -> Atom:
    """The atom whose Fock matrix equals that of `w`; independent of reduce_word."""
    m = matrix_rep(w)
    for atom in Atom:
        if atom is Atom.ZERO:
            continue
        if matrix_rep(atom.word) == m:
            return atom
    return Atom.ZERO


@dataclass(frozen=True)
class Reduction:
    """`down`: Q_word -> Q_atom and `up`: Q_atom -> Q_word, mutually inverse."""

    word: SignWord
    atom: Atom
    down: DiagramExpr | None
    up: DiagramExpr | None

    def witness_holds(self, source_label: int | None = None) -> tuple[bool, bool]:
        """(up after down is id on Q_word, down after up is id on Q_atom)."""
        if self.atom is Atom.ZERO:
            return True, True
        round_word = compose_all(self.down, self.up)
        round_atom = compose_all(self.up, self.down)
        return (
            equal_morphisms(round_word, identity_diagram(self.word), source_label),
            equal_morphisms(round_atom, identity_diagram(self.atom.word), source_label),
        )


def reduce_word(w: SignWord, source_label: int | None = None) -> Reduction:
    if w.has_square() or (source_label is not None and not is_valid_from(w, source_label)):
        return Reduction(w, Atom.ZERO, None, None)
    if len(w) == 0:
        return Reduction(w, Atom.UNIT, Empty(), Empty())

    # The atom is the length 1 or 2 suffix, so the reduced matchings are
    # caps closing the leftover prefix.
    suffix = w[len(w) - (2 - len(w) % 2):]
    atom = Atom(suffix.text)
    down = canonical_matching(w, suffix).to_diagram()
    up = canonical_matching(suffix, w).to_diagram()
    return Reduction(w, atom, down, up)


def reduction_sweep(max_len: int, source_label: int | None = None) -> Report:
    """Every word up to `max_len` reduces to the atom the Fock matrices predict."""
    report = Report("reduce")
    for w in enumerate_words(max_len):
        if source_label is not None and not is_valid_from(w, source_label):
            continue
        r = reduce_word(w, source_label)
        predicted = atom_of_matrix(w)
        witnesses = r.witness_holds(source_label)
        report.add(
            f"{w.display} ~ {r.atom.name}",
            r.atom is predicted and all(witnesses),
            "" if r.atom is predicted else f"predicted {predicted.name}",
        )
    logger.info("Reduction sweep to length %d: %d/%d passed.",
                max_len, report.passed_count, len(report.checks))
    return report


# ---------------------------------------------------------------------------
# 1 = Q_{+-} (+) Q_{-+}
# ---------------------------------------------------------------------------

def _direct_sum_maps(source_label: int | None) -> dict[str, Morphism]:
    return {
        "iota1": normalize(cap("+-"), source_label),
        "iota2": normalize(cap("-+"), source_label),
        "rho1": normalize(cup("+-"), source_label),
        "rho2": normalize(cup("-+"), source_label),
    }


def direct_sum_witness() -> Report:
    """
    The inclusions iota1: Q_{+-} -> 1, iota2: Q_{-+} -> 1 and projections
    rho1: 1 -> Q_{+-}, rho2: 1 -> Q_{-+} exhibit 1 as the direct sum.
    """
    report = Report("iso")
    m = _direct_sum_maps(None)
    pm, mp = SignWord.parse("+-"), SignWord.parse("-+")

    rho2_iota1 = compose_morphisms(m["iota1"], m["rho2"])
    rho1_iota2 = compose_morphisms(m["iota2"], m["rho1"])
    rho1_iota1 = compose_morphisms(m["iota1"], m["rho1"])
    rho2_iota2 = compose_morphisms(m["iota2"], m["rho2"])
    total = compose_morphisms(m["rho1"], m["iota1"]) + compose_morphisms(m["rho2"], m["iota2"])

    report.add("rho2 iota1 = 0", rho2_iota1.is_zero())
    report.add("rho1 iota2 = 0", rho1_iota2.is_zero())
    report.add("rho1 iota1 = id", rho1_iota1 == Morphism.identity(pm), "on Q_{+-}")
    report.add("rho2 iota2 = id", rho2_iota2 == Morphism.identity(mp), "on Q_{-+}")
    report.add(
        "iota1 rho1 + iota2 rho2 = id",
        same_morphism(total, Morphism.identity(EMPTY)),
        f"label values {tuple(str(v) for v in total.label_values())}",
    )

    for s in LABELS:
        ms = _direct_sum_maps(s)
        total_s = (compose_morphisms(ms["rho1"], ms["iota1"])
                   + compose_morphisms(ms["rho2"], ms["iota2"]))
        report.add(
            f"iota1 rho1 + iota2 rho2 = id at source {s}",
            total_s == Morphism.identity(EMPTY, s),
            f"scalar {total_s.scalar()}",
        )
    return report


# ---------------------------------------------------------------------------
# Curls and zig-zags
# ---------------------------------------------------------------------------

_BUBBLE_CUPS = {"cw": "-+", "ccw": "+-"}

# Whether a bubble of the given type beside the given strand survives.
CURL_VALUES = {
    ("+", "left", "ccw"): 1,
    ("+", "left", "cw"): 0,
    ("+", "right", "cw"): 1,
    ("+", "right", "ccw"): 0,
    ("-", "left", "cw"): 1,
    ("-", "left", "ccw"): 0,
    ("-", "right", "ccw"): 1,
    ("-", "right", "cw"): 0,
}


def bubble_beside(strand: str, side: str, kind: str) -> DiagramExpr:
    w = SignWord.parse(strand)
    pair = _BUBBLE_CUPS[kind]
    if side == "left":
        return compose_all(tensor(cup(pair), identity_diagram(w)), tensor(cap(pair), identity_diagram(w)))
    return compose_all(tensor(identity_diagram(w), cup(pair)), tensor(identity_diagram(w), cap(pair)))


def zigzag(strand: str, side: str) -> DiagramExpr:
    """
    The S-bend on one strand: a cup opened on `side` of it, then a cap
    closing the original strand against the cup's near leg.
    """
    w = SignWord.parse(strand)
    other = "-" if strand == "+" else "+"
    if side == "right":
        return compose_all(
            padded(w, cup(other + strand), EMPTY),
            padded(EMPTY, cap(strand + other), w),
        )
    return compose_all(
        padded(EMPTY, cup(strand + other), w),
        padded(w, cap(other + strand), EMPTY),
    )


def curl_check() -> Report:
    report = Report("curl")
    for (strand, side, kind), expected in CURL_VALUES.items():
        d = bubble_beside(strand, side, kind)
        got = normalize(d)
        if expected:
            ok = equal_morphisms(d, identity_diagram(strand))
        else:
            ok = got.is_zero()
        report.add(f"{kind} bubble {side} of {strand} = {'id' if expected else '0'}", ok)

    for strand in ("+", "-"):
        home = 0 if strand == "+" else 1
        for side in ("left", "right"):
            d = zigzag(strand, side)
            straight = identity_diagram(strand)
            report.add(f"{side} zig-zag on {strand} = id", equal_morphisms(d, straight))
            report.add(
                f"{side} zig-zag on {strand} = id at source {home}",
                equal_morphisms(d, straight, home),
            )
    return report


# ---------------------------------------------------------------------------
# Decategorification
# ---------------------------------------------------------------------------

def grothendieck_check(max_len: int = 8) -> Report:
    report = Report("grothendieck")
    plus, minus = SignWord.parse("+"), SignWord.parse("-")
    relation = grothendieck_class(plus + minus) + grothendieck_class(minus + plus)
    report.add("[Q+][Q-] + [Q-][Q+] = [1]", relation == grothendieck_class(EMPTY), str(relation))
    report.add("[Q++] = 0", grothendieck_class(plus + plus).is_zero())
    report.add("[Q--] = 0", grothendieck_class(minus + minus).is_zero())

    mismatches = []
    for w in enumerate_words(max_len):
        atom = reduce_word(w).atom
        if atom is Atom.ZERO:
            ok = grothendieck_class(w).is_zero()
        else:
            ok = (grothendieck_class(w) == grothendieck_class(atom.word)
                  and apply_to_vacuum(w) == apply_to_vacuum(atom.word))
        if not ok:
            mismatches.append(w.display)
    report.add(
        f"class of word = class of atom (length <= {max_len})",
        not mismatches,
        f"mismatches: {', '.join(mismatches)}" if mismatches else "",
    )
    return report


def normal_order_check(max_len: int = 10) -> Report:
    report = Report("normal-order")
    bad = [w.display for w in enumerate_words(max_len)
           if normal_order(w).to_matrix() != matrix_rep(w)]
    report.add(
        f"matrix_rep(normal_order(w)) = matrix_rep(w) (length <= {max_len})",
        not bad,
        f"{len(bad)} mismatch(es)" if bad else "",
    )
    h = hamiltonian_matrix()
    report.add("H|0> = -1/2 |0>", hamiltonian_eigenvalue(0) == h[0, 0] and h[1, 0] == 0,
               str(hamiltonian_eigenvalue(0)))
    report.add("H|1> = 1/2 |1>", hamiltonian_eigenvalue(1) == h[1, 1] and h[0, 1] == 0,
               str(hamiltonian_eigenvalue(1)))
    return report


def nilpotence_check(max_len: int = 6, samples: int = 200, seed: int = 0) -> Report:
    report = Report("nilpotent", seed=seed)
    squares = [w for w in enumerate_words(max_len) if w.has_square()]
    survivors = []
    for w in squares:
        for source in (None,) + LABELS:
            if not normalize(identity_diagram(w), source).is_zero():
                survivors.append(f"{w.display}@{source}")
    report.add(
        f"id on words with ++ or -- is 0 (length <= {max_len})",
        not survivors,
        ", ".join(survivors),
    )

    nonzero = 0
    for d in sample_crossing_diagrams(seed, samples, max_len):
        if not normalize(d).is_zero():
            nonzero += 1
            logger.debug("Crossing diagram survived normalization: %r", d)
    report.add(f"{samples} random crossing diagrams normalize to 0", nonzero == 0,
               f"{nonzero} survived" if nonzero else "")
    return report
