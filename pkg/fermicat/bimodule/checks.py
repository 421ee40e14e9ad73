"""
checks.py
---------
Verification suites for the bimodule representation.

    verify_adjunctions(ctx)   f0 g0, g0 f0, f1 g1, g1 f1 are identities,
                              and g0 without its 1/n fails as predicted
    verify_zigzags(ctx)       the four S-bends, an element-level replay on
                              M and N, bubbles beside strands
    dimension_check(ctx)      quotient dimensions 1, n, n, n^2, each also
                              checked against the whole-word relations
    soundness_check(ctx)      eval(d) = eval(normalize(d)) on random
                              diagrams, plus functoriality
"""

from __future__ import annotations

import logging

import sympy

from ..diagrams import compose, from_layers, flatten, identity_diagram, tensor
from ..normalize import normalize
from ..reduction import CURL_VALUES, bubble_beside, zigzag
from ..reports import Report
from ..sampling import make_rng, random_valid_diagram
from ..signwords import LABELS, SignWord, enumerate_words, is_valid_from, target
from .functor import apply_ambient, eval_diagram, eval_morphism, uturn_map
from .linalg import kron
from .spaces import RepContext

logger = logging.getLogger(__name__)

# Whole-word relation matrices are row-reduced only up to this ambient size.
FULL_RELATION_MAX_AMBIENT = 128


def verify_adjunctions(ctx: RepContext) -> Report:
    report = Report("adjunction", n=ctx.n)
    f0, g0, f1, g1 = (uturn_map(ctx, k) for k in ("f0", "g0", "f1", "g1"))

    for name, composite in (
        ("f0 g0 = id_R0", g0.then(f0)),
        ("g0 f0 = id_{N(x)M}", f0.then(g0)),
        ("f1 g1 = id_R1", g1.then(f1)),
        ("g1 f1 = id_{M(x)N}", f1.then(g1)),
    ):
        report.add(name, composite.is_identity(), f"{composite.matrix.rows}x{composite.matrix.cols}")

    raw = ctx.without_normalisation()
    product = uturn_map(raw, "g0").then(uturn_map(raw, "f0")).matrix
    report.add(
        "negative control: f0 g0 = n id without 1/n",
        product == ctx.n * sympy.eye(1) and product != sympy.eye(1),
        f"f0 g0 = {product[0, 0]}",
    )
    return report


def _replay_m(ctx: RepContext) -> bool:
    """g = 1 (x) g = sum_i e_i (x) e^i (x) g = sum_ij g_j e_i delta_ij = g, on M."""
    plus = SignWord.parse("+")
    bottom, layers = flatten(zigzag("+", "left"))
    for b in range(ctx.n):
        g = {(j,): sympy.Integer(j + 1 + b) for j in range(ctx.n)}
        element, row = g, bottom
        for layer in layers:
            element = apply_ambient(ctx, row, 0, layer, element)
            row = row[:layer.position] + layer.top + row[layer.position + len(layer.bottom):]
        if row != plus or element != g:
            return False
    return True


def _replay_n(ctx: RepContext) -> bool:
    """h = h (x) 1 = sum_i h (x) e_i (x) e^i = h, on N."""
    minus = SignWord.parse("-")
    bottom, layers = flatten(zigzag("-", "right"))
    for b in range(ctx.n):
        h = {(j,): sympy.Integer(j + 1 + b) for j in range(ctx.n)}
        element, row = h, bottom
        for layer in layers:
            element = apply_ambient(ctx, row, 1, layer, element)
            row = row[:layer.position] + layer.top + row[layer.position + len(layer.bottom):]
        if row != minus or element != h:
            return False
    return True


def verify_zigzags(ctx: RepContext) -> Report:
    report = Report("zigzag", n=ctx.n)
    for strand, module, source in (("+", "M", 0), ("-", "N", 1)):
        for side in ("left", "right"):
            got = eval_diagram(ctx, zigzag(strand, side), source)
            report.add(f"{side} zig-zag on {module} = id", got.is_identity(),
                       f"{got.matrix.rows}x{got.matrix.cols}")

    report.add("element replay on M", _replay_m(ctx), "g = sum_i e_i (x) e^i (x) g = g")
    report.add("element replay on N", _replay_n(ctx), "h = sum_i h (x) e_i (x) e^i = h")

    for (strand, side, kind), expected in CURL_VALUES.items():
        source = 0 if strand == "+" else 1
        got = eval_diagram(ctx, bubble_beside(strand, side, kind), source)
        ok = got.is_identity() if expected else got.matrix.is_zero_matrix
        report.add(f"{kind} bubble {side} of {strand} = {'id' if expected else '0'}", ok)

    for kind, source in (("cw", 0), ("ccw", 1)):
        d = bubble_beside("", "left", kind)
        report.add(f"{kind} bubble at source {source} = id", eval_diagram(ctx, d, source).is_identity())
    return report


def dimension_check(ctx: RepContext, max_len: int = 6) -> Report:
    report = Report("dimensions", n=ctx.n)
    expected = {(0, 0): 1, (0, 1): ctx.n, (1, 0): ctx.n, (1, 1): ctx.n ** 2}
    for source in LABELS:
        for w in enumerate_words(max_len):
            if not is_valid_from(w, source):
                continue
            space = ctx.space(w, source)
            want = expected[(source, target(w, source))]
            report.add(
                f"dim Q_{w.display} from {source} = {want}",
                space.dim == want,
                f"{space.describe()}, ambient {space.ambient_dim}",
            )
            if w and space.ambient_dim <= FULL_RELATION_MAX_AMBIENT:
                rank = space.relation_rank
                report.add(
                    f"dim Q_{w.display} from {source} = ambient - rank of junction relations",
                    space.ambient_dim - rank == space.dim,
                    f"{space.ambient_dim} - {rank}, {len(space.junctions())} R1 junction(s)",
                )
    nm = ctx.nm_quotient()
    report.add(
        "N (x)_R1 M relations have rank n^2 - 1",
        nm.relation_rank == ctx.n ** 2 - 1,
        f"rank {nm.relation_rank}",
    )
    return report


def soundness_check(ctx: RepContext, max_len: int = 6, samples: int = 200, seed: int = 0) -> Report:
    """
    eval_diagram(d) against the evaluation of its normal forms (labeled and
    unlabeled) on seeded random diagrams valid from alternating sources.
    """
    report = Report("soundness", n=ctx.n, seed=seed)
    rng = make_rng(seed)
    mismatches = []
    functor_failures = 0
    tensor_failures = 0

    for k in range(samples):
        source = k % 2
        d = random_valid_diagram(rng, source, max_len)
        direct = eval_diagram(ctx, d, source).matrix
        labeled = eval_morphism(ctx, normalize(d, source), source).matrix
        unlabeled = eval_morphism(ctx, normalize(d), source).matrix
        if direct != labeled or direct != unlabeled:
            mismatches.append(k)
            logger.warning("Sample %d disagrees with its normal form: %r", k, d)

        bottom, layers = flatten(d)
        if len(layers) >= 2:
            cut = int(rng.integers(1, len(layers)))
            lower = from_layers(bottom, layers[:cut])
            upper = from_layers(lower.top, layers[cut:])
            split = eval_diagram(ctx, upper, source).matrix * eval_diagram(ctx, lower, source).matrix
            if split != eval_diagram(ctx, compose(lower, upper), source).matrix:
                functor_failures += 1

        if source == 0 and target(d.bottom, 0) == 0:
            other = random_valid_diagram(rng, 0, max(0, max_len - len(d.bottom)))
            joined = eval_diagram(ctx, tensor(other, d), 0).matrix
            if joined != kron(eval_diagram(ctx, other, 0).matrix, direct):
                tensor_failures += 1

    report.add(
        f"{samples} random diagrams agree with their normal forms",
        not mismatches,
        f"mismatches at samples {mismatches[:10]}" if mismatches else "0 mismatches",
    )
    report.add("eval respects composition", functor_failures == 0, f"{functor_failures} failure(s)")
    report.add("eval respects tensor over R0", tensor_failures == 0, f"{tensor_failures} failure(s)")

    identity_ok = all(
        eval_diagram(ctx, identity_diagram(w), s).is_identity()
        for s in LABELS for w in enumerate_words(min(max_len, 4)) if is_valid_from(w, s)
    )
    report.add("identity diagrams map to identities", identity_ok)
    logger.info("Soundness at n=%d: %d/%d checks passed.", ctx.n, report.passed_count, len(report.checks))
    return report
