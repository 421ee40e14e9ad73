"""
The bimodule representation: sign words as tensor products of M and N over
R0 = Q and R1 = Mat_n(Q), diagrams as linear maps between them.
"""

from .checks import dimension_check, soundness_check, verify_adjunctions, verify_zigzags
from .functor import UTURNS, LinearMap, eval_diagram, eval_morphism, uturn_map
from .spaces import RepContext, TensorSpace, make_context, space_of_word

__all__ = [
    "UTURNS",
    "LinearMap",
    "RepContext",
    "TensorSpace",
    "dimension_check",
    "eval_diagram",
    "eval_morphism",
    "make_context",
    "soundness_check",
    "space_of_word",
    "uturn_map",
    "verify_adjunctions",
    "verify_zigzags",
]
