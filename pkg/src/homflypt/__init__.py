"""Exact framed Homflypt computations: Hecke algebras, idempotents and skein evaluation."""

from .coeff import LaurentPoly, RationalFunction, delta
from .hecke import BraidWord, HeckeElement, evaluate_braid, markov_trace
from .skeinrw import PlanarDiagram, closure_of_braid, evaluate
from .young import YoungDiagram, StandardTableau

__all__ = [
    "LaurentPoly", "RationalFunction", "delta", "BraidWord", "HeckeElement", "evaluate_braid",
    "markov_trace", "PlanarDiagram", "closure_of_braid", "evaluate", "YoungDiagram", "StandardTableau",
]
