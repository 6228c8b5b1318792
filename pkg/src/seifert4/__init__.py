"""Seifert 4-manifolds over hyperbolic orbifolds: invariants and profinite comparison."""
from .exactmat import IntMatrix
from .seifert import SeifertData, normalize, presentation
from .rigidity import compare

__all__ = ["IntMatrix", "SeifertData", "normalize", "presentation", "compare"]
__version__ = "0.1.0"
