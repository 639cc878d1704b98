"""Exact-arithmetic toolkit for the Pell-type equations behind medians and
quartiles of simplicial-number distributions in Pascal's triangle."""

from .exactnum import (
    AlgebraicRoot,
    DyadicInterval,
    QuarterInt,
    as_perfect_square,
    ikth_root,
    isqrt,
    refine,
)
from .pascal import (
    EquationFamily,
    Quartile,
    asym_binom,
    asym_residual,
    binom,
    check_identity,
    curve,
    family,
    residual,
)
from .search import MedianDomain, exhaustive, invert_m, partition, quasi_generate

__version__ = "0.1.0"

__all__ = [
    "AlgebraicRoot", "DyadicInterval", "QuarterInt",
    "as_perfect_square", "ikth_root", "isqrt", "refine",
    "EquationFamily", "Quartile", "asym_binom", "asym_residual",
    "binom", "check_identity", "curve", "family", "residual",
    "MedianDomain", "exhaustive", "invert_m", "partition", "quasi_generate",
    "__version__",
]
