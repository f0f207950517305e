"""Exact-arithmetic laboratory for the chi ratio, the golden ratio and the metallic means."""

from .approx import ApproxReal, DecimalApprox, Interval, eval_decimal
from .constants import (
    NamedConstant,
    Poly,
    chi,
    chi_prime,
    metallic,
    named_constants,
    phi,
    poly_eval,
    quartic_expand,
)
from .exact import (
    PHI,
    GoldenElem,
    RadicandMismatch,
    TowerElem,
    golden_arith,
    rational_arith,
    sign,
    compare,
    tower_arith,
    value_eq,
)

__all__ = [
    "ApproxReal", "DecimalApprox", "GoldenElem", "Interval", "NamedConstant", "PHI", "Poly",
    "RadicandMismatch", "TowerElem", "chi", "chi_prime", "compare", "eval_decimal", "golden_arith",
    "metallic", "named_constants", "phi", "poly_eval", "quartic_expand", "rational_arith",
    "sign", "tower_arith", "value_eq",
]
