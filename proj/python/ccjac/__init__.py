"""Jacobian pairs, centralizers and the first Weyl algebra over exact domains."""

from ._ccjac import (
    Error,
    commutes,
    dixmier_mate_search,
    express_in_A,
    fuzz,
    is_jacobian_pair,
    jacobian,
    mate_search,
    run,
    useful_equation,
    verify_paper_examples,
    weyl_commutator,
    weyl_express_in_A,
    weyl_mul,
)

__all__ = [
    "Error",
    "commutes",
    "dixmier_mate_search",
    "express_in_A",
    "fuzz",
    "is_jacobian_pair",
    "jacobian",
    "mate_search",
    "run",
    "useful_equation",
    "verify_paper_examples",
    "weyl_commutator",
    "weyl_express_in_A",
    "weyl_mul",
]
