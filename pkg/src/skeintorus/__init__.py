"""Exact Kauffman bracket skein algebra of the torus, its action on the solid
torus, and the orthogonality-relation solver for colored Kauffman brackets."""
from .catalog import catalog
from .chebyshev import chebyshev, t_in_s_basis
from .errors import SkeinError
from .laurent import LaurentPolynomial, divide_exact, substitute, t
from .parser import evaluate, parse
from .peripheral import (
    IdealPolynomial,
    L,
    M,
    PeripheralElement,
    classical_specialization,
    ideal_to_peripheral,
    nc_expand,
    peripheral_to_ideal,
)
from .quantum_torus import (
    CosineElement,
    TorusElement,
    cosine,
    cosine_multiply,
    embed,
    exponential,
    involution,
    qt_multiply,
    to_cosine,
)
from .recurrence import (
    KappaSequence,
    LinearRelation,
    analyze,
    check_theorem2,
    kappa_closed_form_unknot,
    leading_coefficient,
    orthogonality_relation,
    solve_kappa,
)
from .solid_torus import (
    S,
    SolidTorusElement,
    T,
    alpha,
    convert_basis,
    left_act,
    right_act,
    x_map,
    x_pq,
    xpq_recurrence_check,
)

__version__ = "0.1.0"

__all__ = [
    "CosineElement",
    "IdealPolynomial",
    "KappaSequence",
    "L",
    "LaurentPolynomial",
    "LinearRelation",
    "M",
    "PeripheralElement",
    "S",
    "SkeinError",
    "SolidTorusElement",
    "T",
    "TorusElement",
    "alpha",
    "analyze",
    "catalog",
    "chebyshev",
    "check_theorem2",
    "classical_specialization",
    "convert_basis",
    "cosine",
    "cosine_multiply",
    "divide_exact",
    "embed",
    "evaluate",
    "exponential",
    "ideal_to_peripheral",
    "involution",
    "kappa_closed_form_unknot",
    "leading_coefficient",
    "left_act",
    "nc_expand",
    "orthogonality_relation",
    "parse",
    "peripheral_to_ideal",
    "qt_multiply",
    "right_act",
    "solve_kappa",
    "substitute",
    "t",
    "t_in_s_basis",
    "to_cosine",
    "x_map",
    "x_pq",
    "xpq_recurrence_check",
]
