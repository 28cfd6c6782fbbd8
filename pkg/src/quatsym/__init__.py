"""Exact split/division classification of quaternion and symbol algebras.

Quaternion algebras over Q and Q(i) and odd-prime-degree symbol algebras
over cyclotomic fields are classified through their local symbols
(Legendre, Hilbert, Hasse invariants, tame norm-residue symbols).
Brute-force search oracles provide independent certificates.
"""
from .classifier import (
    DIVISION,
    SPLIT,
    UNDETERMINED,
    QuaternionQ,
    QuaternionQi,
    SymbolAlgebra,
    Verdict,
    brown_parry_alpha_set,
    classify,
    classify_quaternion_q,
    classify_quaternion_qi,
    classify_symbol,
    fast_path,
)
from .gaussian import (
    GaussianInt,
    GaussianPrime,
    factor_gaussian,
    format_gaussian,
    gaussian_legendre,
    parse_gaussian,
    split_prime,
)
from .local_symbols import (
    Place,
    QTriviality,
    hasse_qi_dyadic,
    hasse_qi_odd,
    hilbert_odd,
    hilbert_real,
    hilbert_two,
    tame_q_symbol,
)
from .oracle import (
    CycloElt,
    GaussianRational,
    SearchBound,
    conic_search,
    isotropy_search,
    kummer_norm_eval,
    norm_search_quadratic,
    parse_cyclo_poly,
    quaternion_norm,
)
from .rational import (
    factor,
    is_prime,
    is_square,
    jacobi,
    legendre,
    multiplicative_order,
    qth_power_residue,
    sqrt_mod,
    squarefree_part,
    valuation,
)
from .report import ROWS, Row, reproduce_paper

__version__ = "0.1.0"

__all__ = [
    "DIVISION",
    "SPLIT",
    "UNDETERMINED",
    "QuaternionQ",
    "QuaternionQi",
    "SymbolAlgebra",
    "Verdict",
    "brown_parry_alpha_set",
    "classify",
    "classify_quaternion_q",
    "classify_quaternion_qi",
    "classify_symbol",
    "fast_path",
    "GaussianInt",
    "GaussianPrime",
    "factor_gaussian",
    "format_gaussian",
    "gaussian_legendre",
    "parse_gaussian",
    "split_prime",
    "Place",
    "QTriviality",
    "hasse_qi_dyadic",
    "hasse_qi_odd",
    "hilbert_odd",
    "hilbert_real",
    "hilbert_two",
    "tame_q_symbol",
    "CycloElt",
    "GaussianRational",
    "SearchBound",
    "conic_search",
    "isotropy_search",
    "kummer_norm_eval",
    "norm_search_quadratic",
    "parse_cyclo_poly",
    "quaternion_norm",
    "factor",
    "is_prime",
    "is_square",
    "jacobi",
    "legendre",
    "multiplicative_order",
    "qth_power_residue",
    "sqrt_mod",
    "squarefree_part",
    "valuation",
    "ROWS",
    "Row",
    "reproduce_paper",
]
