"""Products of double Schubert polynomials in two alphabets.

Structure constants come from weighted Pieri paths, with a brute-force
divided-difference engine available as an independent check.
"""

from .perm import (
    Permutation, IDENTITY, from_window, from_code, code, length, inverse,
    dominant_approximation, disjoint_cycles, grassmannian, longest_element,
    all_permutations, bruhat_leq,
)
from .poly import Poly, Factored, x, y, z, beta, expand_in_negative_roots, is_nonnegative
from .oracle import (
    divided_difference, apply_word, double_schubert, skew_dd,
    expand_in_schubert_basis, oracle_coefficient,
)
from .pieri import CoeffMap, PieriStep, pieri_related, pieri_successors, mul_factorial_elementary
from .product import (
    d_coefficients, e_coefficients, check_hypotheses, product_mixed,
    product_equivariant, product_ordinary, schubert_positive, skew_schubert,
)

__version__ = "0.1.0"

__all__ = [
    "Permutation", "IDENTITY", "from_window", "from_code", "code", "length", "inverse",
    "dominant_approximation", "disjoint_cycles", "grassmannian", "longest_element",
    "all_permutations", "bruhat_leq", "Poly", "Factored", "x", "y", "z", "beta",
    "expand_in_negative_roots", "is_nonnegative", "divided_difference", "apply_word",
    "double_schubert", "skew_dd", "expand_in_schubert_basis", "oracle_coefficient",
    "CoeffMap", "PieriStep", "pieri_related", "pieri_successors", "mul_factorial_elementary",
    "d_coefficients", "e_coefficients", "check_hypotheses", "product_mixed",
    "product_equivariant", "product_ordinary", "schubert_positive", "skew_schubert",
]
