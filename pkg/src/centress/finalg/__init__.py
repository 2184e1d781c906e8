"""Structure-constant algebras over F_p and the generic decision procedures."""
from .algebra import AlgebraElement, StructureAlgebra, commutator
from .certificate import Certificate, Method, Verdict
from .decide import (
    annihilator, center, centrally_essential_exhaustive, centrally_essential_socle,
    ideal_closure, is_centrally_essential, is_ideal, jacobson_radical, nilpotence_index,
    nilradical_commutative, subspace_product,
)
from .exhaustive import DEFAULT_BUDGET, Enumerator
from .linalg import Subspace, left_kernel, linalg, rank, rref, solve_left

__all__ = [
    "AlgebraElement", "Certificate", "DEFAULT_BUDGET", "Enumerator", "Method", "StructureAlgebra",
    "Subspace", "Verdict", "annihilator", "center", "centrally_essential_exhaustive",
    "centrally_essential_socle", "commutator", "ideal_closure", "is_centrally_essential",
    "is_ideal", "jacobson_radical", "left_kernel", "linalg", "nilpotence_index",
    "nilradical_commutative", "rank", "rref", "solve_left", "subspace_product",
]
