"""Builders for the concrete rings: group, exterior and matrix algebras, small
controls, and the twisted matrix ring over F_p(x, y)."""
from .builders import (
    diagonal_algebra, exterior_algebra, group_algebra, matrix_algebra, truncated_polynomial,
)
from .buildspec import BuildSpec, build, parse_build_spec
from .groups import GroupTable, cyclic_group, dihedral_group_d4, group_by_name, quaternion_group
from .twisted import (
    RatMatrix, TwistedConfig, TwistedElement, f_matrix, pi_matrix, product_equals, to_matrix,
    twisted_mul,
)
from .twisted_suite import identity_suite

__all__ = [
    "BuildSpec", "RatMatrix", "TwistedConfig", "TwistedElement", "build", "f_matrix",
    "identity_suite", "parse_build_spec", "pi_matrix", "product_equals", "to_matrix",
    "twisted_mul", "GroupTable", "cyclic_group", "diagonal_algebra", "dihedral_group_d4", "exterior_algebra",
    "group_algebra", "group_by_name", "matrix_algebra", "quaternion_group", "truncated_polynomial",
]
