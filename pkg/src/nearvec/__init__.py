"""Exhaustive computation and verification for finite near-vector spaces."""

from .definition import SpaceDefinition, build_space, parse_definition
from .scalar_group import ScalarGroup, build_scalar_group, dickson, gf, prime, verify_scalar_group
from .space import (
    SpaceHandle,
    dim_of,
    extract_basis,
    induced_add,
    is_linearly_independent,
    make_space,
    quasi_kernel,
    scalar_basis,
    span,
    theta_decompose,
)
from .suite import run_suite

__all__ = [
    "ScalarGroup", "SpaceDefinition", "SpaceHandle", "build_scalar_group", "build_space",
    "dickson", "dim_of", "extract_basis", "gf", "induced_add", "is_linearly_independent",
    "make_space", "parse_definition", "prime", "quasi_kernel", "run_suite", "scalar_basis",
    "span", "theta_decompose", "verify_scalar_group",
]
