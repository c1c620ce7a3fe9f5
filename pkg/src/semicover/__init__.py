"""Covering numbers of finite semigroups, inverse semigroups, monoids, and
groups, with explicit machine-checkable cover certificates."""

from .core import (
    FiniteSemigroup,
    StructureFlags,
    adjoin_identity,
    build_cyclic,
    build_null,
    build_symmetric_inverse_monoid,
    closure,
    is_monogenic,
    structure_flags,
    transformation_closure,
    validate_table,
)
from .covers import (
    INFINITE,
    Cover,
    CoveringResult,
    Kind,
    classify_monoid,
    sigma_i,
    sigma_s,
    verify_cover,
)
from .groups import min_proper_index, sigma_g, subgroup_lattice
from .oracle import all_proper_subalgebras, maximal_proper, minimal_cover_exact

__all__ = [
    "FiniteSemigroup",
    "StructureFlags",
    "INFINITE",
    "Cover",
    "CoveringResult",
    "Kind",
    "adjoin_identity",
    "all_proper_subalgebras",
    "build_cyclic",
    "build_null",
    "build_symmetric_inverse_monoid",
    "classify_monoid",
    "closure",
    "is_monogenic",
    "maximal_proper",
    "min_proper_index",
    "minimal_cover_exact",
    "sigma_g",
    "sigma_i",
    "sigma_s",
    "structure_flags",
    "subgroup_lattice",
    "transformation_closure",
    "validate_table",
    "verify_cover",
]

__version__ = "0.1.0"
