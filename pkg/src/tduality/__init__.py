"""Exact topological T-duality calculator.

Pairs (circle bundle, degree-3 integer class) over two families of
bases: points with cyclic isotropy and Seifert-fibered 2-orbispaces.
All computations run over exact integer linear algebra; every group is
reported in canonical invariant-factor form.
"""

from .abelian import (
    FgAbGroup,
    IntMatrix,
    SnfDecomposition,
    cokernel,
    groups_isomorphic,
    kernel_basis,
    kernel_mod_image,
    smith_normal_form,
    solve_integral,
)
from .errors import SizeGuardError, ValidationError
from .gamma_point import (
    GammaPointPair,
    check_gamma_point,
    h3_generator,
    h3_total_space,
    tdualize_gamma_point,
    thom_exists,
    validate_gamma_point,
)
from .group_cohomology import (
    Character,
    CyclicGroup,
    bar_cochain_differential,
    character_to_chern,
    cohomology_bgamma,
    cohomology_bgamma_oracle,
)
from .rep_ring_k import (
    RepRingElement,
    borel_k_of_dual,
    borel_k_via_mv,
    char_multiplication_matrix,
    k_untwisted_free_quotient,
    rep_multiply,
)
from .seifert import (
    SeifertBase,
    SeifertConstruction,
    SeifertPair,
    chern_from_construction,
    check_seifert,
    classification_invariants,
    cohomology_base,
    h3_total,
    tdualize_seifert,
    validate_seifert,
)

__version__ = "0.1.0"

__all__ = [
    "FgAbGroup",
    "IntMatrix",
    "SnfDecomposition",
    "smith_normal_form",
    "cokernel",
    "kernel_basis",
    "kernel_mod_image",
    "solve_integral",
    "groups_isomorphic",
    "ValidationError",
    "SizeGuardError",
    "CyclicGroup",
    "Character",
    "cohomology_bgamma",
    "cohomology_bgamma_oracle",
    "bar_cochain_differential",
    "character_to_chern",
    "GammaPointPair",
    "validate_gamma_point",
    "check_gamma_point",
    "h3_total_space",
    "h3_generator",
    "thom_exists",
    "tdualize_gamma_point",
    "RepRingElement",
    "rep_multiply",
    "char_multiplication_matrix",
    "borel_k_of_dual",
    "borel_k_via_mv",
    "k_untwisted_free_quotient",
    "SeifertBase",
    "SeifertPair",
    "SeifertConstruction",
    "cohomology_base",
    "h3_total",
    "chern_from_construction",
    "validate_seifert",
    "check_seifert",
    "classification_invariants",
    "tdualize_seifert",
]
