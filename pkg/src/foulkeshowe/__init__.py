"""Exact computation around the natural map Sym^a(Sym^b) -> Sym^b(Sym^a).

The package builds the compressed weight-space matrix of the map, its
left/right factorization through an intermediate weight space, certifies
injectivity at desk scale, and cross-checks everything against an
independent character-theoretic multiplicity oracle.
"""

from .combinatorics import (
    block_partition_count,
    character,
    dim_irrep_gl,
    dim_irrep_sym,
    enumerate_block_partitions,
    kostka,
    partitions_of,
)
from .errors import FormatError, ResourceLimitError
from .exactla import (
    RankCertificate,
    ScaledIntMatrix,
    SparseExactMatrix,
    certify_injective,
    kernel_basis_exact,
    rank_exact,
    rank_mod_p,
)
from .foulkes_map import (
    left_factor,
    middle_basis,
    psi_composed,
    psi_fused,
    psi_poly,
    right_factor,
)
from .plethysm_oracle import (
    foulkes_check,
    hermite_check,
    kernel_consistency,
    multiplicity,
    multiplicity_vector,
    perm_character_value,
    plethysm_via_monomials,
)
from .tensorspace import (
    gl2_weight_basis,
    orbit_sum_basis,
    phi,
    wedge_sym_vector,
    weight_basis,
    zeta_gl2,
)

__version__ = "0.1.0"
