"""Tangent Lie algebras T(g), lift coordinates, and prolonged representations."""

from .algebra import (
    DEFAULT_TOLERANCE,
    DimensionError,
    LieAlgebra,
    LinearMap,
    ad_matrix,
    bracket,
    check_homomorphism,
    from_brackets,
    verify_algebra,
)
from .catalog import catalog_algebra, catalog_representation
from .group import (
    MatrixGroupElementPair,
    check_final_proposition,
    j_embed,
    matrix_exp,
    prolonged_group_rep,
)
from .identities import verify_appendix_identities
from .report import Check, VerificationReport
from .representation import (
    Representation,
    apply,
    check_representation,
    kernel_dimension,
    prolong_representation,
)
from .tangent import (
    TangentAlgebra,
    TangentElement,
    UnverifiedAlgebraError,
    omega,
    omega_inverse,
    tangent_algebra,
    tangent_bracket,
    tangent_map,
)

__version__ = "0.1.0"
