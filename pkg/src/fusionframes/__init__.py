"""Frames and fusion frames in finite-dimensional real spaces."""

from .errors import *  # noqa: F401,F403
from .subspaces import (
    DEFAULT_POLICY,
    Subspace,
    TolerancePolicy,
    apply_operator,
    full_space,
    is_orthogonal,
    numerical_rank,
    orthocomplement,
    orthonormalize,
    project,
    projector,
    spectral_norm,
    subspace_equal,
    subspace_sum,
)
from .discrete import (
    DiscreteFrame,
    DualCheckReport,
    FrameBounds,
    canonical_dual,
    dual_from_nullmap,
    frame_bounds,
    frame_operator,
    is_dual_pair,
    is_frame,
    is_riesz_basis,
)
from .fusion import (
    FusionFamily,
    RieszReport,
    WeightedSubspace,
    alternate_dual_check,
    canonical_dual_family,
    fusion_frame_bounds,
    fusion_frame_operator,
    is_fusion_frame,
    is_orthonormal_fusion_basis,
    mutual_dual_check,
    reconstruction_operator,
    phi_blocks,
    phi_operator,
    riesz_report,
    synthesis_matrix,
)
from .builder import (
    associated_discrete_frame,
    construct_dual_by_augmentation,
    enumerate_augmented_duals,
    lift_local_duals,
    local_canonical_duals,
    orthogonal_obstruction_check,
    parseval_orthogonality_dual_check,
)
from .io import FamilySpec, family_to_document, parse_family

__version__ = "0.1.0"
