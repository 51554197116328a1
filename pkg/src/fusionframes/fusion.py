"""Fusion frames: weighted families of subspaces of R^d.

The direct sum of the member subspaces is realized in local orthonormal
coordinates, i.e. as R^(k_1 + ... + k_n) where ``k_i = dim W_i``.  The
synthesis operator then becomes the block matrix ``[w_1 Q_1 | ... | w_n Q_n]``
and the analysis operator is its transpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
import scipy.linalg

from .discrete import (
    DiscreteFrame,
    DualCheckReport,
    FrameBounds,
    _extreme_eigenvalues,
    _positive_lower,
    is_riesz_basis,
)
from .errors import DimensionMismatch, NotAFusionFrame, ShapeMismatch
from .subspaces import (
    DEFAULT_POLICY,
    Subspace,
    TolerancePolicy,
    apply_operator,
    is_orthogonal,
    numerical_rank,
    orthonormalize,
    projector,
    spectral_norm,
)

__all__ = [
    "WeightedSubspace",
    "FusionFamily",
    "RieszReport",
    "fusion_frame_operator",
    "fusion_frame_bounds",
    "is_fusion_frame",
    "synthesis_matrix",
    "canonical_dual_family",
    "reconstruction_operator",
    "alternate_dual_check",
    "phi_blocks",
    "phi_operator",
    "mutual_dual_check",
    "riesz_report",
    "is_orthonormal_fusion_basis",
]


@dataclass(frozen=True)
class WeightedSubspace:
    subspace: Subspace
    weight: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.weight) and self.weight > 0):
            raise ValueError(f"weights must be strictly positive, got {self.weight!r}")


class FusionFamily:
    """An indexed family ``(W_i, w_i)`` of weighted subspaces sharing R^d."""

    __slots__ = ("_members",)

    def __init__(self, members: Sequence[WeightedSubspace]):
        members = tuple(members)
        if not members:
            raise ValueError("a fusion family needs at least one member")
        d = members[0].subspace.ambient_dim
        for m in members:
            if m.subspace.ambient_dim != d:
                raise DimensionMismatch("all members must share the ambient dimension")
        self._members = members

    @classmethod
    def from_spans(cls, spans, weights=None, policy: TolerancePolicy = DEFAULT_POLICY) -> "FusionFamily":
        """Build a family from spanning sets (one list of vectors per member)."""
        spans = list(spans)
        if weights is None:
            weights = [1.0] * len(spans)
        if len(weights) != len(spans):
            raise ShapeMismatch("need one weight per spanning set")
        return cls(
            WeightedSubspace(orthonormalize(span, policy), float(w))
            for span, w in zip(spans, weights)
        )

    @classmethod
    def from_subspaces(cls, subspaces, weights=None) -> "FusionFamily":
        subspaces = list(subspaces)
        if weights is None:
            weights = [1.0] * len(subspaces)
        return cls(WeightedSubspace(s, float(w)) for s, w in zip(subspaces, weights))

    @property
    def members(self):
        return self._members

    @property
    def subspaces(self) -> List[Subspace]:
        return [m.subspace for m in self._members]

    @property
    def weights(self) -> np.ndarray:
        return np.array([m.weight for m in self._members])

    @property
    def dims(self) -> List[int]:
        return [m.subspace.dim for m in self._members]

    @property
    def ambient_dim(self) -> int:
        return self._members[0].subspace.ambient_dim

    def with_weights(self, weights) -> "FusionFamily":
        return FusionFamily.from_subspaces(self.subspaces, weights)

    def __len__(self):
        return len(self._members)

    def __iter__(self):
        return iter(self._members)

    def __getitem__(self, i):
        return self._members[i]

    def __repr__(self):
        return f"FusionFamily(ambient_dim={self.ambient_dim}, dims={self.dims})"


@dataclass(frozen=True)
class RieszReport:
    """Diagnostics of the fusion Riesz basis characterizations.

    ``lower``/``upper`` are the constants of the two-sided norm equivalence,
    i.e. the extreme singular values of the synthesis matrix (``lower`` is 0
    when the synthesis matrix is not injective).  ``local_bases_riesz`` is
    the discrete Riesz test applied to the concatenated local bases and
    ``dual_contains_canonical`` is only filled in when a dual is supplied.
    """

    is_riesz: bool
    synthesis_injective: bool
    analysis_surjective: bool
    dims_sum: int
    lower: float
    upper: float
    is_fusion_frame: bool = False
    local_bases_riesz: bool = False
    dual_contains_canonical: Optional[bool] = None


def fusion_frame_operator(family: FusionFamily) -> np.ndarray:
    d = family.ambient_dim
    s = np.zeros((d, d))
    for m in family:
        s += m.weight ** 2 * projector(m.subspace)
    return s


def fusion_frame_bounds(family: FusionFamily) -> FrameBounds:
    return _extreme_eigenvalues(fusion_frame_operator(family))


def is_fusion_frame(family: FusionFamily, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    return _positive_lower(fusion_frame_bounds(family), family.ambient_dim, policy)


def _inverse_operator(family: FusionFamily, policy: TolerancePolicy) -> np.ndarray:
    if not is_fusion_frame(family, policy):
        raise NotAFusionFrame("fusion frame operator is singular")
    return np.linalg.inv(fusion_frame_operator(family))


def synthesis_matrix(family: FusionFamily) -> np.ndarray:
    return np.hstack([m.weight * m.subspace.ortho_basis for m in family])


def canonical_dual_family(family: FusionFamily, policy: TolerancePolicy = DEFAULT_POLICY) -> FusionFamily:
    s_inv = _inverse_operator(family, policy)
    return FusionFamily(
        WeightedSubspace(apply_operator(s_inv, m.subspace, policy), m.weight) for m in family
    )


def _check_pair(w: FusionFamily, v: FusionFamily):
    if w.ambient_dim != v.ambient_dim or len(w) != len(v):
        raise ShapeMismatch(
            f"cannot pair {len(w)} members in R^{w.ambient_dim} "
            f"with {len(v)} members in R^{v.ambient_dim}"
        )


def reconstruction_operator(
    w: FusionFamily, v: FusionFamily, policy: TolerancePolicy = DEFAULT_POLICY
) -> np.ndarray:
    """``sum_i w_i v_i P_{V_i} S_W^{-1} P_{W_i}``, summed in index order."""
    _check_pair(w, v)
    s_inv = _inverse_operator(w, policy)
    d = w.ambient_dim
    op = np.zeros((d, d))
    for mw, mv in zip(w, v):
        op += mw.weight * mv.weight * projector(mv.subspace) @ s_inv @ projector(mw.subspace)
    return op


def alternate_dual_check(
    w: FusionFamily,
    v: FusionFamily,
    tol: float = DEFAULT_POLICY.identity_tol,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> DualCheckReport:
    """Test whether ``v`` is a dual of ``w`` (the relation is not symmetric)."""
    return DualCheckReport.from_operator(reconstruction_operator(w, v, policy), tol)


def phi_blocks(w: FusionFamily, v: FusionFamily, policy: TolerancePolicy = DEFAULT_POLICY) -> List[np.ndarray]:
    """Blocks ``Q_{V_i}^T S_W^{-1} Q_{W_i}`` of the block-diagonal map between
    local coordinates of ``w`` and ``v``."""
    _check_pair(w, v)
    s_inv = _inverse_operator(w, policy)
    return [mv.subspace.ortho_basis.T @ s_inv @ mw.subspace.ortho_basis for mw, mv in zip(w, v)]


def phi_operator(w: FusionFamily, v: FusionFamily, policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    return scipy.linalg.block_diag(*phi_blocks(w, v, policy))


def mutual_dual_check(
    w: FusionFamily,
    v: FusionFamily,
    tol: float = DEFAULT_POLICY.identity_tol,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> bool:
    """Blockwise test of ``phi* = psi``, where ``psi`` is the map built from
    ``S_V^{-1}`` in the reverse direction.

    When it holds and ``v`` is a dual of ``w``, ``w`` is also a dual of ``v``.
    """
    _check_pair(w, v)
    sw_inv = _inverse_operator(w, policy)
    sv_inv = _inverse_operator(v, policy)
    for mw, mv in zip(w, v):
        qw, qv = mw.subspace.ortho_basis, mv.subspace.ortho_basis
        if spectral_norm(qw.T @ (sw_inv - sv_inv) @ qv) > tol:
            return False
    return True


def riesz_report(
    family: FusionFamily,
    dual: Optional[FusionFamily] = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> RieszReport:
    d = family.ambient_dim
    t = synthesis_matrix(family)
    k = t.shape[1]
    sigma = np.linalg.svd(t, compute_uv=False)
    upper = float(sigma[0])
    cutoff = policy.rank_tol_factor * max(t.shape) * upper
    rank = int(np.count_nonzero(sigma > cutoff))
    injective = rank == k
    # onto the direct sum of the W_i: the analysis matrix has full row rank
    surjective = numerical_rank(t.T, policy) == k
    frame = is_fusion_frame(family, policy)
    lower = float(sigma[-1]) if injective else 0.0

    local_bases = DiscreteFrame.from_synthesis(np.hstack([s.ortho_basis for s in family.subspaces]))
    local_riesz = is_riesz_basis(local_bases, policy)

    contains = None
    if dual is not None:
        _check_pair(family, dual)
        contains = frame and all(
            spectral_norm((np.eye(d) - projector(mv.subspace)) @ c.ortho_basis) <= policy.identity_tol
            for c, mv in zip(canonical_dual_family(family, policy).subspaces, dual)
        )

    return RieszReport(
        is_riesz=bool(frame and injective and k == d),
        synthesis_injective=injective,
        analysis_surjective=surjective,
        dims_sum=k,
        lower=lower,
        upper=upper,
        is_fusion_frame=frame,
        local_bases_riesz=bool(local_riesz),
        dual_contains_canonical=contains,
    )


def is_orthonormal_fusion_basis(family: FusionFamily, tol: float = DEFAULT_POLICY.identity_tol) -> bool:
    policy = DEFAULT_POLICY.with_identity_tol(tol)
    if sum(family.dims) != family.ambient_dim or not is_fusion_frame(family, policy):
        return False
    subs = family.subspaces
    return all(
        is_orthogonal(subs[i], subs[j], policy)
        for i in range(len(subs))
        for j in range(i + 1, len(subs))
    )
