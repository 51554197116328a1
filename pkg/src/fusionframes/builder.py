"""Constructions linking fusion frames, their local frames and their duals.

Local frames are given per member as a ``d x m_i`` array (or a list of
vectors) whose columns lie in, and span, the member subspace.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .discrete import DiscreteFrame
from .errors import (
    EnumerationCapExceeded,
    InvalidAugmentation,
    LocalSpanMismatch,
    NotLocalDual,
    ShapeMismatch,
    UnsupportedWeights,
)
from .fusion import (
    FusionFamily,
    WeightedSubspace,
    _inverse_operator,
    alternate_dual_check,
    canonical_dual_family,
    fusion_frame_operator,
)
from .subspaces import (
    DEFAULT_POLICY,
    TolerancePolicy,
    apply_operator,
    as_matrix,
    is_orthogonal,
    orthocomplement,
    orthonormalize,
    projector,
    spectral_norm,
    subspace_equal,
    subspace_sum,
)

__all__ = [
    "validate_local_frames",
    "local_canonical_duals",
    "associated_discrete_frame",
    "lift_local_duals",
    "construct_dual_by_augmentation",
    "enumerate_augmented_duals",
    "ParsevalCheck",
    "ObstructionCheck",
    "parseval_orthogonality_dual_check",
    "orthogonal_obstruction_check",
]


def _local_matrices(family: FusionFamily, local) -> List[np.ndarray]:
    if len(local) != len(family):
        raise ShapeMismatch(f"{len(family)} members but {len(local)} local frames")
    out = []
    for vecs in local:
        if isinstance(vecs, np.ndarray) and vecs.ndim == 2:
            out.append(np.asarray(vecs, dtype=float))
        else:
            out.append(as_matrix(vecs, family.ambient_dim))
    return out


def validate_local_frames(family: FusionFamily, local, policy: TolerancePolicy = DEFAULT_POLICY) -> List[np.ndarray]:
    """Check that each local family lies in and spans its member subspace.

    Returns the local frames as ``d x m_i`` arrays.
    """
    mats = _local_matrices(family, local)
    for i, (m, f) in enumerate(zip(family, mats)):
        p = projector(m.subspace)
        scale = max(1.0, spectral_norm(f))
        if spectral_norm(f - p @ f) > policy.identity_tol * scale:
            raise LocalSpanMismatch(f"local frame {i} leaves its subspace")
        if not subspace_equal(orthonormalize(f, policy), m.subspace, policy):
            raise LocalSpanMismatch(f"local frame {i} does not span its subspace")
    return mats


def local_canonical_duals(family: FusionFamily, local, policy: TolerancePolicy = DEFAULT_POLICY) -> List[np.ndarray]:
    """Canonical dual of every local frame inside its own subspace."""
    mats = validate_local_frames(family, local, policy)
    # the local frame operator is invertible on W_i only, hence the pseudo-inverse
    return [np.linalg.pinv(f @ f.T, hermitian=True) @ f for f in mats]


def associated_discrete_frame(family: FusionFamily, local, policy: TolerancePolicy = DEFAULT_POLICY) -> DiscreteFrame:
    """Flatten ``{w_i f_ij}`` into one discrete family of R^d."""
    mats = validate_local_frames(family, local, policy)
    return DiscreteFrame.from_synthesis(np.hstack([m.weight * f for m, f in zip(family, mats)]))


def lift_local_duals(
    family: FusionFamily,
    local,
    local_duals,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> DiscreteFrame:
    """Lift local duals ``g_ij`` to the dual ``{w_i S_W^{-1} g_ij}`` of the
    associated discrete frame."""
    mats = validate_local_frames(family, local, policy)
    duals = _local_matrices(family, local_duals)
    for i, (m, f, g) in enumerate(zip(family, mats, duals)):
        if f.shape != g.shape:
            raise ShapeMismatch(f"local dual {i} has {g.shape[1]} vectors, expected {f.shape[1]}")
        err = spectral_norm(f @ g.T - projector(m.subspace))
        if err > policy.identity_tol:
            raise NotLocalDual(f"local family {i} does not reconstruct its projection (error {err:.3g})")
    s_inv = _inverse_operator(family, policy)
    return DiscreteFrame.from_synthesis(np.hstack([m.weight * (s_inv @ g) for m, g in zip(family, duals)]))


def _unit_weights(*families: FusionFamily):
    for fam in families:
        if not np.all(fam.weights == 1.0):
            raise UnsupportedWeights("construction is defined for unit weights only")


def construct_dual_by_augmentation(
    family: FusionFamily,
    h: Sequence[Optional[np.ndarray]],
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> FusionFamily:
    """Dual ``V_i = S_W^{-1} W_i + span{h_i}`` of a unit-weight fusion frame.

    ``h[i]`` must be a unit vector orthogonal to ``S_W^{-1} W_i``; ``None``
    keeps the canonical dual subspace for that member.
    """
    _unit_weights(family)
    if len(h) != len(family):
        raise ShapeMismatch(f"{len(family)} members but {len(h)} augmentation vectors")
    canonical = canonical_dual_family(family, policy)
    members = []
    for i, (c, hi) in enumerate(zip(canonical, h)):
        if hi is None:
            members.append(WeightedSubspace(c.subspace, 1.0))
            continue
        hi = np.asarray(hi, dtype=float).ravel()
        if hi.shape[0] != family.ambient_dim:
            raise InvalidAugmentation(f"h[{i}] has length {hi.shape[0]}, expected {family.ambient_dim}")
        if abs(np.linalg.norm(hi) - 1.0) > policy.identity_tol:
            raise InvalidAugmentation(f"h[{i}] is not a unit vector")
        q = c.subspace.ortho_basis
        if np.linalg.norm(q @ (q.T @ hi)) > policy.identity_tol:
            raise InvalidAugmentation(f"h[{i}] is not orthogonal to the canonical dual subspace")
        z = orthonormalize(hi[:, None], policy)
        members.append(WeightedSubspace(subspace_sum(c.subspace, z, policy), 1.0))
    return FusionFamily(members)


def _candidates_basis(canonical: FusionFamily, policy: TolerancePolicy):
    per_member = []
    for m in canonical:
        comp = orthocomplement(m.subspace, policy)
        options = [] if comp is None else [comp.ortho_basis[:, j] for j in range(comp.dim)]
        options.append(None)
        per_member.append(options)
    return itertools.product(*per_member)


def _candidates_random(canonical: FusionFamily, count: int, seed: int, policy: TolerancePolicy):
    rng = np.random.default_rng(seed)
    comps = [orthocomplement(m.subspace, policy) for m in canonical]
    for _ in range(count):
        choice = []
        for comp in comps:
            if comp is None:
                choice.append(None)
                continue
            c = rng.standard_normal(comp.dim)
            choice.append(comp.ortho_basis @ (c / np.linalg.norm(c)))
        yield tuple(choice)


def enumerate_augmented_duals(
    family: FusionFamily,
    strategy: str = "basis-vectors",
    cap: int = 256,
    seed: int = 0,
    count: Optional[int] = None,
    tol: float = DEFAULT_POLICY.identity_tol,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> List[FusionFamily]:
    """Duals obtained by augmenting each canonical dual subspace by one
    direction of its orthogonal complement.

    With ``strategy="basis-vectors"`` every member ranges over the basis
    vectors of its complement followed by "no augmentation", in
    lexicographic order over members.  With ``strategy="seeded-random"``
    ``count`` (default ``cap``) random unit directions are drawn per member
    from ``numpy.random.default_rng(seed)``.  Raises
    :class:`EnumerationCapExceeded`, carrying the first ``cap`` families,
    when more candidates exist.
    """
    _unit_weights(family)
    canonical = canonical_dual_family(family, policy)
    if strategy == "basis-vectors":
        candidates = _candidates_basis(canonical, policy)
    elif strategy == "seeded-random":
        candidates = _candidates_random(canonical, cap if count is None else count, seed, policy)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    out: List[FusionFamily] = []
    for choice in candidates:
        if len(out) == cap:
            raise EnumerationCapExceeded(f"more than {cap} dual families", out)
        v = construct_dual_by_augmentation(family, list(choice), policy)
        report = alternate_dual_check(family, v, tol, policy)
        if not report.is_dual:  # pragma: no cover - guarded by the construction
            raise AssertionError(f"constructed family failed the dual check (residual {report.residual:.3g})")
        out.append(v)
    return out


@dataclass(frozen=True)
class ParsevalCheck:
    hypotheses_hold: bool
    is_dual: bool
    residual: float


@dataclass(frozen=True)
class ObstructionCheck:
    pairwise_orthogonal: bool
    transformed_sum_norm: float


def parseval_orthogonality_dual_check(
    w: FusionFamily,
    v: FusionFamily,
    tol: float = DEFAULT_POLICY.identity_tol,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> ParsevalCheck:
    """Report the sufficient condition (``v`` Parseval and ``W_k`` orthogonal
    to ``S_W^{-1} V_i`` for ``i != k``) next to the dual test it implies."""
    _unit_weights(w, v)
    pol = policy.with_identity_tol(tol)
    report = alternate_dual_check(w, v, tol, policy)
    parseval = spectral_norm(fusion_frame_operator(v) - np.eye(v.ambient_dim)) <= tol
    hyp = parseval
    if hyp:
        s_inv = _inverse_operator(w, policy)
        images = [apply_operator(s_inv, s, policy) for s in v.subspaces]
        hyp = all(
            is_orthogonal(wk, images[i], pol)
            for k, wk in enumerate(w.subspaces)
            for i in range(len(images))
            if i != k
        )
    return ParsevalCheck(hypotheses_hold=bool(hyp), is_dual=report.is_dual, residual=report.residual)


def orthogonal_obstruction_check(
    w: FusionFamily,
    v: FusionFamily,
    tol: float = DEFAULT_POLICY.identity_tol,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> ObstructionCheck:
    """Norm of the reconstruction sum for the family ``(S_W V_i, v_i)``.

    When every ``W_i`` is orthogonal to ``V_i`` this sum vanishes, so the
    transformed family cannot be a dual of ``w``.
    """
    if len(w) != len(v) or w.ambient_dim != v.ambient_dim:
        raise ShapeMismatch("families must have the same size and ambient dimension")
    pol = policy.with_identity_tol(tol)
    s_inv = _inverse_operator(w, policy)
    _inverse_operator(v, policy)
    s = fusion_frame_operator(w)
    d = w.ambient_dim
    total = np.zeros((d, d))
    orth = True
    for mw, mv in zip(w, v):
        orth = orth and is_orthogonal(mw.subspace, mv.subspace, pol)
        moved = apply_operator(s, mv.subspace, policy)
        total += mw.weight * mv.weight * projector(moved) @ s_inv @ projector(mw.subspace)
    return ObstructionCheck(pairwise_orthogonal=bool(orth), transformed_sum_norm=spectral_norm(total))
