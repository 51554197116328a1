"""Subspaces of R^d and the small amount of linear algebra built on them.

A subspace is stored through an orthonormal basis.  Bases are produced by
a column-pivoted QR factorization whose rank is decided from singular
values, so the basis itself (sign, order) is an implementation detail and
only projectors are ever compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from .errors import DimensionMismatch, ZeroSpan

__all__ = [
    "TolerancePolicy",
    "DEFAULT_POLICY",
    "Subspace",
    "as_matrix",
    "numerical_rank",
    "orthonormalize",
    "projector",
    "project",
    "orthocomplement",
    "subspace_sum",
    "apply_operator",
    "subspace_equal",
    "is_orthogonal",
    "full_space",
    "spectral_norm",
]


@dataclass(frozen=True)
class TolerancePolicy:
    """Thresholds shared by every numerical decision in the package.

    ``rank_tol_factor`` scales the singular value cut-off used for rank
    decisions, ``identity_tol`` bounds residuals of operator identities and
    ``orth_tol`` bounds the departure of a stored basis from orthonormality.
    """

    rank_tol_factor: float = 1e-12
    identity_tol: float = 1e-8
    orth_tol: float = 1e-10

    def __post_init__(self):
        for name in ("rank_tol_factor", "identity_tol", "orth_tol"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be strictly positive, got {value!r}")

    def with_identity_tol(self, tol: float) -> "TolerancePolicy":
        return TolerancePolicy(self.rank_tol_factor, float(tol), self.orth_tol)


DEFAULT_POLICY = TolerancePolicy()


def spectral_norm(a) -> float:
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def as_matrix(vectors, dim: Optional[int] = None) -> np.ndarray:
    """Stack vectors as the columns of a ``d x n`` float array."""
    rows = [np.asarray(v, dtype=float).ravel() for v in vectors]
    if not rows:
        raise ZeroSpan("no vectors given")
    d = rows[0].shape[0] if dim is None else dim
    for v in rows:
        if v.shape[0] != d:
            raise DimensionMismatch(f"expected vectors of length {d}, got {v.shape[0]}")
        if not np.all(np.isfinite(v)):
            raise ValueError("vector entries must be finite")
    return np.column_stack(rows)


def _threshold(sigma: np.ndarray, shape, policy: TolerancePolicy) -> float:
    if sigma.size == 0:
        return 0.0
    return policy.rank_tol_factor * max(shape) * float(sigma[0])


def numerical_rank(a, policy: TolerancePolicy = DEFAULT_POLICY) -> int:
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return 0
    sigma = np.linalg.svd(a, compute_uv=False)
    if sigma[0] == 0.0:
        return 0
    return int(np.count_nonzero(sigma > _threshold(sigma, a.shape, policy)))


class Subspace:
    """A nonzero subspace of R^d held by an orthonormal ``d x k`` basis.

    Instances are immutable; build them with :func:`orthonormalize` unless
    the basis is already known to be orthonormal.
    """

    __slots__ = ("_basis",)

    def __init__(self, ortho_basis, policy: TolerancePolicy = DEFAULT_POLICY):
        q = np.array(ortho_basis, dtype=float, copy=True)
        if q.ndim == 1:
            q = q[:, None]
        if q.ndim != 2 or q.shape[1] < 1 or q.shape[1] > q.shape[0]:
            raise ValueError(f"basis must be d x k with 1 <= k <= d, got shape {q.shape}")
        if not np.all(np.isfinite(q)):
            raise ValueError("basis entries must be finite")
        gram_err = spectral_norm(q.T @ q - np.eye(q.shape[1]))
        if gram_err > policy.orth_tol:
            raise ValueError(f"basis columns are not orthonormal (error {gram_err:.3g})")
        q.setflags(write=False)
        self._basis = q

    @property
    def ortho_basis(self) -> np.ndarray:
        return self._basis

    @property
    def ambient_dim(self) -> int:
        return self._basis.shape[0]

    @property
    def dim(self) -> int:
        return self._basis.shape[1]

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def full_space(d: int) -> Subspace:
    return Subspace(np.eye(d))


def _canonical_signs(q: np.ndarray) -> np.ndarray:
    # largest-magnitude entry of every column made positive; -0.0 cleared
    idx = np.argmax(np.abs(q), axis=0)
    signs = np.sign(q[idx, np.arange(q.shape[1])])
    signs[signs == 0] = 1.0
    return q * signs + 0.0


def orthonormalize(vectors, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """Return the span of ``vectors`` as a :class:`Subspace`.

    ``vectors`` is either an iterable of 1-D vectors or a ``d x n`` array
    whose columns span the subspace.  Raises :class:`ZeroSpan` when the
    numerical rank is zero.
    """
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        a = np.asarray(vectors, dtype=float)
        if not np.all(np.isfinite(a)):
            raise ValueError("vector entries must be finite")
    else:
        a = as_matrix(vectors)
    r = numerical_rank(a, policy)
    if r == 0:
        raise ZeroSpan("vectors span the zero subspace")
    q, _, _ = scipy.linalg.qr(a, mode="economic", pivoting=True)
    return Subspace(_canonical_signs(q[:, :r]), policy)


def projector(s: Subspace) -> np.ndarray:
    q = s.ortho_basis
    return q @ q.T


def _check_same_dim(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def project(s: Subspace, f) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if f.shape[0] != s.ambient_dim:
        raise DimensionMismatch(f"vector of length {f.shape[0]} in R^{s.ambient_dim}")
    q = s.ortho_basis
    return q @ (q.T @ f)


def orthocomplement(s: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Optional[Subspace]:
    """Orthogonal complement of ``s``, or ``None`` when ``s`` is the whole space."""
    d = s.ambient_dim
    if s.dim == d:
        return None
    residual = np.eye(d) - projector(s)
    r = d - s.dim
    q, _, _ = scipy.linalg.qr(residual, mode="economic", pivoting=True)
    return Subspace(_canonical_signs(q[:, :r]), policy)


def subspace_sum(a: Subspace, b: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    _check_same_dim(a, b)
    return orthonormalize(np.hstack([a.ortho_basis, b.ortho_basis]), policy)


def apply_operator(t, s: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """Image ``t(s)`` of a subspace under a square matrix."""
    t = np.asarray(t, dtype=float)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[1] != s.ambient_dim:
        raise DimensionMismatch(f"operator of shape {t.shape} cannot act on R^{s.ambient_dim}")
    image = t @ s.ortho_basis
    # rank is judged relative to the operator scale, not just the image
    if numerical_rank(t, policy) == 0 or spectral_norm(image) <= (
        policy.rank_tol_factor * max(t.shape) * spectral_norm(t)
    ):
        raise ZeroSpan("operator annihilates the subspace")
    return orthonormalize(image, policy)


def subspace_equal(a: Subspace, b: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    _check_same_dim(a, b)
    return spectral_norm(projector(a) - projector(b)) <= policy.identity_tol


def is_orthogonal(a: Subspace, b: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    _check_same_dim(a, b)
    return spectral_norm(a.ortho_basis.T @ b.ortho_basis) <= policy.identity_tol
