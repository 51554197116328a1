"""Finite discrete frames in R^d."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotAFrame, NullMapViolation, ShapeMismatch
from .subspaces import DEFAULT_POLICY, TolerancePolicy, as_matrix, spectral_norm

__all__ = [
    "DiscreteFrame",
    "FrameBounds",
    "DualCheckReport",
    "frame_operator",
    "frame_bounds",
    "is_frame",
    "canonical_dual",
    "is_dual_pair",
    "dual_from_nullmap",
    "is_riesz_basis",
]


class DiscreteFrame:
    """An ordered, finite family of vectors in R^d.

    The synthesis matrix ``T = [f_1 ... f_n]`` is available as
    :attr:`synthesis`; row ``i`` of :attr:`vectors` is ``f_i``.
    """

    __slots__ = ("_t",)

    def __init__(self, vectors):
        t = as_matrix(vectors)
        t.setflags(write=False)
        self._t = t

    @classmethod
    def from_synthesis(cls, t) -> "DiscreteFrame":
        return cls(np.asarray(t, dtype=float).T)

    @property
    def synthesis(self) -> np.ndarray:
        return self._t

    @property
    def vectors(self) -> np.ndarray:
        return self._t.T

    @property
    def ambient_dim(self) -> int:
        return self._t.shape[0]

    def __len__(self):
        return self._t.shape[1]

    def __repr__(self):
        return f"DiscreteFrame(ambient_dim={self.ambient_dim}, n={len(self)})"


@dataclass(frozen=True)
class FrameBounds:
    lower: float
    upper: float

    def brackets(self, lower: float, upper: float) -> bool:
        """True when ``(lower, upper)`` is a valid, possibly loose, pair of bounds."""
        return 0 <= lower <= self.lower and upper >= self.upper


@dataclass(frozen=True)
class DualCheckReport:
    """Outcome of a reconstruction test.

    ``residual`` is the spectral norm of the reconstruction operator minus
    the identity; ``is_dual`` is ``residual <= tolerance``.
    """

    residual: float
    is_dual: bool
    tolerance: float

    @classmethod
    def from_operator(cls, op, tol: float) -> "DualCheckReport":
        residual = spectral_norm(op - np.eye(op.shape[0]))
        return cls(residual=residual, is_dual=bool(residual <= tol), tolerance=float(tol))


def frame_operator(frame: DiscreteFrame) -> np.ndarray:
    t = frame.synthesis
    return t @ t.T


def _extreme_eigenvalues(s: np.ndarray) -> FrameBounds:
    eig = np.linalg.eigvalsh((s + s.T) / 2)
    # clip round-off on PSD matrices
    return FrameBounds(lower=max(float(eig[0]), 0.0), upper=max(float(eig[-1]), 0.0))


def frame_bounds(frame: DiscreteFrame) -> FrameBounds:
    """Optimal frame bounds: extreme eigenvalues of the frame operator."""
    return _extreme_eigenvalues(frame_operator(frame))


def _positive_lower(bounds: FrameBounds, d: int, policy: TolerancePolicy) -> bool:
    return bounds.lower > policy.rank_tol_factor * d * bounds.upper and bounds.upper > 0


def is_frame(frame: DiscreteFrame, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    return _positive_lower(frame_bounds(frame), frame.ambient_dim, policy)


def _inverse_frame_operator(frame: DiscreteFrame, policy: TolerancePolicy) -> np.ndarray:
    if not is_frame(frame, policy):
        raise NotAFrame("frame operator is singular")
    return np.linalg.inv(frame_operator(frame))


def canonical_dual(frame: DiscreteFrame, policy: TolerancePolicy = DEFAULT_POLICY) -> DiscreteFrame:
    s_inv = _inverse_frame_operator(frame, policy)
    return DiscreteFrame.from_synthesis(s_inv @ frame.synthesis)


def is_dual_pair(f: DiscreteFrame, g: DiscreteFrame, tol: float = DEFAULT_POLICY.identity_tol) -> DualCheckReport:
    """Test whether ``g`` is a dual of ``f``, i.e. ``sum_i f_i g_i^T = I``."""
    if f.ambient_dim != g.ambient_dim or len(f) != len(g):
        raise ShapeMismatch(
            f"cannot pair {len(f)} vectors in R^{f.ambient_dim} "
            f"with {len(g)} vectors in R^{g.ambient_dim}"
        )
    return DualCheckReport.from_operator(f.synthesis @ g.synthesis.T, tol)


def dual_from_nullmap(frame: DiscreteFrame, psi, policy: TolerancePolicy = DEFAULT_POLICY) -> DiscreteFrame:
    """Dual frame attached to an ``n x d`` matrix ``psi`` with ``T psi = 0``.

    Returns ``g_i = S^{-1} f_i + psi[i]``, so ``psi = 0`` gives the
    canonical dual and every dual arises from exactly one such ``psi``.
    """
    psi = np.asarray(psi, dtype=float)
    n, d = len(frame), frame.ambient_dim
    if psi.shape != (n, d):
        raise ShapeMismatch(f"null map must have shape {(n, d)}, got {psi.shape}")
    leak = spectral_norm(frame.synthesis @ psi)
    if leak > policy.identity_tol:
        raise NullMapViolation(f"synthesis matrix does not annihilate the null map (norm {leak:.3g})")
    s_inv = _inverse_frame_operator(frame, policy)
    return DiscreteFrame.from_synthesis(s_inv @ frame.synthesis + psi.T)


def is_riesz_basis(frame: DiscreteFrame, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    return len(frame) == frame.ambient_dim and is_frame(frame, policy)
