import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusionframes import (
    DEFAULT_POLICY,
    DimensionMismatch,
    TolerancePolicy,
    ZeroSpan,
    apply_operator,
    full_space,
    is_orthogonal,
    orthocomplement,
    orthonormalize,
    project,
    projector,
    subspace_equal,
    subspace_sum,
)
from fusionframes.subspaces import spectral_norm

from helpers import E1, E2, E3, random_subspace

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(2, 6)


def test_orthonormalize_axis():
    s = orthonormalize([E1])
    assert s.dim == 1
    np.testing.assert_allclose(np.abs(s.ortho_basis[:, 0]), E1)


def test_orthonormalize_collinear_rank_one():
    s = orthonormalize([(1, 1, 0), (2, 2, 0)])
    assert s.dim == 1
    np.testing.assert_allclose(np.abs(s.ortho_basis[:, 0]), np.array([1, 1, 0]) / np.sqrt(2))


def test_orthonormalize_zero():
    with pytest.raises(ZeroSpan):
        orthonormalize([(0, 0, 0)])


def test_orthonormalize_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        orthonormalize([(1, 0, 0), (1, 0)])


def test_tolerance_policy_positive():
    with pytest.raises(ValueError):
        TolerancePolicy(identity_tol=0.0)


def test_projector_examples():
    np.testing.assert_array_equal(projector(orthonormalize([E1])), np.diag([1.0, 0, 0]))
    q = np.array([1.0, 1.0, 0.0]) / np.sqrt(2)
    np.testing.assert_allclose(projector(orthonormalize([(1, 1, 0)])), np.outer(q, q), atol=1e-15)
    np.testing.assert_allclose(projector(full_space(3)), np.eye(3))


def test_project_examples():
    a, b, c = 0.3, -1.2, 4.0
    np.testing.assert_allclose(project(orthonormalize([E1]), (a, b, c)), (a, 0, 0))
    np.testing.assert_allclose(project(orthonormalize([(1, 1, 0)]), E1), (0.5, 0.5, 0), atol=1e-15)
    f = np.array([a, b, c])
    np.testing.assert_allclose(project(full_space(3), f), f)
    with pytest.raises(DimensionMismatch):
        project(full_space(3), (1.0, 2.0))


def test_orthocomplement_examples():
    c = orthocomplement(orthonormalize([(1, -1, 0)]))
    assert subspace_equal(c, orthonormalize([(1, 1, 0), E3]))
    c = orthocomplement(orthonormalize([E2]))
    assert subspace_equal(c, orthonormalize([E1, E3]))
    assert orthocomplement(full_space(3)) is None


def test_orthocomplement_basis_follows_coordinate_axes():
    c = orthocomplement(orthonormalize([E2]))
    cols = {tuple(np.round(c.ortho_basis[:, j], 12)) for j in range(c.dim)}
    assert cols == {E1, E3}


def test_subspace_sum_examples():
    assert subspace_equal(subspace_sum(orthonormalize([E1]), orthonormalize([E2])), orthonormalize([E1, E2]))
    v1 = subspace_sum(orthonormalize([(1, -1, 0)]), orthonormalize([E3]))
    assert subspace_equal(v1, orthonormalize([(1, -1, 0), E3]))
    e1 = orthonormalize([E1])
    assert subspace_sum(e1, e1).dim == 1


def test_apply_operator_examples():
    s_inv = np.linalg.inv(np.array([[1.5, 0.5, 0], [0.5, 0.5, 0], [0, 0, 1]]))
    assert subspace_equal(apply_operator(s_inv, orthonormalize([(1, 1, 0)])), orthonormalize([E2]))
    s_inv = np.linalg.inv(np.array([[2.0, 1, 0], [1, 2, 0], [0, 0, 1]]))
    assert subspace_equal(apply_operator(s_inv, orthonormalize([E1])), orthonormalize([(2 / 3, -1 / 3, 0)]))
    s = orthonormalize([(1, 2, 3), E3])
    assert subspace_equal(apply_operator(np.eye(3), s), s)


def test_apply_operator_rank_drop_and_zero():
    p = np.diag([1.0, 0.0, 0.0])
    assert apply_operator(p, orthonormalize([E1, E2])).dim == 1
    with pytest.raises(ZeroSpan):
        apply_operator(p, orthonormalize([E2]))
    with pytest.raises(DimensionMismatch):
        apply_operator(np.eye(2), orthonormalize([E1]))


def test_subspace_equal_examples():
    assert subspace_equal(orthonormalize([(1, 1, 0)]), orthonormalize([(2, 2, 0)]))
    assert not subspace_equal(orthonormalize([E1]), orthonormalize([E2]))
    assert subspace_equal(orthonormalize([(1, -1, 0), E3]), orthonormalize([E3, (1, -1, 0)]))


def test_is_orthogonal_examples():
    assert is_orthogonal(orthonormalize([E1]), orthonormalize([E2]))
    assert not is_orthogonal(orthonormalize([(1, 1, 0)]), orthonormalize([E1]))
    assert is_orthogonal(orthonormalize([E1]), orthonormalize([E2, E3]))


def test_subspace_is_immutable():
    s = orthonormalize([E1])
    with pytest.raises(ValueError):
        s.ortho_basis[0, 0] = 2.0


@settings(max_examples=60, deadline=None)
@given(seeds, dims)
def test_projector_properties(seed, d):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, d + 1))
    s = random_subspace(rng, d, k)
    p = projector(s)
    tol = DEFAULT_POLICY.identity_tol
    assert spectral_norm(p @ p - p) <= 10 * tol
    assert spectral_norm(p - p.T) <= tol
    assert abs(np.trace(p) - s.dim) <= tol


@settings(max_examples=60, deadline=None)
@given(seeds, dims)
def test_orthocomplement_properties(seed, d):
    rng = np.random.default_rng(seed)
    s = random_subspace(rng, d, int(rng.integers(1, d)))
    c = orthocomplement(s)
    assert c.dim == d - s.dim
    assert subspace_equal(orthocomplement(c), s)
    np.testing.assert_allclose(projector(s) + projector(c), np.eye(d), atol=DEFAULT_POLICY.identity_tol)


@settings(max_examples=60, deadline=None)
@given(seeds, dims)
def test_subspace_sum_commutative_idempotent(seed, d):
    rng = np.random.default_rng(seed)
    a = random_subspace(rng, d, int(rng.integers(1, d + 1)))
    b = random_subspace(rng, d, int(rng.integers(1, d + 1)))
    assert subspace_equal(subspace_sum(a, b), subspace_sum(b, a))
    assert subspace_equal(subspace_sum(a, a), a)


def identity_residual(t, v):
    """``|| P_V T' - P_V T' P_{image(T'^T Q_V)} ||`` with ``T' = T^T``."""
    tp = t.T
    pv = projector(v)
    img = apply_operator(tp.T, v)
    return spectral_norm(pv @ tp - pv @ tp @ projector(img))


@settings(max_examples=60, deadline=None)
@given(seeds, dims)
def test_projection_adjoint_identity(seed, d):
    rng = np.random.default_rng(seed)
    t = rng.standard_normal((d, d))
    v = random_subspace(rng, d, int(rng.integers(1, d + 1)))
    assert identity_residual(t, v) <= 10 * DEFAULT_POLICY.identity_tol


def test_projection_adjoint_identity_singular_operator():
    rng = np.random.default_rng(7)
    t = rng.standard_normal((4, 2)) @ rng.standard_normal((2, 4))
    v = random_subspace(rng, 4, 2)
    assert identity_residual(t, v) <= 10 * DEFAULT_POLICY.identity_tol
