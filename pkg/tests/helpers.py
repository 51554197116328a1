"""Random instances and the worked example families used across tests."""

import math

import numpy as np

from fusionframes import DiscreteFrame, FusionFamily, orthonormalize

E1, E2, E3 = (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)
SQRT2 = math.sqrt(2.0)


def random_subspace(rng, d, k):
    return orthonormalize(rng.standard_normal((d, k)))


def random_frame(rng, d, extra=None):
    n = d + (rng.integers(0, 4) if extra is None else extra)
    return DiscreteFrame(rng.standard_normal((n, d)))


def random_fusion_frame(rng, d, unit_weights=False, n=None):
    """A fusion frame of R^d with random member dimensions and weights."""
    while True:
        m = n if n is not None else int(rng.integers(1, d + 3))
        subs = [random_subspace(rng, d, int(rng.integers(1, d + 1))) for _ in range(m)]
        weights = np.ones(m) if unit_weights else rng.uniform(0.3, 2.0, m)
        fam = FusionFamily.from_subspaces(subs, weights)
        if sum(fam.dims) >= d and np.linalg.eigvalsh(
            sum(w**2 * s.ortho_basis @ s.ortho_basis.T for s, w in zip(subs, weights))
        )[0] > 1e-3:
            return fam


def example_s():
    w = FusionFamily.from_spans([[E1], [E2], [E3], [E2], [E1], [E3]])
    v = FusionFamily.from_spans([[E1], [E2], [E3], [E3], [E2], [E1]], [2.0] * 6)
    return w, v


def dual_riesz():
    return FusionFamily.from_spans([[E1], [(1, 1, 0)], [E3]])


def dual_riesz_alternate():
    return FusionFamily.from_spans([[E1, E2], [E2], [E3]])


EXAM_LOCAL = [np.array([E1]).T, np.array([(1.0, 1.0, 0.0)]).T, np.array([E2]).T, np.array([E3]).T]
EXAM_LOCAL_DUALS = [np.array([E1]).T, np.array([(0.5, 0.5, 0.0)]).T, np.array([E2]).T, np.array([E3]).T]


def exam_in_r3():
    return FusionFamily.from_spans([[E1], [(1, 1, 0)], [E2], [E3]], [1.0, SQRT2, 1.0, 1.0])


def exam_negative():
    return FusionFamily.from_spans(
        [[(3, -2, 0)], [(1, 1, 0)], [(-2, 3, 0)], [E3]], [0.2, SQRT2 / 5, 0.2, 1.0]
    )


def remark_duals():
    return {
        "i": FusionFamily.from_spans([[(1, -1, 0), E3], [E1, E2], [E2, E3]]),
        "ii": FusionFamily.from_spans([[(1, -1, 0), E3], [E2, E3], [E2, E3]]),
        "iii": FusionFamily.from_spans([[(1, -1, 0), (1, 1, 0)], [E1, E2], [E2, E3]]),
        "iv": FusionFamily.from_spans([[(1, -1, 0), (1, 1, 0)], [E2, E3], [E2, E3]]),
    }


def same_family(a, b, policy=None):
    from fusionframes import DEFAULT_POLICY, subspace_equal

    policy = policy or DEFAULT_POLICY
    return len(a) == len(b) and all(
        subspace_equal(x, y, policy) for x, y in zip(a.subspaces, b.subspaces)
    ) and np.array_equal(a.weights, b.weights)
