"""Replay of the bundled worked-example corpus.

Each fixture file holds named families (as family documents), optional
discrete frames and local duals, and a list of checks with their expected
values.  Every check yields one :class:`Row`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import List, Optional

import numpy as np

from . import errors
from .builder import (
    associated_discrete_frame,
    construct_dual_by_augmentation,
    enumerate_augmented_duals,
    lift_local_duals,
)
from .discrete import DiscreteFrame, canonical_dual, frame_operator, is_dual_pair
from .fusion import (
    alternate_dual_check,
    canonical_dual_family,
    fusion_frame_bounds,
    fusion_frame_operator,
    is_orthonormal_fusion_basis,
    mutual_dual_check,
    riesz_report,
)
from .io import document_to_spec
from .subspaces import DEFAULT_POLICY, TolerancePolicy, orthonormalize, projector, spectral_norm, subspace_equal

__all__ = ["Row", "default_fixture_dir", "load_fixtures", "run_fixture", "run_corpus"]


@dataclass(frozen=True)
class Row:
    fixture: str
    check: str
    expected: str
    actual: str
    passed: bool


def default_fixture_dir() -> Path:
    return Path(str(resources.files("fusionframes") / "data"))


def load_fixtures(directory=None) -> List[dict]:
    directory = default_fixture_dir() if directory is None else Path(directory)
    fixtures = []
    for path in sorted(directory.glob("*.json")):
        with open(path, encoding="utf-8") as fh:
            fixtures.append(json.load(fh))
    return fixtures


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)) or x is None:
        return str(x)
    if isinstance(x, str):
        return x
    if isinstance(x, (int, float, np.floating)):
        return f"{float(x):.12g}"
    if isinstance(x, list) and all(isinstance(v, str) for v in x):
        return ",".join(x)
    arr = np.asarray(x, dtype=float)
    return np.array2string(arr, precision=6, suppress_small=True, separator=",").replace("\n", "")


class _Runner:
    def __init__(self, fixture: dict, policy: TolerancePolicy):
        self.fixture = fixture
        self.policy = policy
        self.tol = policy.identity_tol
        self.specs = {k: document_to_spec(v, policy) for k, v in fixture.get("families", {}).items()}
        self.frames = {k: DiscreteFrame(v) for k, v in fixture.get("frames", {}).items()}
        self.local = {
            k: [np.array(vs, dtype=float).T for vs in v] for k, v in fixture.get("local_duals", {}).items()
        }

    def fam(self, key):
        return self.specs[key].family

    def run(self, check: dict) -> Row:
        kind = check["kind"]
        label = kind + "[" + ",".join(str(check[k]) for k in ("family", "W", "V", "F", "G", "duals") if k in check) + "]"
        if kind == "augment":
            label = f"augment[{check['family']}->{check['expected']}]"
        fn = getattr(self, "_" + kind)
        try:
            expected, actual, ok = fn(check)
        except errors.FrameError as exc:
            want = check.get("error")
            name = type(exc).__name__
            return Row(self.fixture["name"], label, str(want), name, want == name)
        if "error" in check:
            return Row(self.fixture["name"], label, check["error"], "no error", False)
        return Row(self.fixture["name"], label, _fmt(expected), _fmt(actual), bool(ok))

    def _close(self, a, b, check) -> bool:
        atol = check.get("atol", self.tol)
        return bool(np.allclose(np.asarray(a, dtype=float), np.asarray(b, dtype=float), rtol=0, atol=atol))

    def _fusion_operator(self, c):
        s = fusion_frame_operator(self.fam(c["family"]))
        return c["expected"], s, self._close(s, c["expected"], c)

    def _fusion_bounds(self, c):
        b = fusion_frame_bounds(self.fam(c["family"]))
        got = [b.lower, b.upper]
        want = [c["lower"], c["upper"]]
        return want, got, self._close(got, want, c)

    def _upper_bound_at_most(self, c):
        b = fusion_frame_bounds(self.fam(c["family"]))
        return f"<= {c['bound']}", b.upper, b.upper <= c["bound"] and b.brackets(0.0, c["bound"])

    def _canonical_dual_spans(self, c):
        dual = canonical_dual_family(self.fam(c["family"]), self.policy)
        want = [orthonormalize(np.array(s, dtype=float).T, self.policy) for s in c["spans"]]
        got = dual.subspaces
        ok = len(want) == len(got) and all(subspace_equal(a, b, self.policy) for a, b in zip(want, got))
        diff = max(spectral_norm(projector(a) - projector(b)) for a, b in zip(want, got))
        return "spans equal", f"max projector gap {diff:.3g}", ok

    def _alternate_dual(self, c):
        rep = alternate_dual_check(self.fam(c["W"]), self.fam(c["V"]), self.tol, self.policy)
        ok = rep.is_dual == c["is_dual"] and self._close(rep.residual, c["residual"], c)
        return (
            f"is_dual={c['is_dual']} residual={_fmt(c['residual'])}",
            f"is_dual={rep.is_dual} residual={_fmt(rep.residual)}",
            ok,
        )

    def _mutual_dual(self, c):
        got = mutual_dual_check(self.fam(c["W"]), self.fam(c["V"]), self.tol, self.policy)
        return c["expected"], got, got == c["expected"]

    def _riesz(self, c):
        got = riesz_report(self.fam(c["family"]), policy=self.policy).is_riesz
        return c["is_riesz"], got, got == c["is_riesz"]

    def _orthonormal_basis(self, c):
        got = is_orthonormal_fusion_basis(self.fam(c["family"]), self.tol)
        return c["expected"], got, got == c["expected"]

    def _associated(self, key):
        spec = self.specs[key]
        if spec.local_frames is None:
            raise errors.LocalSpanMismatch(f"family {key} has no local frames")
        return associated_discrete_frame(spec.family, spec.local_frames, self.policy)

    def _associated_frame_operator(self, c):
        s = frame_operator(self._associated(c["family"]))
        return c["expected"], s, self._close(s, c["expected"], c)

    def _associated_canonical_dual(self, c):
        g = canonical_dual(self._associated(c["family"]), self.policy).vectors
        return c["expected"], g, self._close(g, c["expected"], c)

    def _lift_local_duals(self, c):
        spec = self.specs[c["family"]]
        lifted = lift_local_duals(spec.family, spec.local_frames, self.local[c["duals"]], self.policy)
        rep = is_dual_pair(self._associated(c["family"]), lifted, self.tol)
        return f"is_dual={c.get('is_dual')}", f"is_dual={rep.is_dual} residual={_fmt(rep.residual)}", rep.is_dual == c.get("is_dual")

    def _local_duals_outside_canonical(self, c):
        fam = self.fam(c["family"])
        dual = canonical_dual_family(fam, self.policy)
        norms = []
        for s, g in zip(dual.subspaces, self.local[c["duals"]]):
            out = g - projector(s) @ g
            norms.append(float(np.linalg.norm(out, axis=0).max()))
        ok = max(norms) > c["min_norm"] and self._close(norms, c["norms"], c)
        return c["norms"], norms, ok

    def _discrete_dual(self, c):
        rep = is_dual_pair(self.frames[c["F"]], self.frames[c["G"]], self.tol)
        ok = rep.is_dual == c["is_dual"] and self._close(rep.residual, c["residual"], c)
        return (
            f"is_dual={c['is_dual']} residual={_fmt(c['residual'])}",
            f"is_dual={rep.is_dual} residual={_fmt(rep.residual)}",
            ok,
        )

    def _augment(self, c):
        fam = self.fam(c["family"])
        v = construct_dual_by_augmentation(fam, [np.array(h, dtype=float) for h in c["h"]], self.policy)
        want = self.fam(c["expected"])
        same = all(subspace_equal(a, b, self.policy) for a, b in zip(v.subspaces, want.subspaces))
        dual = alternate_dual_check(fam, v, self.tol, self.policy).is_dual
        return f"family {c['expected']}, dual", f"match={same} dual={dual}", same and dual

    def _enumerate_contains(self, c):
        fam = self.fam(c["family"])
        found = enumerate_augmented_duals(fam, tol=self.tol, policy=self.policy)
        hits = []
        for key in c["expected"]:
            want = self.fam(key)
            hits.append(any(
                all(subspace_equal(a, b, self.policy) for a, b in zip(f.subspaces, want.subspaces))
                for f in found
            ))
        return c["expected"], [k for k, h in zip(c["expected"], hits) if h], all(hits)


def run_fixture(fixture: dict, policy: TolerancePolicy = DEFAULT_POLICY) -> List[Row]:
    try:
        runner = _Runner(fixture, policy)
    except errors.FrameError as exc:
        return [Row(fixture.get("name", "?"), "load", "valid fixture", f"{type(exc).__name__}: {exc}", False)]
    return [runner.run(c) for c in fixture["checks"]]


def run_corpus(
    directory=None,
    policy: TolerancePolicy = DEFAULT_POLICY,
    filter: Optional[str] = None,
) -> List[Row]:
    rows: List[Row] = []
    for fixture in load_fixtures(directory):
        if filter is not None and fixture.get("name") != filter:
            continue
        rows.extend(run_fixture(fixture, policy))
    return rows
