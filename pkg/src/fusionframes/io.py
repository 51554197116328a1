"""JSON family documents.

A document looks like::

    {
      "name": "optional label",
      "dimension": 3,
      "subspaces": [{"weight": 1, "span": [[1, 0, 0]]}, ...],
      "local_frames": [[[1, 0, 0]], ...]
    }

``weight`` defaults to 1.0 and ``local_frames`` is optional.  Spans are
orthonormalized on load; serialization writes the stored orthonormal bases
with full float precision, so a round trip reproduces the same subspaces
and bit-identical weights.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from typing import Any, List, Optional

import numpy as np

from .errors import ParseError, ValidationError, ZeroSpan
from .fusion import FusionFamily, WeightedSubspace
from .subspaces import DEFAULT_POLICY, TolerancePolicy, orthonormalize

__all__ = ["FamilySpec", "parse_family", "load_family", "family_to_document", "dump_document"]


@dataclass(frozen=True)
class FamilySpec:
    family: FusionFamily
    local_frames: Optional[List[np.ndarray]] = None
    name: Optional[str] = None


def _vector(value: Any, dim: int, where: str) -> np.ndarray:
    if not isinstance(value, list) or len(value) != dim:
        raise ValidationError(f"{where}: expected a list of {dim} numbers")
    for x in value:
        if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
            raise ValidationError(f"{where}: entries must be finite numbers, got {x!r}")
    return np.array(value, dtype=float)


def _vector_list(value: Any, dim: int, where: str) -> np.ndarray:
    if not isinstance(value, list) or not value:
        raise ValidationError(f"{where}: expected a nonempty list of vectors")
    return np.column_stack([_vector(v, dim, f"{where}[{j}]") for j, v in enumerate(value)])


def document_to_spec(doc: Any, policy: TolerancePolicy = DEFAULT_POLICY) -> FamilySpec:
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    dim = doc.get("dimension")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ValidationError(f"dimension: expected a positive integer, got {dim!r}")
    subs = doc.get("subspaces")
    if not isinstance(subs, list) or not subs:
        raise ValidationError("subspaces: expected a nonempty list")

    members = []
    for i, entry in enumerate(subs):
        where = f"subspaces[{i}]"
        if not isinstance(entry, dict):
            raise ValidationError(f"{where}: expected an object")
        weight = entry.get("weight", 1.0)
        if isinstance(weight, bool) or not isinstance(weight, (int, float)) or not math.isfinite(weight) or weight <= 0:
            raise ValidationError(f"{where}.weight: must be a positive number, got {weight!r}")
        span = _vector_list(entry.get("span"), dim, f"{where}.span")
        try:
            subspace = orthonormalize(span, policy)
        except ZeroSpan as exc:
            raise ValidationError(f"{where}.span: {exc}") from exc
        members.append(WeightedSubspace(subspace, float(weight)))

    local = None
    if doc.get("local_frames") is not None:
        raw = doc["local_frames"]
        if not isinstance(raw, list) or len(raw) != len(members):
            raise ValidationError(f"local_frames: expected {len(members)} lists of vectors")
        local = [_vector_list(v, dim, f"local_frames[{i}]") for i, v in enumerate(raw)]

    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ValidationError("name: expected a string")
    return FamilySpec(FusionFamily(members), local, name)


def parse_family(source, policy: TolerancePolicy = DEFAULT_POLICY) -> FamilySpec:
    """Parse a family document from a path or from JSON text.

    Strings that look like JSON (leading ``{``) are parsed directly; any
    other string or :class:`os.PathLike` is treated as a file path.
    """
    if isinstance(source, (str, os.PathLike)) and not str(source).lstrip().startswith("{"):
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"{source}: {exc.strerror}") from exc
    else:
        text = str(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return document_to_spec(doc, policy)


load_family = parse_family


def family_to_document(family: FusionFamily, name: Optional[str] = None, local_frames=None) -> dict:
    doc: dict = {}
    if name is not None:
        doc["name"] = name
    doc["dimension"] = family.ambient_dim
    doc["subspaces"] = [
        {"weight": m.weight, "span": m.subspace.ortho_basis.T.tolist()} for m in family
    ]
    if local_frames is not None:
        doc["local_frames"] = [np.asarray(f, dtype=float).T.tolist() for f in local_frames]
    return doc


def dump_document(doc) -> str:
    # json writes floats with repr, which round-trips exactly
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
