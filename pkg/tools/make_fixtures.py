"""Write the bundled worked-example corpus to src/fusionframes/data/.

Expected values are the printed example values; negative-pin residuals come
from tools/exact_pins.py (exact symbolic computation).
"""
import json
import math
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "fusionframes" / "data"


def num(x):
    return float(format(x, ".17g"))


R2 = num(math.sqrt(2))
E1, E2, E3 = [1, 0, 0], [0, 1, 0], [0, 0, 1]


def family(spans, weights, name=None, local=None):
    doc = {}
    if name:
        doc["name"] = name
    doc["dimension"] = len(spans[0][0])
    doc["subspaces"] = [{"weight": w, "span": s} for s, w in zip(spans, weights)]
    if local is not None:
        doc["local_frames"] = local
    return doc


def write(name, data):
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / f"{name}.json").write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


S_W = family([[E1], [E2], [E3], [E2], [E1], [E3]], [1] * 6, "example-S W")
S_V = family([[E1], [E2], [E3], [E3], [E2], [E1]], [2] * 6, "example-S V")

write("example_s", {
    "name": "example-s",
    "description": "two fusion frames where V is a dual of W but not conversely",
    "families": {"W": S_W, "V": S_V},
    "checks": [
        {"kind": "fusion_operator", "family": "W", "expected": [[2, 0, 0], [0, 2, 0], [0, 0, 2]]},
        {"kind": "fusion_operator", "family": "V", "expected": [[8, 0, 0], [0, 8, 0], [0, 0, 8]]},
        {"kind": "fusion_bounds", "family": "W", "lower": 2, "upper": 2},
        {"kind": "fusion_bounds", "family": "V", "lower": 8, "upper": 8},
        {"kind": "alternate_dual", "W": "W", "V": "V", "is_dual": True, "residual": 0.0},
        {"kind": "alternate_dual", "W": "V", "V": "W", "is_dual": False, "residual": 0.75},
        {"kind": "mutual_dual", "W": "W", "V": "V", "expected": False},
    ],
})

DR_W = family([[E1], [[1, 1, 0]], [E3]], [1, 1, 1], "dual-riesz W")
DR_V = family([[E1, E2], [E2], [E3]], [1, 1, 1], "dual-riesz alternate dual")
write("dual_riesz", {
    "name": "dual-riesz",
    "description": "fusion Riesz basis with a second dual that is not a Riesz basis",
    "families": {"W": DR_W, "V": DR_V},
    "checks": [
        {"kind": "fusion_operator", "family": "W", "expected": [[1.5, 0.5, 0], [0.5, 0.5, 0], [0, 0, 1]]},
        {"kind": "fusion_bounds", "family": "W", "lower": num(1 - math.sqrt(2) / 2), "upper": num(1 + math.sqrt(2) / 2)},
        {"kind": "upper_bound_at_most", "family": "W", "bound": 2},
        {"kind": "canonical_dual_spans", "family": "W", "spans": [[[1, -1, 0]], [E2], [E3]]},
        {"kind": "alternate_dual", "W": "W", "V": "V", "is_dual": True, "residual": 0.0},
        {"kind": "riesz", "family": "W", "is_riesz": True},
        {"kind": "riesz", "family": "V", "is_riesz": False},
        {"kind": "orthonormal_basis", "family": "W", "expected": False},
    ],
})

EX_LOCAL = [[E1], [[1, 1, 0]], [E2], [E3]]
EX_W = family([[E1], [[1, 1, 0]], [E2], [E3]], [1, R2, 1, 1], "exam-in-R3 W", local=EX_LOCAL)
EX_NEG = family([[[3, -2, 0]], [[1, 1, 0]], [[-2, 3, 0]], [E3]], [0.2, num(math.sqrt(2) / 5), 0.2, 1],
                "directions of the discrete canonical dual")
third = num(1 / 3)
write("exam_in_r3", {
    "name": "exam-in-r3",
    "description": "local canonical duals versus the canonical dual fusion frame",
    "families": {"W": EX_W, "N": EX_NEG},
    "local_duals": {"G": [[E1], [[0.5, 0.5, 0]], [E2], [E3]], "L": EX_LOCAL},
    "checks": [
        {"kind": "fusion_operator", "family": "W", "expected": [[2, 1, 0], [1, 2, 0], [0, 0, 1]]},
        {"kind": "canonical_dual_spans", "family": "W",
         "spans": [[[num(2 / 3), -third, 0]], [[third, third, 0]], [[-third, num(2 / 3), 0]], [E3]]},
        {"kind": "associated_frame_operator", "family": "W", "expected": [[3, 2, 0], [2, 3, 0], [0, 0, 1]]},
        {"kind": "associated_canonical_dual", "family": "W",
         "expected": [[0.6, -0.4, 0], [num(math.sqrt(2) / 5), num(math.sqrt(2) / 5), 0], [-0.4, 0.6, 0], [0, 0, 1]]},
        {"kind": "lift_local_duals", "family": "W", "duals": "G", "is_dual": True},
        {"kind": "lift_local_duals", "family": "W", "duals": "L", "error": "NotLocalDual"},
        {"kind": "local_duals_outside_canonical", "family": "W", "duals": "G",
         "min_norm": 0.1, "norms": [num(math.sqrt(5) / 5), 0.0, num(math.sqrt(5) / 5), 0.0]},
        {"kind": "fusion_operator", "family": "N",
         "expected": [[0.08, num(1 / 325), 0], [num(1 / 325), 0.08, 0], [0, 0, 1]]},
        {"kind": "alternate_dual", "W": "W", "V": "N", "is_dual": False, "residual": num(161 / 195)},
        {"kind": "alternate_dual", "W": "N", "V": "W", "is_dual": False, "residual": num(119 / 27)},
    ],
})

write("six_vector", {
    "name": "six-vector",
    "description": "dual fusion frames whose associated discrete frames are not dual",
    "families": {"W": S_W, "V": S_V},
    "frames": {
        "F": [E1, E2, E3, E2, E1, E3],
        "G": [[2, 0, 0], [0, 2, 0], [0, 0, 2], [0, 0, 2], [0, 2, 0], [2, 0, 0]],
    },
    "checks": [
        {"kind": "fusion_operator", "family": "V", "expected": [[8, 0, 0], [0, 8, 0], [0, 0, 8]]},
        {"kind": "alternate_dual", "W": "W", "V": "V", "is_dual": True, "residual": 0.0},
        {"kind": "discrete_dual", "F": "F", "G": "G", "is_dual": False, "residual": 3.0},
    ],
})

H = num(1 / math.sqrt(2))
remark = {
    "i": family([[[1, -1, 0], E3], [E1, E2], [E2, E3]], [1, 1, 1], "remark (i)"),
    "ii": family([[[1, -1, 0], E3], [E2, E3], [E2, E3]], [1, 1, 1], "remark (ii)"),
    "iii": family([[[1, -1, 0], [1, 1, 0]], [E1, E2], [E2, E3]], [1, 1, 1], "remark (iii)"),
    "iv": family([[[1, -1, 0], [1, 1, 0]], [E2, E3], [E2, E3]], [1, 1, 1], "remark (iv)"),
}
hs = {
    "i": [E3, E1, E2],
    "ii": [E3, E3, E2],
    "iii": [[H, H, 0], E1, E2],
    "iv": [[H, H, 0], E3, E2],
}
checks = []
for key in remark:
    checks.append({"kind": "alternate_dual", "W": "W", "V": key, "is_dual": True, "residual": 0.0})
for key in remark:
    checks.append({"kind": "augment", "family": "W", "h": hs[key], "expected": key})
checks.append({"kind": "enumerate_contains", "family": "W", "expected": ["i", "ii"]})
write("remark_duals", {
    "name": "remark-duals",
    "description": "duals built by augmenting the canonical dual subspaces",
    "families": {"W": DR_W, **remark},
    "checks": checks,
})
