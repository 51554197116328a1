import json
import math

import pytest

from fusionframes import parse_family, subspace_equal, orthonormalize
from fusionframes.cli import main

from helpers import E1, E2, E3, remark_duals, same_family


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def doc(spans, weights=None, **extra):
    weights = weights or [1] * len(spans)
    d = {"dimension": len(spans[0][0]), "subspaces": [{"weight": w, "span": s} for s, w in zip(spans, weights)]}
    d.update(extra)
    return d


@pytest.fixture
def files(tmp_path):
    return {
        "dr": write(tmp_path, "dr.json", doc([[E1], [[1, 1, 0]], [E3]], name="dual riesz")),
        "sw": write(tmp_path, "sw.json", doc([[E1], [E2], [E3], [E2], [E1], [E3]])),
        "sv": write(tmp_path, "sv.json", doc([[E1], [E2], [E3], [E3], [E2], [E1]], [2] * 6)),
        "line": write(tmp_path, "line.json", doc([[E1]])),
        "exam": write(tmp_path, "exam.json", doc(
            [[E1], [[1, 1, 0]], [E2], [E3]], [1, math.sqrt(2), 1, 1],
            local_frames=[[E1], [[1, 1, 0]], [E2], [E3]],
        )),
        "r1": write(tmp_path, "r1.json", doc([[[1.0]]])),
        "h_i": write(tmp_path, "h.json", {"h": [E3, E1, E2]}),
        "h_bad": write(tmp_path, "hbad.json", [E1, None, None]),
        "bad_json": write(tmp_path, "bad.json", {}).replace("bad.json", "bad.json"),
    }


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_dual_riesz(files, capsys):
    code, out, _ = run(capsys, "analyze", files["dr"])
    assert code == 0
    assert f"lower bound A: {1 - math.sqrt(2) / 2:.12g}" in out
    assert "0.292893218813" in out
    assert "fusion riesz basis: yes" in out


def test_analyze_machine_format(files, capsys):
    code, out, _ = run(capsys, "analyze", files["sw"], "--format", "machine")
    report = json.loads(out)
    assert code == 0
    assert report["lower_bound"] == pytest.approx(2.0) and report["upper_bound"] == pytest.approx(2.0)
    assert report["is_bessel"] is True and report["is_tight"] is True


def test_analyze_not_a_frame(files, capsys):
    code, out, _ = run(capsys, "analyze", files["line"])
    assert code == 3
    assert "fusion frame: no" in out


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dimension": 3,', encoding="utf-8")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "line" in err
    zero = write(tmp_path, "z.json", doc([[[0, 0, 0]]]))
    code, _, err = run(capsys, "analyze", zero)
    assert code == 2 and "subspaces[0].span" in err
    wt = write(tmp_path, "w.json", doc([[E1]], [0]))
    code, _, err = run(capsys, "analyze", wt)
    assert code == 2 and "weight" in err
    code, _, _ = run(capsys, "analyze")
    assert code == 2


def test_check_dual_directions(files, capsys):
    code, out, _ = run(capsys, "check-dual", files["sw"], files["sv"])
    assert code == 0 and "-> dual" in out
    code, out, _ = run(capsys, "check-dual", files["sv"], files["sw"])
    assert code == 3 and "residual 0.75 " in out
    code, out, _ = run(capsys, "check-dual", files["sw"], files["sv"], "--both", "--format", "machine")
    checks = json.loads(out)["checks"]
    assert code == 0
    assert [c["is_dual"] for c in checks] == [True, False]
    assert checks[1]["residual"] == pytest.approx(0.75)


def test_check_dual_shape_error(files, capsys):
    code, _, err = run(capsys, "check-dual", files["sw"], files["dr"])
    assert code == 2


def test_construct_canonical_then_check(files, tmp_path, capsys):
    out_path = str(tmp_path / "canon.json")
    code, _, _ = run(capsys, "construct", files["exam"], "--mode", "canonical", "-o", out_path)
    assert code == 0
    canon = parse_family(out_path).family
    spans = [(2 / 3, -1 / 3, 0), (1 / 3, 1 / 3, 0), (-1 / 3, 2 / 3, 0), E3]
    assert all(subspace_equal(s, orthonormalize([x])) for s, x in zip(canon.subspaces, spans))
    code, _, _ = run(capsys, "check-dual", files["exam"], out_path)
    assert code == 0


def test_construct_augment_remark_i(files, capsys):
    code, out, _ = run(capsys, "construct", files["dr"], "--mode", "augment", "--h-file", files["h_i"])
    assert code == 0
    assert same_family(parse_family(out).family, remark_duals()["i"])


def test_construct_error_codes(files, capsys):
    code, _, _ = run(capsys, "construct", files["sv"], "--mode", "augment", "--h-file", files["h_i"])
    assert code == 4
    code, _, _ = run(capsys, "construct", files["dr"], "--mode", "augment", "--h-file", files["h_bad"])
    assert code == 5
    code, _, _ = run(capsys, "construct", files["dr"], "--mode", "augment")
    assert code == 2
    code, _, _ = run(capsys, "construct", files["sv"], "--mode", "enumerate")
    assert code == 4


def test_construct_enumerate(files, capsys):
    code, out, _ = run(capsys, "construct", files["r1"], "--mode", "enumerate")
    assert code == 0
    assert len(json.loads(out)["families"]) == 1
    code, out, err = run(capsys, "construct", files["dr"], "--mode", "enumerate", "--cap", "4")
    payload = json.loads(out)
    assert code == 0 and payload["truncated"] and len(payload["families"]) == 4
    assert "truncated" in err
    code, out, _ = run(capsys, "construct", files["dr"], "--mode", "enumerate", "--seed", "5", "--cap", "3")
    first = out
    assert len(json.loads(out)["families"]) == 3
    _, again, _ = run(capsys, "construct", files["dr"], "--mode", "enumerate", "--seed", "5", "--cap", "3")
    assert again == first


def test_riesz_command(files, tmp_path, capsys):
    code, out, _ = run(capsys, "riesz", files["dr"])
    assert code == 0 and "fusion riesz basis: yes" in out
    alt = write(tmp_path, "alt.json", doc([[E1, E2], [E2], [E3]]))
    code, out, _ = run(capsys, "riesz", alt)
    assert code == 3
    code, out, _ = run(capsys, "riesz", files["dr"], "--dual", alt, "--format", "machine")
    assert json.loads(out)["dual_contains_canonical"] is True


def test_discrete_command(files, capsys):
    code, out, _ = run(capsys, "discrete", files["exam"], "--format", "machine")
    payload = json.loads(out)
    assert code == 0
    assert payload["associated_frame"][1] == pytest.approx([math.sqrt(2), math.sqrt(2), 0])
    assert payload["lifted_is_dual"] is True
    assert payload["canonical_dual"][0] == pytest.approx([0.6, -0.4, 0])
    code, out, _ = run(capsys, "discrete", files["line"])
    assert code == 3


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "FAIL" not in out
    code, out, _ = run(capsys, "verify-paper", "--filter", "dual-riesz", "--format", "machine")
    rows = json.loads(out)["rows"]
    assert code == 0 and rows and {r["fixture"] for r in rows} == {"dual-riesz"}
    code, _, _ = run(capsys, "verify-paper", "--filter", "no-such-fixture")
    assert code == 1


def test_tolerance_env_and_flag(files, capsys, monkeypatch):
    monkeypatch.setenv("FUSIONFRAME_TOL", "0.8")
    code, out, _ = run(capsys, "check-dual", files["sv"], files["sw"])
    assert code == 0 and "tol 0.8" in out
    code, out, _ = run(capsys, "check-dual", files["sv"], files["sw"], "--tol", "1e-8")
    assert code == 3
    monkeypatch.setenv("FUSIONFRAME_TOL", "nope")
    code, _, _ = run(capsys, "analyze", files["dr"])
    assert code == 2


def test_output_is_deterministic(files, capsys):
    outs = {run(capsys, "analyze", files["exam"])[1] for _ in range(3)}
    assert len(outs) == 1
    outs = {run(capsys, "construct", files["dr"], "--mode", "enumerate")[1] for _ in range(2)}
    assert len(outs) == 1
