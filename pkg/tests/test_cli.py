import json
from fractions import Fraction as F

import pytest

from hlharmonic.cli import main
from hlharmonic.functionals import check_p2_harmonic
from hlharmonic.serialize import functional_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_P_to_p(capsys):
    code, out, _ = run(capsys, "expand", "--from", "P", "--to", "p", "--t", "1/3", "P[2]")
    assert code == 0
    assert out.strip() == "(2/3)p[2] + (1/3)p[1,1]"


def test_expand_p_to_Ptilde(capsys):
    code, out, _ = run(capsys, "expand", "--from", "p", "--to", "Ptilde", "--t", "1/3", "p[2]")
    assert code == 0
    assert out.strip() == "Pt[2] + (4/3)Pt[1,1]"


def test_expand_round_trip_identity(capsys):
    for basis in ("P", "Q", "Ptilde", "Qtilde"):
        code, out, _ = run(capsys, "expand", "--from", basis, "--to", basis,
                           "--t", "1/3", f"{basis}[2,1]")
        assert code == 0
        label = {"P": "P", "Q": "Q", "Ptilde": "Pt", "Qtilde": "Qt"}[basis]
        assert out.strip() == f"{label}[2,1]"


def test_expand_linear_combination(capsys):
    code, out, _ = run(capsys, "expand", "--from", "p", "--to", "P", "--t", "1/3",
                       "p[1,1] + p[2]", "--format", "json")
    assert code == 0
    data = json.loads(out)
    # p1^2 = P2 + (1+t)P11 and p2 = P2 - (1-t)P11, so the sum is 2P2 + 2t P11
    assert data["terms"] == [{"mu": [2], "c": "2"}, {"mu": [1, 1], "c": "2/3"}]


def test_expand_rejects_decimal_t(capsys):
    code, _, err = run(capsys, "expand", "--from", "p", "--to", "p", "--t", "0.5", "p[1]")
    assert code == 2
    assert "rational" in err


def test_structconst_csv(capsys):
    code, out, _ = run(capsys, "structconst", "--family", "f", "--mu", "[1]",
                       "--nu", "[1]", "--t", "1/3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "lambda,mu,nu,value"
    assert lines[1] == "[2],[1],[1],1"
    assert lines[2] == '"[1,1]",[1],[1],4/3'


def test_structconst_fbar_pretty(capsys):
    code, out, _ = run(capsys, "structconst", "--family", "fbar", "--mu", "[1]",
                       "--nu", "[1]", "--t", "1/3")
    assert code == 0
    assert "[1,1]: -2/3" in out


def test_structconst_ftilde_json(capsys):
    code, out, _ = run(capsys, "structconst", "--family", "ftilde", "--mu", "[1]",
                       "--nu", "[]", "--t", "1/3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert {"lambda": [1, 1], "mu": [1], "nu": [], "value": "4/3"} in data


def test_graph_dump(capsys):
    code, out, _ = run(capsys, "graph", "--kind", "even", "--t", "1/3", "--levels", "2")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "even"
    assert len(data["levels"]) == 3
    for lv in data["levels"][1:]:
        for e in lv["edges"]:
            assert F(e["w"]) > 0


def test_functional_extreme(capsys):
    code, out, _ = run(capsys, "functional", "--kind", "extreme", "--alpha", "1/2,1/4",
                       "--beta", "1/8", "--t", "1/9", "--cap", "8")
    assert code == 0
    data = json.loads(out)
    assert data["cap"] == 8
    assert {"mu": [1], "v": "1"} in data["values"]


def test_functional_constraint_violation_exits_nonzero(capsys):
    code, _, err = run(capsys, "functional", "--kind", "extreme", "--alpha", "3/4",
                       "--beta", "1/2", "--t", "1/3", "--cap", "4")
    assert code == 2
    assert "sum(alpha)" in err


def test_mix_twisted_spec_file(tmp_path, capsys):
    spec = {
        "mode": "twisted", "r": "1/4", "u": "", "t": "1/3", "cap": 8,
        "phi": {"kind": "row", "t": "1/9"},
        "psi": {"kind": "plancherel-even", "cap": 10},
    }
    # 2r + u^2 = 1 with r = 1/4 needs u = sqrt(1/2): not rational, so use r=3/8
    spec["r"], spec["u"] = "3/8", "1/2"
    path = tmp_path / "mix.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "mix", str(path))
    assert code == 0
    mixed = functional_from_json(json.loads(out))
    assert check_p2_harmonic(mixed, 6)[0]
    assert mixed.value(()) == 1


def test_mix_std_spec_file(tmp_path, capsys):
    spec = {
        "mode": "std", "r": "1/2", "t": "1/3", "cap": 6,
        "phi": {"kind": "row"}, "psi": {"kind": "row"},
    }
    path = tmp_path / "mix.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "mix", str(path))
    assert code == 0
    mixed = functional_from_json(json.loads(out))
    assert mixed.value((1,)) == 1
    assert mixed.value((2,)) == F(1, 2)  # (1/2)^2 + (1/2)^2


def test_verify_pass_and_report(capsys):
    code, out, _ = run(capsys, "verify", "cauchy", "--t", "1/3", "--cap", "4",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "cauchy"
    assert report["failures"] == []
    assert report["checked"] == 5
    assert "elapsed_ms" in report


def test_verify_negative_fbar_witness(capsys):
    code, out, _ = run(capsys, "verify", "negative-fbar", "--t", "1/3", "--cap", "3",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["witness"] == {"lambda": [1, 1], "mu": [1], "nu": [1], "value": "-2/3"}


def test_verify_deterministic_and_worker_invariant(capsys):
    reports = []
    for workers in ("1", "1", "2"):
        code, out, _ = run(capsys, "verify", "mackey", "--t", "1/3", "--cap", "6",
                           "--workers", workers, "--format", "json")
        assert code == 0
        r = json.loads(out)
        r.pop("elapsed_ms")
        reports.append(r)
    assert reports[0] == reports[1] == reports[2]


def test_verify_ftilde_warning_off_hypothesis(capsys):
    code, out, _ = run(capsys, "verify", "positivity-ftilde", "--t", "2/5", "--cap", "4",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["warnings"]


def test_verify_unknown_suite_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "nonsense"])


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "cauchy", "--t", "1/3", "--cap", "3",
                       "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    report = json.loads(target.read_text())
    assert report["suite"] == "cauchy"


def test_invalid_t_range(capsys):
    code, _, err = run(capsys, "verify", "cauchy", "--t", "5/3")
    assert code == 2
    assert "|t| < 1" in err
