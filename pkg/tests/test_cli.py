"""End-to-end CLI behaviour: commands, formats, exit codes."""

import json
from fractions import Fraction

import pytest

import phelix.references as references
from phelix.cli import main
from phelix.references import reference_curve
from phelix.curvespec import dump_spec

EXAMPLE1_DOC = {
    "form": "quaternion",
    "coefficients": [
        ["0", "10", "5", "10"],
        ["-3", "-5", "3", "-9"],
        ["1", "1", "-2", "1"],
    ],
}

DEGREE7_DOC = {
    "form": "curve",
    "coefficients": {
        "x": ["0", "-3", "0", "1", "0", "1/5", "0", "1/21"],
        "y": ["0", "0", "3", "0", "-1/2"],
        "z": ["0", "0", "0", "-2"],
    },
}

LINE_DOC = {"form": "hodograph", "coefficients": {"dx": ["1"], "dy": [], "dz": []}}


def write_doc(tmp_path, doc, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


class TestClassify:
    def test_example1_text(self, tmp_path, capsys):
        code = main(["classify", write_doc(tmp_path, EXAMPLE1_DOC)])
        out = capsys.readouterr().out
        assert code == 0
        assert "monotone-helix" in out
        assert "(1 - 7i)t^2 + (-30 + 10i)t + (25 + 25i)" in out

    def test_example1_json(self, tmp_path, capsys):
        code = main(["classify", "--format", "json", write_doc(tmp_path, EXAMPLE1_DOC)])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["classification"]["kind"] == "monotone-helix"
        assert doc["analysis"]["is_2ph"] is True
        assert doc["classification"]["decomposition"]["case"] == "omega-constant"

    def test_degree7_curve(self, tmp_path, capsys):
        code = main(["classify", "--format", "json", write_doc(tmp_path, DEGREE7_DOC)])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["analysis"]["is_2ph"] is True
        assert doc["analysis"]["verdict"]["kind"] == "not-helix"
        assert "classification" not in doc

    def test_degenerate_proportional_pair(self, tmp_path, capsys):
        doc = {
            "form": "hopf",
            "coefficients": {
                "z1": [["1", "0"], ["2", "1"]],
                "z2": [["2", "0"], ["4", "2"]],
            },
        }
        code = main(["classify", write_doc(tmp_path, doc)])
        out = capsys.readouterr().out
        assert code == 2
        assert "degenerate" in out

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(EXAMPLE1_DOC)))
        code = main(["classify", "-"])
        assert code == 0
        assert "monotone-helix" in capsys.readouterr().out

    def test_missing_file(self, capsys):
        assert main(["classify", "/nonexistent/spec.json"]) == 1

    def test_bad_json(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{oops")
        assert main(["classify", str(path)]) == 1

    def test_empty_coefficients(self, tmp_path, capsys):
        doc = {"form": "quaternion", "coefficients": []}
        assert main(["classify", write_doc(tmp_path, doc)]) == 1

    def test_float_coefficient_rejected(self, tmp_path, capsys):
        doc = {"form": "hodograph", "coefficients": {"dx": [0.5], "dy": [], "dz": []}}
        assert main(["classify", write_doc(tmp_path, doc)]) == 1


class TestAnalyze:
    def test_line_notice_and_exit_code(self, tmp_path, capsys):
        code = main(["analyze", write_doc(tmp_path, LINE_DOC)])
        out = capsys.readouterr().out
        assert code == 2
        assert "straight line" in out

    def test_degree7_analysis(self, tmp_path, capsys):
        code = main(["analyze", write_doc(tmp_path, DEGREE7_DOC)])
        out = capsys.readouterr().out
        assert code == 0
        assert "sigma = (1/3)t^6 + t^4 + 3t^2 + 3" in out
        assert "(tau/kappa)^2" in out
        assert "frenet frame" in out

    def test_example1_constant_ratio(self, tmp_path, capsys):
        code = main(["analyze", write_doc(tmp_path, EXAMPLE1_DOC)])
        out = capsys.readouterr().out
        assert code == 0
        assert "(tau/kappa)^2 = 9/50 (constant)" in out


class TestSample:
    def test_two_rows(self, tmp_path, capsys):
        code = main(
            ["sample", write_doc(tmp_path, DEGREE7_DOC), "--from", "0", "--to", "1", "--n", "2"]
        )
        out = capsys.readouterr().out.strip().splitlines()
        assert code == 0
        assert out[0] == "t,x,y,z"
        assert len(out) == 3
        assert out[1] == "0,0,0,0"

    def test_values_match_exact_evaluation(self, tmp_path, capsys):
        code = main(
            [
                "sample",
                write_doc(tmp_path, DEGREE7_DOC),
                "--from",
                "0",
                "--to",
                "1",
                "--n",
                "5",
                "--precision",
                "15",
            ]
        )
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()[1:]
        curve = reference_curve("counterexample").spec.curve()
        for k, line in enumerate(lines):
            t = Fraction(k, 4)
            fields = [float(v) for v in line.split(",")]
            exact = curve.evaluate(t)
            assert fields[0] == pytest.approx(float(t), abs=1e-12)
            for got, want in zip(fields[1:], exact):
                assert got == pytest.approx(float(want), rel=1e-12)

    def test_final_point(self, tmp_path, capsys):
        main(["sample", write_doc(tmp_path, DEGREE7_DOC), "--n", "2"])
        last = capsys.readouterr().out.strip().splitlines()[-1]
        x = float(last.split(",")[1])
        assert x == pytest.approx(-184 / 105, rel=1e-11)

    def test_invalid_range(self, tmp_path, capsys):
        path = write_doc(tmp_path, DEGREE7_DOC)
        assert main(["sample", path, "--from", "1", "--to", "0"]) == 1
        assert main(["sample", path, "--n", "1"]) == 1


class TestVerify:
    def test_all_pass(self, capsys):
        code = main(["verify"])
        out = capsys.readouterr().out
        assert code == 0
        assert "all checks passed" in out
        assert "FAIL" not in out

    def test_single_example(self, capsys):
        code = main(["verify", "--example", "example2"])
        out = capsys.readouterr().out
        assert code == 0
        assert "example2." in out
        assert "example1." not in out

    def test_corrupted_expectation_fails(self, capsys, monkeypatch):
        def corrupted():
            ref = references.build_example1()
            w = ref.expected["wronskian"]
            coeffs = list(w.coeffs)
            coeffs[0] = coeffs[0] + 1
            ref.expected["wronskian"] = type(w)(coeffs)
            return ref

        monkeypatch.setitem(references.REFERENCE_BUILDERS, "example1", corrupted)
        code = main(["verify", "--example", "example1"])
        out = capsys.readouterr().out
        assert code != 0
        assert "FAIL example1.wronskian" in out


class TestGenerate:
    def test_deterministic(self, capsys):
        assert main(["generate", "--family", "monotone", "--count", "3", "--seed", "5"]) == 0
        first = capsys.readouterr().out
        assert main(["generate", "--family", "monotone", "--count", "3", "--seed", "5"]) == 0
        assert capsys.readouterr().out == first
        assert "monotone-helix" in first

    def test_general_json(self, capsys):
        code = main(
            [
                "generate",
                "--family",
                "general",
                "--count",
                "4",
                "--seed",
                "9",
                "--format",
                "json",
            ]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["curves"]) == 4
        assert all(c["lancret"] == "helix" for c in doc["curves"])
        assert sum(doc["summary"].values()) == 4

    def test_generated_specs_reparse(self, capsys):
        main(["generate", "--family", "general", "--count", "2", "--seed", "3", "--format", "json"])
        doc = json.loads(capsys.readouterr().out)
        from phelix.curvespec import parse_spec

        for entry in doc["curves"]:
            spec = parse_spec(entry["spec"])
            assert dump_spec(spec) == json.dumps(entry["spec"])

    def test_zero_count(self, capsys):
        assert main(["generate", "--family", "monotone", "--count", "0"]) == 1


class TestUsage:
    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 1

    def test_no_command(self, capsys):
        assert main([]) == 1

    def test_version(self, capsys):
        assert main(["--version"]) == 0

    def test_module_entry_point(self, tmp_path):
        import subprocess
        import sys

        proc = subprocess.run(
            [sys.executable, "-m", "phelix", "classify", write_doc(tmp_path, EXAMPLE1_DOC)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "monotone-helix" in proc.stdout
