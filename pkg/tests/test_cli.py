import json
import math

import pytest

from muntzlab.cli import main


def write_config(tmp_path, payload, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


RANK_ONE = {
    "sequence": {"kind": "explicit", "values": [1.0]},
    "measure": {"kind": "atomic", "atoms": [[0.5, 1.0]]},
    "N": 1,
    "q_set": [0.5, 1, 2],
    "certificates": ["psi", "hilbert_schmidt"],
}


class TestAnalyze:
    def test_rank_one_report(self, tmp_path):
        cfg = write_config(tmp_path, RANK_ONE)
        assert main(["analyze", "--config", cfg, "--out", str(tmp_path)]) == 0
        report = json.loads((tmp_path / "report.json").read_text())
        op = report["spectral"]["singular_values"][0]
        assert op == pytest.approx(math.sqrt(3.0) / 2.0, abs=1e-9)
        kinds = {c["kind"] for c in report["certificates"]}
        assert kinds == {"psi", "hilbert_schmidt_psi"}
        csv_lines = (tmp_path / "singular_values.csv").read_text().splitlines()
        assert csv_lines[0] == "n,s_n"
        assert len(csv_lines) == 2

    def test_lebesgue_identity(self, tmp_path):
        cfg = write_config(tmp_path, {
            "sequence": {"kind": "geometric", "lambda1": 2, "ratio": 2,
                         "count": 12},
            "measure": {"kind": "lebesgue"},
            "N": 12, "certificates": ["psi"]})
        assert main(["analyze", "--config", cfg, "--out", str(tmp_path)]) == 0
        report = json.loads((tmp_path / "report.json").read_text())
        for s in report["spectral"]["singular_values"]:
            assert s == pytest.approx(1.0, abs=1e-9)

    def test_missing_field_exit_one(self, tmp_path, capsys):
        cfg = write_config(tmp_path, {
            "sequence": {"kind": "explicit", "values": [1.0]}})
        assert main(["analyze", "--config", cfg]) == 1
        assert "measure" in capsys.readouterr().err

    def test_malformed_json_diagnostics(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text('{"sequence": ')
        assert main(["analyze", "--config", str(path)]) == 1
        assert "line" in capsys.readouterr().err

    def test_hypothesis_violation_exit_two_report_written(self, tmp_path):
        cfg = write_config(tmp_path, {
            "sequence": {"kind": "geometric", "lambda1": 2, "ratio": 2,
                         "count": 8},
            "measure": {"kind": "scaled", "c": 5.0,
                        "inner": {"kind": "lebesgue"}},
            "N": 8,
            "certificates": ["rho"],
            "rho": {"C": 1.0, "alpha": 1.0}})
        assert main(["analyze", "--config", cfg, "--out", str(tmp_path)]) == 2
        report = json.loads((tmp_path / "report.json").read_text())
        assert report["certificates"][0]["kind"] == "rho"

    def test_round_trip_bit_identical(self, tmp_path):
        cfg = write_config(tmp_path, {
            "sequence": {"kind": "geometric", "lambda1": 2, "ratio": 2,
                         "count": 10},
            "measure": {"kind": "powertail", "C": 1, "alpha": 2, "x0": 0},
            "N": 10, "certificates": ["psi", "sublinear"],
            "m_list": [2, 4, 8]})
        out1 = tmp_path / "run1"
        out2 = tmp_path / "run2"
        assert main(["analyze", "--config", cfg, "--out", str(out1)]) == 0
        echoed = json.loads((out1 / "report.json").read_text())["config"]
        cfg2 = write_config(tmp_path, echoed, name="echo.json")
        assert main(["analyze", "--config", cfg2, "--out", str(out2)]) == 0
        rep1 = json.loads((out1 / "report.json").read_text())
        rep2 = json.loads((out2 / "report.json").read_text())
        assert rep1["spectral"] == rep2["spectral"]
        assert rep1["certificates"] == rep2["certificates"]
        assert rep1["essential_norm_trend"] == rep2["essential_norm_trend"]

    def test_extended_precision_matches(self, tmp_path):
        cfg = write_config(tmp_path, dict(RANK_ONE, certificates=["psi"]))
        out1 = tmp_path / "d"
        out2 = tmp_path / "x"
        assert main(["analyze", "--config", cfg, "--out", str(out1)]) == 0
        assert main(["analyze", "--config", cfg, "--out", str(out2),
                     "--precision", "extended"]) == 0
        s1 = json.loads((out1 / "report.json").read_text())["spectral"]
        s2 = json.loads((out2 / "report.json").read_text())["spectral"]
        assert s1["singular_values"][0] == pytest.approx(
            s2["singular_values"][0], rel=1e-12)


class TestConstruct:
    def test_example1(self, tmp_path):
        assert main(["construct", "1", "--n-max", "6",
                     "--out", str(tmp_path)]) == 0
        ledger = json.loads((tmp_path / "example1_ledger.json").read_text())
        assert len(ledger["ledger"]) == 6
        csv_rows = (tmp_path / "example1_ledger.csv").read_text().splitlines()
        assert len(csv_rows) == 7

    def test_example2(self, tmp_path):
        assert main(["construct", "2", "--q", "1", "--r", "0.5",
                     "--n-max", "6", "--out", str(tmp_path)]) == 0
        ledger = json.loads((tmp_path / "example2_ledger.json").read_text())
        assert ledger["theta"] == pytest.approx(1.5)
        report = ledger["verification"]
        assert report["offdiag_hs_sq"] < math.e / 4.0

    def test_example2_invalid_params(self, capsys):
        assert main(["construct", "2", "--q", "0.5", "--r", "1",
                     "--n-max", "6"]) == 1
        assert "r < q" in capsys.readouterr().err

    def test_example2_requires_qr(self, capsys):
        assert main(["construct", "2", "--n-max", "4"]) == 1

    def test_construction_bug_exit_three(self, monkeypatch, capsys):
        from muntzlab import ConstructionBugError, constructions

        def broken_verify(build, **kwargs):
            raise ConstructionBugError("forced", n=3, residual=0.5)

        monkeypatch.setattr(constructions, "verify_example1", broken_verify)
        assert main(["construct", "1", "--n-max", "4"]) == 3
        assert "n=3" in capsys.readouterr().err


class TestCheck:
    def test_interpolation_suite(self, tmp_path):
        assert main(["check", "interpolation", "--instances", "10",
                     "--out", str(tmp_path)]) == 0
        payload = json.loads(
            (tmp_path / "check_interpolation.json").read_text())
        assert payload["violations"] == []

    def test_inequality_suite(self):
        assert main(["check", "inequalities", "--instances", "20"]) == 0

    def test_certificate_suite(self):
        assert main(["check", "certificates"]) == 0


class TestThreadCap:
    def test_env_cap_applied(self, tmp_path, monkeypatch):
        monkeypatch.setenv("MUNTZLAB_THREADS", "1")
        cfg = write_config(tmp_path, RANK_ONE)
        assert main(["analyze", "--config", cfg, "--out", str(tmp_path)]) == 0

    def test_env_cap_invalid(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("MUNTZLAB_THREADS", "many")
        cfg = write_config(tmp_path, RANK_ONE)
        assert main(["analyze", "--config", cfg]) == 1
