"""CLI surface: exit codes, report schemas, determinism, file formats."""

import json

import pytest

from hyplab.cli import main


def run(tmp_path, *argv):
    out = tmp_path / "report.json"
    rc = main(list(argv) + ["-o", str(out)])
    return rc, json.loads(out.read_text()) if out.exists() else None


def test_check_axioms_pass(tmp_path):
    rc, rep = run(tmp_path, "check-axioms", "-H", "chebyshev", "-N", "40")
    assert rc == 0
    assert rep["schema"] == "hyplab-report/1"
    assert rep["results"]["passed"] and rep["results"]["exact"]


def test_convolve_report(tmp_path):
    rc, rep = run(tmp_path, "convolve", "-H", "su2hat", "--x", "1", "--y", "2")
    assert rc == 0
    terms = rep["results"]["measure"]["terms"]
    assert terms == [{"elem": 1, "num": "1", "den": "3"}, {"elem": 3, "num": "2", "den": "3"}]


def test_convolve_conj_class_names(tmp_path):
    rc, rep = run(tmp_path, "convolve", "-H", "conj:s3", "--x", "C[(1 2)]", "--y", "C[(1 2)]")
    assert rc == 0
    assert [t["den"] for t in rep["results"]["measure"]["terms"]] == ["3", "3"]


def test_haar_tau_growth(tmp_path):
    rc, rep = run(tmp_path, "haar", "-H", "su2hat", "--x", "7")
    assert rc == 0 and rep["results"]["haar"]["num"] == "64"
    rc, rep = run(tmp_path, "tau", "-H", "chebyshev", "--x", "9")
    assert rc == 0 and rep["results"]["tau"] == 9
    rc, rep = run(tmp_path, "growth", "-H", "chebyshev", "-N", "8")
    assert rc == 0 and rep["results"]["samples"][3] == [3, 4]


def test_growth_csv(tmp_path):
    out = tmp_path / "growth.csv"
    rc = main(["growth", "-H", "chebyshev", "-N", "5", "--format", "csv", "-o", str(out)])
    assert rc == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "n,ball_size"
    assert lines[1] == "0,1" and lines[-1] == "5,6"


def test_weight_check_exit_codes(tmp_path):
    rc, rep = run(tmp_path, "weight-check", "-H", "chebyshev", "-w", "poly:beta=1",
                  "--property", "submultiplicative", "-N", "15")
    assert rc == 0 and rep["results"]["passed"]
    # central check on a non-central weight fails -> exit 1 with witnesses
    rc, rep = run(tmp_path, "weight-check", "-H", "rdp:conj:s3:inf", "-w",
                  "omega-alpha:alpha=1", "--property", "central", "-N", "12")
    assert rc == 0
    rc, rep = run(tmp_path, "weight-check", "-H", "chebyshev", "-w", "trivial",
                  "--property", "weakly-additive", "-N", "10")
    assert rc == 0 and rep["results"]["certificate"]["constant"] == "1/2"


def test_omega_table_csv(tmp_path):
    out = tmp_path / "omega.csv"
    rc = main(["omega-table", "-H", "chebyshev", "-w", "poly:beta=1", "-N", "6",
               "--format", "csv", "-o", str(out)])
    assert rc == 0
    assert out.read_text().startswith("x\\y,")


def test_cluster_scan_and_summability(tmp_path):
    rc, rep = run(tmp_path, "cluster-scan", "-H", "su2hat", "-w", "poly:beta=1",
                  "-N", "60", "--threshold", "0.05")
    assert rc == 0
    assert rep["results"]["verdict"].startswith("CONSISTENT")
    rc, rep = run(tmp_path, "summability", "-H", "chebyshev", "-w", "poly:beta=1", "-N", "500")
    assert rc == 0 and rep["results"]["verdict"] == "CONVERGENT"


def test_norm_bound_and_exp_constants(tmp_path):
    rc, rep = run(tmp_path, "norm-bound", "-H", "chebyshev", "-w", "poly:beta=2",
                  "--route", "polynomial")
    assert rc == 0 and rep["results"]["value"] > 0
    rc, rep = run(tmp_path, "exp-constants", "--alpha", "1/2", "--C", "1")
    assert rc == 0
    assert rep["results"]["K"]["num"] == "5308416"
    assert rep["results"]["beta_floor_lemma"]["num"] == "24"


def test_witness_and_classify(tmp_path):
    rc, rep = run(tmp_path, "witness", "-H", "rdp:conj:s3:inf",
                  "-w", json.dumps({"family": "product",
                                    "repeat": {"family": "table",
                                               "values": {"0": "1", "1": "2", "2": "5"}}}),
                  "--depth", "4")
    assert rc == 0 and rep["results"]["verdict"] == "WITNESS-AGAINST"
    rc, rep = run(tmp_path, "classify", "-H", "chebyshev", "-w", "poly:beta=2", "-N", "60")
    assert rc == 0
    assert rep["results"]["verdicts"]["ArensRegular"]["status"] == "CERTIFIED-YES"


def test_config_errors_exit_2(tmp_path, capsys):
    assert main(["check-axioms", "-N", "10"]) == 2            # no hypergroup
    assert main(["check-axioms", "-H", "nosuch", "-N", "5"]) == 2
    assert main(["check-axioms", "-H", "chebyshev", "-N", "0"]) == 2
    assert main(["convolve", "-H", "chebyshev", "--x", "zz", "--y", "1"]) == 2


def test_kg_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("HYPLAB_KG", "1.0")
    rc, rep = run(tmp_path, "norm-bound", "-H", "chebyshev", "-w", "poly:beta=1",
                  "--route", "2-summable", "-N", "400")
    assert rc == 0
    assert rep["config"]["K_G"] == 1.0
    # flag wins over env
    rc2, rep2 = run(tmp_path, "norm-bound", "-H", "chebyshev", "-w", "poly:beta=1",
                    "--route", "2-summable", "-N", "400", "--kg", "2.0")
    assert rep2["config"]["K_G"] == 2.0
    assert rep2["results"]["value"] == pytest.approx(2 * rep["results"]["value"])


def test_config_file_precedence(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"truncation": 12, "kg": 1.5}))
    out = tmp_path / "r.json"
    rc = main(["check-axioms", "-H", "chebyshev", "--config", str(cfg), "-o", str(out)])
    assert rc == 0
    rep = json.loads(out.read_text())
    assert rep["config"]["truncation"] == 12 and rep["config"]["K_G"] == 1.5


def test_report_determinism_same_seed(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    argv = ["cluster-scan", "-H", "su2hat", "-w", "poly:beta=1", "-N", "40",
            "--seed", "7"]
    assert main(argv + ["-o", str(a)]) == 0
    assert main(argv + ["-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
