import json
import re
import subprocess
import sys

import pytest

import kfrechet as kf
from kfrechet.cli import main
from conftest import random_pair


@pytest.fixture
def curve_files(tmp_path):
    p = tmp_path / "p.txt"
    q = tmp_path / "q.txt"
    p.write_text("0 0\n1 0\n")
    q.write_text("0 1\n1 1\n")
    return str(p), str(q)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out.strip() else None
    return code, report, captured.err


class TestDecide:
    def test_fpt_yes(self, capsys, curve_files):
        p, q = curve_files
        code, report, _ = run_cli(capsys, "decide", "--p", p, "--q", q,
                                  "--eps", "1.0", "--k", "1", "--algo", "fpt")
        assert code == 0
        assert report == {"answer": True, "components": 1, "selection": [0], "z": 1}

    def test_stdout_is_golden_stable(self, capsys, curve_files):
        # exact byte-level output: sorted keys, sorted ids
        p, q = curve_files
        code = main(["decide", "--p", p, "--q", q, "--eps", "1.0", "--k", "1"])
        out = capsys.readouterr().out
        assert code == 0
        assert out == '{"answer": true, "components": 1, "selection": [0], "z": 1}\n'

    def test_fpt_no(self, capsys, curve_files):
        p, q = curve_files
        code, report, _ = run_cli(capsys, "decide", "--p", p, "--q", q,
                                  "--eps", "0.5", "--k", "1", "--algo", "fpt")
        assert code == 1
        assert report["answer"] is False
        assert report["selection"] is None

    def test_all_algos_on_diagonal(self, capsys, curve_files):
        p, q = curve_files
        for algo in ("brute", "fpt", "approx", "weak", "hausdorff", "frechet"):
            code, report, _ = run_cli(capsys, "decide", "--p", p, "--q", q,
                                      "--eps", "1.0", "--k", "1", "--algo", algo)
            assert code == 0, algo
            assert report["answer"] is True

    def test_missing_k_for_brute(self, capsys, curve_files):
        p, q = curve_files
        code, report, err = run_cli(capsys, "decide", "--p", p, "--q", q,
                                    "--eps", "1.0", "--algo", "brute")
        assert code == 2
        assert report is None
        assert "--k" in err

    def test_negative_eps(self, capsys, curve_files):
        p, q = curve_files
        code, _, err = run_cli(capsys, "decide", "--p", p, "--q", q,
                               "--eps", "-1", "--k", "1")
        assert code == 2
        assert "eps" in err

    def test_missing_file(self, capsys, tmp_path, curve_files):
        p, _ = curve_files
        code, _, err = run_cli(capsys, "decide", "--p", p, "--q",
                               str(tmp_path / "nope.txt"), "--eps", "1", "--k", "1")
        assert code == 2
        assert "cannot read" in err

    def test_json_curve_input(self, capsys, tmp_path, curve_files):
        _, q = curve_files
        j = tmp_path / "p.json"
        j.write_text('{"vertices": [[0, 0], [1, 0]]}')
        code, report, _ = run_cli(capsys, "decide", "--p", str(j), "--q", q,
                                  "--eps", "1.0", "--k", "1")
        assert code == 0 and report["answer"] is True

    def test_brute_fpt_agree_on_corpus(self, capsys, tmp_path, rng):
        for trial in range(5):
            P, Q = random_pair(rng, 4)
            p = tmp_path / f"p{trial}.txt"
            q = tmp_path / f"q{trial}.txt"
            p.write_text(kf.serialize_curve(P))
            q.write_text(kf.serialize_curve(Q))
            eps = str(float(rng.uniform(0.2, 0.9)))
            for k in ("1", "2"):
                args = ["--p", str(p), "--q", str(q), "--eps", eps, "--k", k]
                code_b, rep_b, _ = run_cli(capsys, "decide", *args, "--algo", "brute")
                code_f, rep_f, _ = run_cli(capsys, "decide", *args, "--algo", "fpt")
                assert code_b == code_f
                assert rep_b["answer"] == rep_f["answer"]


class TestMinimize:
    def test_minimize_k(self, capsys, curve_files):
        p, q = curve_files
        code, report, _ = run_cli(capsys, "minimize-k", "--p", p, "--q", q, "--eps", "1.0")
        assert code == 0
        assert report["k"] == 1
        assert report["selection"] == [0]

    def test_minimize_k_infeasible(self, capsys, curve_files):
        p, q = curve_files
        code, report, _ = run_cli(capsys, "minimize-k", "--p", p, "--q", q, "--eps", "0.5")
        assert code == 1
        assert report["k"] is None

    def test_minimize_eps(self, capsys, curve_files):
        p, q = curve_files
        code, report, _ = run_cli(capsys, "minimize-eps", "--p", p, "--q", q,
                                  "--k", "1", "--tol", "1e-5")
        assert code == 0
        assert abs(report["epsilon"] - 1.0) < 1e-4
        assert report["selection"] == [0]

    def test_minimize_eps_bad_k(self, capsys, curve_files):
        p, q = curve_files
        code, _, err = run_cli(capsys, "minimize-eps", "--p", p, "--q", q, "--k", "0")
        assert code == 2 and "--k" in err


class TestSvgCommand:
    def test_writes_svg(self, capsys, tmp_path, curve_files):
        p, q = curve_files
        out = tmp_path / "diagram.svg"
        code, report, _ = run_cli(capsys, "freespace-svg", "--p", p, "--q", q,
                                  "--eps", "1.0", "--out", str(out))
        assert code == 0
        text = out.read_text()
        assert text.count('<g class="component"') == 1
        meta = json.loads(re.search(r"<metadata[^>]*>(.*?)</metadata>", text, re.S).group(1))
        assert meta["components"] == report["components"] == 1

    def test_empty_diagram_grid_only(self, capsys, tmp_path, curve_files):
        p, q = curve_files
        out = tmp_path / "empty.svg"
        code, report, _ = run_cli(capsys, "freespace-svg", "--p", p, "--q", q,
                                  "--eps", "0.5", "--out", str(out))
        assert code == 0 and report["components"] == 0
        text = out.read_text()
        assert '<g class="component"' not in text
        assert '<g class="grid"' in text

    def test_select_outlines(self, capsys, tmp_path, curve_files):
        p, q = curve_files
        out = tmp_path / "sel.svg"
        code, _, _ = run_cli(capsys, "freespace-svg", "--p", p, "--q", q,
                             "--eps", "1.0", "--out", str(out), "--select", "0")
        assert code == 0
        assert 'class="component selected"' in out.read_text()

    def test_select_unknown_id(self, capsys, tmp_path, curve_files):
        p, q = curve_files
        code, _, err = run_cli(capsys, "freespace-svg", "--p", p, "--q", q,
                               "--eps", "1.0", "--out", str(tmp_path / "x.svg"),
                               "--select", "7")
        assert code == 2 and "unknown component id" in err

    def test_unwritable_output(self, capsys, tmp_path, curve_files):
        p, q = curve_files
        code, _, err = run_cli(capsys, "freespace-svg", "--p", p, "--q", q,
                               "--eps", "1.0", "--out", str(tmp_path / "no" / "dir.svg"))
        assert code == 2 and "cannot write" in err


class TestBoxCommands:
    def test_boxgen_boxsolve_sat(self, capsys, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text("p cnf 1 1\n1 -1 0\n")
        out = tmp_path / "inst.json"
        code, report, _ = run_cli(capsys, "boxgen", "--cnf", str(cnf), "--out", str(out))
        assert code == 0
        assert report["boxes"] == 8 and report["k"] == 4
        code, report, _ = run_cli(capsys, "boxsolve", "--in", str(out))
        assert code == 0
        assert report["answer"] is True
        assert len(report["selection"]) == 4

    def test_boxsolve_unsat(self, capsys, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text("p cnf 1 2\n1 0\n-1 0\n")
        out = tmp_path / "inst.json"
        assert run_cli(capsys, "boxgen", "--cnf", str(cnf), "--out", str(out))[0] == 0
        code, report, _ = run_cli(capsys, "boxsolve", "--in", str(out))
        assert code == 1
        assert report["answer"] is False and report["selection"] is None

    def test_boxgen_bad_dimacs(self, capsys, tmp_path):
        cnf = tmp_path / "bad.cnf"
        cnf.write_text("hello world\n")
        code, _, err = run_cli(capsys, "boxgen", "--cnf", str(cnf),
                               "--out", str(tmp_path / "x.json"))
        assert code == 2 and "bad clause line" in err

    def test_boxsolve_bad_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run_cli(capsys, "boxsolve", "--in", str(bad))
        assert code == 2 and "invalid JSON" in err


class TestToleranceEnv:
    def test_env_overrides_default(self, monkeypatch):
        monkeypatch.setenv("KFRECHET_TOL", "1e-6")
        assert kf.default_tol() == 1e-6
        monkeypatch.delenv("KFRECHET_TOL")
        assert kf.default_tol() == kf.DEFAULT_TOL

    def test_bad_env_value(self, monkeypatch):
        monkeypatch.setenv("KFRECHET_TOL", "-1")
        with pytest.raises(ValueError):
            kf.default_tol()


def test_module_entry_point(curve_files):
    p, q = curve_files
    proc = subprocess.run(
        [sys.executable, "-m", "kfrechet.cli", "decide", "--p", p, "--q", q,
         "--eps", "1.0", "--k", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["answer"] is True
