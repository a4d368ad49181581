import csv
import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from laginterlace import harness
from laginterlace.cli import main

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_cfg(tmp_path, **kw):
    base = dict(samples=20, seed=11, family="S", n_min=2, n_max=12, alpha_min=-0.99, alpha_max=8,
                t_min=0, t_max=2, coeff_min=-10, coeff_max=10)
    base.update(kw)
    p = tmp_path / "sweep.cfg"
    p.write_text("".join(f"{k} = {v}\n" for k, v in base.items()))
    return p


# --- zeros ----------------------------------------------------------------------


def test_zeros_table(capsys):
    code, out, _ = run(capsys, "zeros", "--n", "4", "--alpha", "1.45")
    assert code == 0
    vals = [float(line.split()[1]) for line in out.splitlines()[1:]]
    ref = [0.954365, 2.94834, 6.26071, 11.6366]
    assert all(abs(v - r) <= 5e-5 * r for v, r in zip(vals, ref))


def test_zeros_json_degree_one(capsys):
    code, out, _ = run(capsys, "zeros", "--n", "1", "--alpha", "0", "--format", "json")
    assert code == 0 and json.loads(out) == [1.0]


def test_zeros_csv(capsys):
    code, out, _ = run(capsys, "zeros", "--n", "2", "--alpha", "0", "--format", "csv")
    header, row = list(csv.reader(io.StringIO(out)))
    assert header == ["z_1", "z_2"]
    assert [float(v) for v in row] == pytest.approx([2 - math.sqrt(2), 2 + math.sqrt(2)])
    assert "\r" not in out


def test_zeros_bad_alpha_is_usage_error(capsys):
    code, _, err = run(capsys, "zeros", "--n", "3", "--alpha", "-1.5")
    assert code == 2 and "alpha" in err


def test_missing_argument_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["zeros", "--n", "3"])
    assert exc.value.code == 2


# --- combo-zeros ----------------------------------------------------------------


def test_combo_zeros_S_t2(capsys):
    code, out, _ = run(capsys, "combo-zeros", "--family", "S", "--n", "5", "--alpha", "1.45",
                       "--t", "2", "--coeff", "2.33", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["complete"] and data["degree"] == 5
    ref = [1.94417, 4.47751, 8.08954, 12.6085, 16.7802]
    assert all(abs(v - r) <= 5e-5 * r for v, r in zip(data["zeros"], ref))


def test_combo_zeros_R_table(capsys):
    code, out, _ = run(capsys, "combo-zeros", "--family", "R", "--n", "5", "--alpha", "1.45",
                       "--t", "1", "--coeff", "2.33")
    assert code == 0 and "complete=True" in out
    assert "1.17057" in out and "15.9213" in out


def test_combo_zeros_reduced_degree_notice(capsys):
    code, out, _ = run(capsys, "combo-zeros", "--family", "R", "--n", "2", "--alpha", "0",
                       "--t", "1", "--coeff", "-1")
    assert code == 0
    assert "reduced degree 1" in out
    assert "found 1 of 1" in out


def test_combo_zeros_csv(capsys):
    code, out, _ = run(capsys, "combo-zeros", "--family", "R", "--n", "2", "--alpha", "0",
                       "--t", "2", "--coeff", "1", "--format", "csv")
    header, row = list(csv.reader(io.StringIO(out)))
    assert header == ["degree", "complete", "z_1", "z_2"]
    assert row[:2] == ["2", "true"]


def test_combo_zero_coefficient_rejected(capsys):
    code, _, err = run(capsys, "combo-zeros", "--family", "S", "--n", "3", "--alpha", "0",
                       "--t", "1", "--coeff", "0")
    assert code == 2


# --- check ----------------------------------------------------------------------


def test_check_chain_pass(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "chain", "--n", "5", "--alpha", "1.45", "--t", "1")
    assert code == 0 and out.startswith("PASS")


def test_check_chain_boundary_rejected(capsys):
    code, _, err = run(capsys, "check", "--theorem", "chain", "--n", "5", "--alpha", "1.45", "--t", "2")
    assert code == 2 and "0<t<2" in err


def test_check_R_pass(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "R", "--n", "5", "--alpha", "1.45", "--t", "1",
                       "--coeff", "2.33")
    assert code == 0 and out.startswith("PASS")


def test_check_R_reduced_degree(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "R", "--n", "5", "--alpha", "1.45", "--t", "1",
                       "--coeff", "-1")
    assert code == 0 and "reduced-degree mode" in out


def test_check_S_out_of_hypothesis(capsys):
    code, _, err = run(capsys, "check", "--theorem", "S", "--n", "5", "--alpha", "1.45", "--t", "3",
                       "--coeff", "2.33")
    assert code == 2 and "hypothesis" in err


def test_check_missing_params(capsys):
    code, _, err = run(capsys, "check", "--theorem", "R", "--n", "5")
    assert code == 2 and "--alpha" in err


def test_check_claims(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "claims")
    assert code == 0 and out.count("PASS") == 5


def test_check_pair_failure_exit_1(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "pair", "--family", "S", "--n", "5", "--alpha", "1.45",
                       "--t", "2", "--coeff", "2.33", "--target", "L_n^{alpha+t}")
    assert code == 1 and "fails" in out


# --- repro-paper ------------------------------------------------------------------


def test_repro_paper(capsys):
    code, out, _ = run(capsys, "repro-paper", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert len(data["fixtures"]) == 6 and all(f["pass"] for f in data["fixtures"])
    claim = {c["id"]: c for c in data["claims"]}["S-t2-vs-Ln-alpha+t"]
    assert claim["verdict"] == "fails" and claim["confirmed"]


def test_repro_paper_table(capsys):
    code, out, _ = run(capsys, "repro-paper")
    assert code == 0 and "6/6 fixtures, 5/5 claims" in out


# --- sweep ------------------------------------------------------------------------


def test_sweep_theorem_range_all_interlace(capsys):
    code, out, err = run(capsys, "sweep", "--config", str(CONFIGS / "theorem_s.cfg"), "--strict")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 200
    assert {r["verdict"] for r in rows} == {"interlaces"}
    assert list(rows[0]) == list(harness.RECORD_FIELDS)


def test_sweep_large_shift_mixed(capsys):
    code, out, _ = run(capsys, "sweep", "--config", str(CONFIGS / "explore_s_large_shift.cfg"))
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 100
    assert {"interlaces", "fails"} <= {r["verdict"] for r in rows}


def test_sweep_strict_fails_on_counterexample(capsys):
    code, out, _ = run(capsys, "sweep", "--config", str(CONFIGS / "counterexample_s_t2.cfg"),
                       "--format", "json", "--strict")
    (rec,) = json.loads(out)
    assert code == 1
    assert rec == {"family": "S", "n": 5, "alpha": 1.45, "t": 2.0, "coeff": 2.33,
                   "target": "L_n^{alpha+t}", "verdict": "fails", "min_gap": rec["min_gap"], "complete": True}


def test_sweep_deterministic_and_parallel_safe(tmp_path, capsys):
    cfg = write_cfg(tmp_path)
    _, first, _ = run(capsys, "sweep", "--config", str(cfg))
    _, second, _ = run(capsys, "sweep", "--config", str(cfg))
    _, third, _ = run(capsys, "sweep", "--config", str(cfg), "--jobs", "3")
    assert first == second == third
    _, other, _ = run(capsys, "sweep", "--config", str(cfg), "--seed", "12")
    assert other != first


def test_sweep_out_file(tmp_path, capsys):
    cfg = write_cfg(tmp_path, samples=3)
    out_path = tmp_path / "records.json"
    code, out, _ = run(capsys, "sweep", "--config", str(cfg), "--format", "json", "--out", str(out_path))
    assert code == 0 and out == ""
    assert len(json.loads(out_path.read_text())) == 6


def test_sweep_records_reverifiable(tmp_path, capsys):
    cfg = write_cfg(tmp_path, samples=5, family="R", t_max=3.5)
    _, out, _ = run(capsys, "sweep", "--config", str(cfg), "--format", "json")
    for rec in json.loads(out):
        code, text, _ = run(capsys, "check", "--theorem", "pair", "--family", rec["family"],
                            "--n", str(rec["n"]), "--alpha", repr(rec["alpha"]), "--t", repr(rec["t"]),
                            "--coeff", repr(rec["coeff"]), "--target", rec["target"])
        assert (code == 0) == (rec["verdict"] == "interlaces")
        assert rec["verdict"] in text


@pytest.mark.parametrize(
    "override",
    [
        {"n_min": 1},
        {"alpha_min": -1.5},
        {"t_min": 3, "t_max": 2},
        {"coeff_min": 0, "coeff_max": 0},
        {"family": "Q"},
        {"targets": "L_m^beta"},
        {"samples": "many"},
    ],
)
def test_sweep_invalid_config(tmp_path, capsys, override):
    cfg = write_cfg(tmp_path, **override)
    code, _, err = run(capsys, "sweep", "--config", str(cfg))
    assert code == 2 and "config" in err


def test_sweep_missing_config_file(tmp_path, capsys):
    code, _, err = run(capsys, "sweep", "--config", str(tmp_path / "nope.cfg"))
    assert code == 2


def test_parse_config_comments_and_unknown_key():
    cfg = harness.parse_config("# plan\nsamples=2\nseed=1\nfamily=R  # same degree\n")
    assert cfg.targets == ("L_n^alpha", "L_n^{alpha+t}")
    with pytest.raises(harness.ConfigError):
        harness.parse_config("samples=2\nseed=1\nfamily=R\ncolour=blue\n")
    with pytest.raises(harness.ConfigError):
        harness.parse_config("samples=2\nfamily=R\n")


def test_pinned_ranges_sample_exact_values():
    cfg = harness.parse_config("samples=3\nseed=5\nfamily=S\nn_min=5\nn_max=5\nalpha_min=1.45\n"
                               "alpha_max=1.45\nt_min=2\nt_max=2\ncoeff_min=2.33\ncoeff_max=2.33\n")
    assert harness.draw_samples(cfg) == [(5, 1.45, 2.0, 2.33)] * 3


def test_half_open_sampling():
    cfg = harness.parse_config("samples=500\nseed=3\nfamily=S\nt_min=0\nt_max=2\n")
    ts = [s[2] for s in harness.draw_samples(cfg)]
    assert min(ts) > 0 and max(ts) <= 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "laginterlace", "zeros", "--n", "1", "--alpha", "0.5",
                           "--format", "json"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == [1.5]
