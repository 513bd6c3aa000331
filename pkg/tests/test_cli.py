import csv
import io
import json

import pytest

from pqosc.cli import ConfigError, parse_config, run


def run_capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


SPECTRUM_ARGS = [
    "spectrum", "--p", "2", "--q", "3", "--alpha", "1", "--beta", "0", "--l", "1",
    "--n-max", "2",
]


def test_spectrum_csv_fixture(capsys):
    code, out, _ = run_capture(capsys, SPECTRUM_ARGS + ["--format", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "lambda", "form32", "form34"]
    values = {int(r[0]): float(r[1]) for r in rows[1:]}
    assert abs(values[0] - 1.0) <= 1e-12
    assert abs(values[1] - 4.5) <= 1e-12
    assert abs(values[2] - 14.25) <= 1e-12


def test_spectrum_json_passes(capsys):
    code, out, _ = run_capture(capsys, SPECTRUM_ARGS)
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "spectrum"
    assert all(r["pass"] for r in payload["results"])
    assert payload["table"][1]["lambda"] == pytest.approx(4.5, abs=1e-12)


def test_hopf_solve_gamma_undefined_exit_three(capsys):
    code, _, err = run_capture(
        capsys,
        ["hopf-solve", "--p", "2", "--q", "2", "--beta1", "1", "--beta2", "0",
         "--alpha", "1", "--l", "1"],
    )
    assert code == 3
    assert "GammaUndefined" in err


def test_rep_check_literal_alpha_two_fails(capsys):
    code, out, _ = run_capture(
        capsys,
        ["rep-check", "--p", "2", "--q", "3", "--alpha", "2", "--beta", "0",
         "--l", "1", "--mode", "literal"],
    )
    assert code == 1
    payload = json.loads(out)
    assert not all(r["pass"] for r in payload["results"])


def test_rep_check_grading_passes(capsys):
    code, out, _ = run_capture(
        capsys,
        ["rep-check", "--p", "2", "--q", "3", "--alpha", "2", "--beta", "0", "--l", "1"],
    )
    assert code == 0


def test_calculus_check_passes(capsys):
    code, out, _ = run_capture(
        capsys,
        ["calculus-check", "--p", "2", "--q", "3", "--alpha", "2", "--beta", "0.5",
         "--l", "1", "--tol", "1e-12"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["metadata"]["exponents"] == [-3, -2, -1, 0, 1, 2, 3, 4, 5]


def test_hopf_solve_constraints_pass(capsys):
    code, out, _ = run_capture(
        capsys,
        ["hopf-solve", "--p", "2", "--q", "3", "--alpha", "1", "--l", "1",
         "--beta1", "0.7", "--beta2", "0.7"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"]["gamma"] == pytest.approx(0.7, abs=1e-12)


def test_hopf_check_skips_homomorphism_when_offsets_equal(capsys):
    code, out, _ = run_capture(
        capsys,
        ["hopf-check", "--p", "2", "--q", "3", "--alpha", "1", "--l", "1",
         "--beta1", "0.7", "--beta2", "0.7", "--dim", "6"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["homomorphism"].startswith("skipped")
    assert "diagnostics" in payload


def test_config_file_and_flag_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# fixture\np = 2\nq = 3\nalpha = 1\nbeta = 0\nl = 1\nn_max = 5\n")
    code, out, _ = run_capture(
        capsys, ["numbers", "--config", str(cfg), "--n-max", "2", "--no-timestamp"]
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["table"]) == 3
    assert payload["table"][2]["f"] == pytest.approx(3.5, abs=1e-14)
    assert "timestamp" not in payload


def test_parse_config_defaults_and_errors():
    cfg = parse_config("p = 2\nq = 3\nalpha = 1\nbeta = 0\nl = 1")
    assert cfg.dim == 16 and cfg.n_max == 20 and cfg.tol == 1e-10
    assert cfg.mode == "grading" and cfg.fmt == "json"
    with pytest.raises(ConfigError):
        parse_config("p = 2\nbogus = 7")
    with pytest.raises(ConfigError):
        parse_config("p = 2")  # q missing


def test_degenerate_config_exit_two(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("p = 2\nq = 0.5\nl = 1\nalpha = 1\nbeta = 0\n")
    code, _, err = run_capture(capsys, ["numbers", "--config", str(cfg)])
    assert code == 2
    assert "DegenerateDenominator" in err


def test_missing_required_parameter_exit_two(capsys):
    code, _, err = run_capture(capsys, ["numbers", "--q", "3"])
    assert code == 2


def test_unknown_subcommand_exit_two(capsys):
    assert run(["bogus"]) == 2
    capsys.readouterr()


def test_determinism_without_timestamp(capsys):
    argv = SPECTRUM_ARGS + ["--no-timestamp"]
    _, out1, _ = run_capture(capsys, argv)
    _, out2, _ = run_capture(capsys, argv)
    assert out1 == out2


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_capture(
        capsys, SPECTRUM_ARGS + ["--out", str(target), "--no-timestamp"]
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["command"] == "spectrum"


def test_sweep_grid_order_and_exit(tmp_path, capsys):
    cfg = tmp_path / "grid.cfg"
    cfg.write_text("p = 0.5, 2\nq = 0.3, 3\nalpha = 1\nbeta = 0\nl = 1\ndim = 8\n")
    code, out, _ = run_capture(capsys, ["sweep", "--config", str(cfg), "--no-timestamp"])
    assert code == 0
    payload = json.loads(out)
    combos = [(pt["p"], pt["q"]) for pt in payload["points"]]
    assert combos == [(0.5, 0.3), (0.5, 3.0), (2.0, 0.3), (2.0, 3.0)]
    assert all(r["pass"] for pt in payload["points"] for r in pt["results"])


def test_sweep_records_bad_points(tmp_path, capsys):
    cfg = tmp_path / "grid.cfg"
    cfg.write_text("p = 2\nq = 0.5, 3\nalpha = 1\nbeta = 0\nl = 1\ndim = 8\n")
    code, out, _ = run_capture(capsys, ["sweep", "--config", str(cfg), "--no-timestamp"])
    assert code == 1
    payload = json.loads(out)
    assert "error" in payload["points"][0]
    assert "DegenerateDenominator" in payload["points"][0]["error"]
    assert all(r["pass"] for r in payload["points"][1]["results"])


def test_sweep_csv(tmp_path, capsys):
    cfg = tmp_path / "grid.cfg"
    cfg.write_text("p = 0.5, 2\nq = 3\nalpha = 1\nbeta = 0\nl = 1\ndim = 8\nformat = csv\n")
    code, out, _ = run_capture(capsys, ["sweep", "--config", str(cfg)])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["p", "q", "alpha", "beta", "l", "label", "residual", "tol", "pass"]
    assert len(rows) == 1 + 2 * 4  # two points, four relation entries each


def test_json_report_round_trip(capsys):
    code, out, _ = run_capture(
        capsys,
        ["rep-check", "--p", "2", "--q", "3", "--alpha", "1", "--beta", "0", "--l", "1",
         "--no-timestamp"],
    )
    assert code == 0
    payload = json.loads(out)
    assert json.loads(json.dumps(payload)) == payload
