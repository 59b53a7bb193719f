import json

import pytest

from spinbath.cli import main


def run_cli(args):
    return main([str(a) for a in args])


class TestSweepCommand:
    def test_writes_csv_and_metadata(self, tmp_path, capsys):
        out = tmp_path / "run.csv"
        code = run_cli(["sweep", "--scenario", "two-bath", "--bell", "1",
                        "--n-spins", "10", "--t-max", "1", "--steps", "5",
                        "--trials", "2", "--seed", "7", "--out", out])
        assert code == 0
        assert out.exists()
        meta = tmp_path / "run.csv.meta.json"
        assert meta.exists()
        recorded = json.loads(meta.read_text())["config"]
        assert recorded["seed"] == 7
        assert recorded["scenario"] == "two-bath"
        header = out.read_text().splitlines()[0]
        assert header.startswith("trial,time,")
        assert "concurrence" in header and "S1" in header

    def test_byte_identical_reruns(self, tmp_path):
        args = ["sweep", "--scenario", "common", "--bell", "2", "--n-spins", "8",
                "--omega2-dist", "uniform:0:1", "--steps", "6", "--trials", "3",
                "--seed", "123"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run_cli(args + ["--out", a]) == 0
        assert run_cli(args + ["--out", b]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_config_file_with_flag_override(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "scenario": "one-coupled", "bell_index": 3, "n_spins": 6,
            "steps": 4, "seed": 5,
        }))
        out = tmp_path / "run.csv"
        assert run_cli(["sweep", "--config", cfg, "--seed", "6", "--out", out]) == 0
        meta = json.loads((tmp_path / "run.csv.meta.json").read_text())["config"]
        assert meta["seed"] == 6
        assert meta["scenario"] == "one-coupled"

    def test_invalid_config_exits_2(self, tmp_path, capsys):
        out = tmp_path / "run.csv"
        code = run_cli(["sweep", "--scenario", "two-bath", "--steps", "1",
                        "--out", out])
        assert code == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_distribution_exits_2(self, tmp_path):
        code = run_cli(["sweep", "--omega-dist", "uniform:3:1",
                        "--out", tmp_path / "x.csv"])
        assert code == 2

    def test_plot_renders_figures(self, tmp_path):
        out = tmp_path / "run.csv"
        code = run_cli(["sweep", "--scenario", "two-bath", "--n-spins", "10",
                        "--steps", "8", "--seed", "3", "--out", out, "--plot"])
        assert code == 0
        for name in ("run_factors.png", "run_entanglement.png", "run_chsh.png"):
            assert (tmp_path / name).exists(), name


class TestOracleCheckCommand:
    def test_two_bath_passes(self, capsys):
        code = run_cli(["oracle-check", "--scenario", "two-bath", "--n-spins", "3",
                        "--seed", "11"])
        assert code == 0
        assert "max entrywise deviation" in capsys.readouterr().out

    def test_common_bath_passes(self):
        assert run_cli(["oracle-check", "--scenario", "common", "--n-spins", "4",
                        "--seed", "12"]) == 0

    def test_oversized_bath_exits_2(self, tmp_path):
        assert run_cli(["oracle-check", "--n-spins", "30", "--seed", "1"]) == 2


class TestFitCommand:
    @pytest.fixture
    def sweep_csv(self, tmp_path):
        out = tmp_path / "run.csv"
        assert run_cli(["sweep", "--scenario", "one-coupled", "--n-spins", "500",
                        "--t-max", "0.3", "--steps", "60", "--seed", "21",
                        "--out", out]) == 0
        return out

    def test_fit_reports_rate(self, sweep_csv, capsys):
        assert run_cli(["fit", "--in", sweep_csv, "--column", "abs_r1"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("a_hat:")
        assert lines[1].startswith("max_residual:")
        assert float(lines[0].split(":")[1]) > 0

    def test_fit_plot(self, sweep_csv, tmp_path):
        assert run_cli(["fit", "--in", sweep_csv, "--plot"]) == 0
        assert (tmp_path / "run_fit_abs_r1.png").exists()

    def test_unknown_column_exits_2(self, sweep_csv):
        assert run_cli(["fit", "--in", sweep_csv, "--column", "nope"]) == 2

    def test_missing_file_exits_2(self, tmp_path):
        assert run_cli(["fit", "--in", tmp_path / "none.csv"]) == 2
