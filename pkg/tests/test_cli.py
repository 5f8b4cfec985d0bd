"""Black-box tests of the command-line interface: exit codes, schemas, config."""

import json
import math

import pytest

from magtfd.cli import CONFIG_ENV_VAR, main, read_config_file
from magtfd.errors import ParameterError


def run(args):
    return main(args)


class TestExitCodes:
    def test_unknown_command(self):
        assert run(["frobnicate"]) == 1

    def test_unknown_flag(self):
        assert run(["spectrum", "--frequency", "1"]) == 1

    def test_invalid_parameters(self, capsys):
        assert run(["spectrum", "--omega0", "0", "--omegac", "0"]) == 1
        assert "omega0" in capsys.readouterr().err

    def test_numeric_failure(self, tmp_path):
        # flat second mode: squeezing diverges, reported as a numeric error
        out = tmp_path / "c.csv"
        code = run(
            ["complexity", "--omega0", "0", "--omegac", "0.3", "--beta", "1", "--out", str(out)]
        )
        assert code == 2

    def test_success(self, tmp_path):
        out = tmp_path / "s.csv"
        assert run(["spectrum", "--out", str(out)]) == 0


class TestSpectrum:
    def test_default_table(self, tmp_path):
        out = tmp_path / "s.csv"
        assert run(["spectrum", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "n,k,E"
        assert len(lines) == 10  # header + 3 x 3 levels
        first = lines[1].split(",")
        assert (first[0], first[1]) == ("0", "0")
        assert float(first[2]) == pytest.approx(0.1)

    def test_ladder_spacing(self, tmp_path):
        out = tmp_path / "s.csv"
        run(["spectrum", "--omega0", "0.022", "--omegac", "0.095", "--out", str(out)])
        rows = {}
        for line in out.read_text().splitlines()[1:]:
            n, k, e = line.split(",")
            rows[(int(n), int(k))] = float(e)
        root = math.sqrt(4 * 0.022**2 + 0.095**2)
        assert rows[(1, 1)] - rows[(0, 0)] == pytest.approx(root, rel=1e-12)

    def test_json_format(self, tmp_path):
        out = tmp_path / "s.json"
        run(["spectrum", "--format", "json", "--out", str(out)])
        data = json.loads(out.read_text())
        assert len(data) == 9
        assert data[0]["E"] == pytest.approx(0.1)


class TestComplexitySeries:
    args = ["complexity", "--omega0", "0.1", "--omegac", "0.03", "--beta", "1",
            "--t0", "0", "--t1", "100", "--samples", "64"]

    def test_csv_round_trip_is_bit_exact(self, tmp_path):
        from magtfd.analysis import sample_series
        from magtfd.complexity import EvaluationContext, complexity_rate_at

        out = tmp_path / "c.csv"
        assert run(self.args + ["--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "t,C,Cdot"
        ctx = EvaluationContext.build(0.1, 0.03, 1.0)
        series = sample_series(ctx, 0.0, 100.0, 64)
        for line, t, c in zip(lines[1:], series.t, series.values):
            ft, fc, fr = (float(x) for x in line.split(","))
            assert ft == t and fc == c
            assert fr == complexity_rate_at(ctx, float(t))

    def test_byte_identical_reruns(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(self.args + ["--out", str(a)])
        run(self.args + ["--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_sidecar_metadata(self, tmp_path):
        out = tmp_path / "c.csv"
        run(self.args + ["--out", str(out)])
        meta = json.loads((tmp_path / "c.csv.meta.json").read_text())
        assert meta["command"] == "complexity"
        assert meta["beta"] == 1.0

    def test_matched_reference_constant_column(self, tmp_path):
        out = tmp_path / "c.csv"
        run(
            ["complexity", "--omega0", "0.1", "--omegac", "0", "--beta", "1",
             "--omega-ref1", "0.1", "--omega-ref2", "0.1",
             "--t0", "0", "--t1", "100", "--samples", "32", "--out", str(out)]
        )
        cs = {line.split(",")[1] for line in out.read_text().splitlines()[1:]}
        assert len(cs) == 1

    def test_out_required(self):
        assert run(self.args) == 1


class TestSweepCommand:
    def test_schema_and_satisfaction(self, tmp_path):
        out = tmp_path / "sweep.csv"
        code = run(
            ["sweep", "--omega0", "0.1", "--omegac", "0.03",
             "--beta-min", "0.1", "--beta-max", "10", "--beta-count", "5",
             "--samples", "256", "--out", str(out)]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == (
            "beta,omega0,omegaC,omegaR1,omegaR2,cMax,rateMax,"
            "internalEnergy,lloydRhs,lloydSatisfied,error"
        )
        assert len(lines) == 6
        for line in lines[1:]:
            fields = line.split(",")
            assert fields[-2] == "true"
            assert fields[-1] == ""

    def test_empty_grid_is_usage_error(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert run(["sweep", "--beta-count", "0", "--out", str(out)]) == 1

    def test_all_points_failing_is_numeric_error(self, tmp_path):
        out = tmp_path / "sweep.csv"
        code = run(
            ["sweep", "--omega0", "0", "--omegac", "0.3", "--beta-count", "3",
             "--out", str(out)]
        )
        assert code == 2


class TestPeriodCommand:
    def test_strong_field_no_beat(self, tmp_path):
        out = tmp_path / "p.json"
        omega0 = repr(math.sqrt(0.1 * 0.005))
        code = run(
            ["period", "--omega0", omega0, "--omegac", "0.095", "--beta", "1",
             "--out", str(out)]
        )
        assert code == 0
        data = json.loads(out.read_text())
        assert data["carrier_period"] == pytest.approx(math.pi / 0.005, rel=0.02)
        assert "beat_period" not in data

    def test_weak_field_beat(self, tmp_path):
        out = tmp_path / "p.json"
        omega0 = repr(math.sqrt(0.1 * 0.09))
        code = run(
            ["period", "--omega0", omega0, "--omegac", "0.01", "--beta", "0.5",
             "--out", str(out)]
        )
        assert code == 0
        data = json.loads(out.read_text())
        assert data["beat_period"] == pytest.approx(math.pi / 0.01, rel=0.10)

    def test_zero_field(self, tmp_path):
        out = tmp_path / "p.json"
        code = run(["period", "--omega0", "0.1", "--beta", "1", "--out", str(out)])
        assert code == 0
        data = json.loads(out.read_text())
        assert data["carrier_period"] == pytest.approx(math.pi / 0.1, rel=0.02)


class TestConfig:
    def test_parse_errors(self, tmp_path):
        bad = tmp_path / "bad.cfg"
        bad.write_text("omega0 0.1\n")
        with pytest.raises(ParameterError):
            read_config_file(str(bad))

    def test_comments_and_whitespace(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# run settings\nomega0 = 0.022  # trap\n\nbeta=2\n")
        assert read_config_file(str(cfg)) == {"omega0": "0.022", "beta": "2"}

    def test_flag_overrides_config_overrides_default(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("omega0=0.5\nbeta=2\n")
        out = tmp_path / "s.csv"
        run(["spectrum", "--config", str(cfg), "--omega0", "0.3", "--out", str(out)])
        meta = json.loads((tmp_path / "s.csv.meta.json").read_text())
        assert meta["omega0"] == 0.3  # flag wins
        assert meta["beta"] == 2.0  # config wins over default
        assert meta["omegac"] == 0.0  # default

    def test_env_var_fallback(self, tmp_path, monkeypatch):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("omega0=0.7\n")
        monkeypatch.setenv(CONFIG_ENV_VAR, str(cfg))
        out = tmp_path / "s.csv"
        run(["spectrum", "--out", str(out)])
        meta = json.loads((tmp_path / "s.csv.meta.json").read_text())
        assert meta["omega0"] == 0.7

    def test_charge_field_pair(self, tmp_path):
        out = tmp_path / "s.csv"
        run(["spectrum", "--charge", "2", "--bfield", "0.25", "--out", str(out)])
        meta = json.loads((tmp_path / "s.csv.meta.json").read_text())
        assert meta["omegac"] == 0.5
        assert run(["spectrum", "--charge", "2", "--out", str(out)]) == 1
