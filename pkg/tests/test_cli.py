"""
Tests for the relqi command line
"""

import json

import numpy as np
import pytest

from cli import main, parse_and_dispatch
from qmath import PureState, SizeError
from utils.config_manager import ConfigManager
from utils.state_io import write_state


def _run_json(argv, capsys):
    code = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


# ============================================================
# Exit codes
# ============================================================

class TestExitCodes:
    """0 성공, 1 사용 오류, 2 도메인 오류"""

    def test_missing_command(self, capsys):
        assert main([]) == 1
        assert capsys.readouterr().out == ""

    def test_unknown_flag(self):
        assert main(["wigner", "--bogus", "1"]) == 1

    def test_missing_required_value(self):
        assert main(["wigner", "--boost", "0,0,0.5"]) == 1

    def test_bad_vector(self):
        assert main(["wigner", "--boost", "0,0", "--momentum", "1,0,0"]) == 1

    def test_superluminal_is_domain_error(self, capsys):
        assert main(["channel", "boost-approx", "--v", "1.2", "--delta", "0.01"]) == 2
        assert capsys.readouterr().out == ""

    def test_missing_state_file(self, tmp_path):
        missing = str(tmp_path / "nope.json")
        assert main(["twirl", "--kind", "single", "--input", missing]) == 2

    def test_unknown_selftest_check(self):
        assert main(["selftest", "--only", "no_such_check"]) == 1


# ============================================================
# Commands
# ============================================================

class TestWigner:

    def test_perpendicular_boost(self, capsys):
        code, payload = _run_json(["wigner", "--boost", "0,0,0.5", "--momentum", "1,0,0"], capsys)
        assert code == 0
        sinh_xi = 0.5 / np.sqrt(0.75)
        expected = np.arctan(sinh_xi * 1.0 / (1.0 / np.sqrt(0.75) + np.sqrt(2.0)))
        assert payload["results"]["angle"] == pytest.approx(expected, abs=1e-9)
        assert payload["diagnostics"]["oracle"]["angle"] == pytest.approx(expected, abs=1e-6)
        assert set(payload["results"]) >= {"axis", "angle", "su2", "momentum_in", "momentum_out"}

    def test_version_and_timestamp(self, capsys):
        _, payload = _run_json(["wigner", "--boost", "0,0,0.5", "--momentum", "1,0,0"], capsys)
        assert payload["version"].startswith("relqi ")
        assert "timestamp" in payload
        _, payload = _run_json(["wigner", "--boost", "0,0,0.5", "--momentum", "1,0,0", "--deterministic"], capsys)
        assert "timestamp" not in payload
        assert "wall_time" not in payload


class TestChannel:

    def test_approx_on_default_input(self, capsys):
        code, payload = _run_json(["channel", "boost-approx", "--v", "0.5", "--delta", "0.1"], capsys)
        assert code == 0
        results = payload["results"]
        assert set(results) >= {"channel", "params", "choi_defects", "output_state"}
        g = 0.05 / (1.0 + np.sqrt(0.75))
        entries = results["output_state"]["entries"]
        assert entries[3][0] == pytest.approx(g ** 2 / 4.0)

    def test_state_file_input(self, tmp_path, capsys):
        path = tmp_path / "plus.json"
        write_state(PureState.from_vector([1, 1], normalize=True), path)
        code, payload = _run_json(["channel", "boost-exact", "--v", "0.5", "--delta", "0.05",
                                   "--input", str(path)], capsys)
        assert code == 0
        assert payload["diagnostics"]["quadrature_error_estimate"] <= 1e-6
        assert payload["results"]["choi_defects"]["accepted"]


class TestMultiplicity:
    """CSV 표"""

    def test_csv_table(self, capsys):
        assert main(["multiplicity", "--n-max", "4", "--deterministic"]) == 0
        lines = capsys.readouterr().out.splitlines()
        header = [line for line in lines if line.startswith("#")]
        body = [line for line in lines if not line.startswith("#")]
        assert "# command=multiplicity" in header
        assert not any(line.startswith("# timestamp=") for line in header)
        assert body[0] == "n,j,multiplicity,dim_check"
        assert "4,0,2,ok" in body
        assert "3,1/2,2,ok" in body

    def test_deterministic_output_is_reproducible(self, capsys):
        main(["multiplicity", "--n-max", "5", "--deterministic"])
        first = capsys.readouterr().out
        main(["multiplicity", "--n-max", "5", "--deterministic"])
        assert capsys.readouterr().out == first


class TestOverlapCommand:
    """겹침 CSV"""

    def test_csv_columns_at_wide_separation(self, capsys):
        assert main(["overlap", "--delta", "0.001", "--separation", "10000", "--deterministic"]) == 0
        body = [line for line in capsys.readouterr().out.splitlines() if not line.startswith("#")]
        assert body[0] == "a,delta,overlap_re,overlap_im,overlap_abs,analytic_gaussian"
        row = dict(zip(body[0].split(","), body[1].split(",")))
        assert float(row["overlap_abs"]) < 1e-10
        assert float(row["analytic_gaussian"]) == pytest.approx(np.exp(-25.0))

    def test_nested_results_refuse_csv(self, capsys):
        assert main(["channel", "boost-approx", "--v", "0.5", "--delta", "0.1", "--format", "csv"]) == 1
        assert capsys.readouterr().out == ""


class TestPhoton:

    def test_phase_for_z_rotation(self, capsys):
        code, payload = _run_json(["photon", "phase", "--rotate", "0,0,1,0.3"], capsys)
        assert code == 0
        assert payload["results"]["omega"] == pytest.approx(0.3)

    def test_encoded_pair_survives(self, capsys):
        code, payload = _run_json(["photon", "encode", "--momentum", "1,2,0.5", "--boost", "0.3,0,0.4",
                                   "--amplitudes", "0.6,0.8j"], capsys)
        assert code == 0
        assert payload["results"]["logical_fidelity"] == pytest.approx(1.0, abs=1e-12)


class TestDeterminism:
    """같은 설정 + 시드 -> 같은 바이트"""

    @pytest.mark.parametrize("argv", [
        ["sweep", "velocity", "--v", "0.1:0.9:5", "--delta", "0.01"],
        ["twirl", "--kind", "single", "--basis", "0", "--method", "monte-carlo",
         "--samples", "2000", "--seed", "7", "--format", "json"],
    ], ids=["sweep", "twirl"])
    def test_byte_identical(self, argv, capsys):
        assert main(argv + ["--deterministic"]) == 0
        first = capsys.readouterr().out
        assert main(argv + ["--deterministic"]) == 0
        assert capsys.readouterr().out == first
        assert first


# ============================================================
# Configuration precedence
# ============================================================

class TestRunConfig:
    """YAML < RELQI_SEED < --config 파일 < 플래그"""

    def test_env_seed(self, monkeypatch):
        monkeypatch.setenv("RELQI_SEED", "1234")
        report = parse_and_dispatch(["multiplicity", "--n-max", "2"])
        assert report.config.seed == 1234

    def test_config_file_beats_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("RELQI_SEED", "1234")
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# run settings\nseed = 99\nn-max = 3\n", encoding="utf-8")
        report = parse_and_dispatch(["multiplicity", "--config", str(cfg)])
        assert report.config.seed == 99
        assert report.config.params["n_max"] == 3

    def test_flag_beats_config_file(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("seed=99\nn_max=3\n", encoding="utf-8")
        report = parse_and_dispatch(["multiplicity", "--config", str(cfg), "--seed", "0x10", "--n-max", "2"])
        assert report.config.seed == 16
        assert report.table["n"].max() == 2

    def test_unknown_config_key(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("colour=blue\n", encoding="utf-8")
        assert main(["multiplicity", "--config", str(cfg)]) == 1

    def test_output_file(self, tmp_path, capsys):
        out = tmp_path / "table.csv"
        assert main(["multiplicity", "--n-max", "3", "--output", str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert "n,j,multiplicity,dim_check" in out.read_text(encoding="utf-8")


class TestBaseConfigLimits:
    """YAML caps / numerics 반영"""

    @staticmethod
    def _manager(tmp_path, text):
        path = tmp_path / "base.yaml"
        path.write_text(text, encoding="utf-8")
        return ConfigManager(str(path))

    def test_max_dim_caps_basis_input(self, tmp_path):
        manager = self._manager(tmp_path, "caps:\n  max_dim: 8\n")
        with pytest.raises(SizeError):
            parse_and_dispatch(["twirl", "--kind", "collective", "--basis", "0000"], manager)
        report = parse_and_dispatch(["twirl", "--kind", "collective", "--basis", "000"], manager)
        assert report.exit_code == 0

    def test_max_dim_caps_state_file(self, tmp_path):
        path = tmp_path / "four.json"
        write_state(PureState.basis(0, 16), path)
        manager = self._manager(tmp_path, "caps:\n  max_dim: 8\n")
        with pytest.raises(SizeError):
            parse_and_dispatch(["twirl", "--kind", "single", "--input", str(path)], manager)

    def test_numerics_set_channel_acceptance(self, tmp_path):
        argv = ["channel", "boost-approx", "--v", "0.5", "--delta", "0.1"]
        strict = self._manager(tmp_path, "numerics:\n  tp_tol: -1.0\n")
        assert not parse_and_dispatch(argv, strict).results["choi_defects"]["accepted"]
        loose = self._manager(tmp_path, "numerics:\n  tp_tol: 1.0e-10\n")
        assert parse_and_dispatch(argv, loose).results["choi_defects"]["accepted"]


class TestSelftestCommand:

    def test_subset_passes(self, capsys):
        code, payload = _run_json(["selftest", "--only", "wigner_cocycle,photon_rates", "--trials", "5"], capsys)
        assert code == 0
        assert payload["results"]["passed"]
        assert [o["check_name"] for o in payload["results"]["outcomes"]] == ["photon_rates", "wigner_cocycle"]
