import math

import pytest

from handlers.common import (
    EXIT_CONFIG,
    EXIT_INTEGRATION,
    EXIT_IO,
    ScenarioConfig,
    exit_code_for,
    load_scenario,
    parse_grid,
)
from handlers.evolve import TRAJECTORY_HEADER
from handlers.figure import cmd_figure
from handlers.scan import cmd_scan
from dynamics import BadGeometryError, RefinementStallError, StepTooLargeError
from config.configurations import ConfigError
from qstate import InvalidStateError, load_state
from simulate import main
from utils.output import read_csv_columns
from workers import SCAN_HEADER, ScanCell, ScanPool, run_cell


def printed(capsys) -> dict[str, str]:
    lines = capsys.readouterr().out.splitlines()
    return dict(line.split("=", 1) for line in lines if "=" in line)


class TestScenario:
    def test_file_and_overrides(self, tmp_path):
        path = tmp_path / "run.env"
        path.write_text("state=basis:3\nmodel=independent\ntend=2\noutputs=csv,plot\n")
        cfg = load_scenario(str(path), {"t_end": 1.5, "model": None})
        assert cfg.initial_state == "basis:3"
        assert cfg.model == "independent"
        assert cfg.t_end == 1.5
        assert cfg.outputs == {"csv", "plot"}

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_scenario(str(tmp_path / "absent.env"), {})

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "run.env"
        path.write_text("state=psi0\ntend=1\ncolour=red\n")
        with pytest.raises(ConfigError):
            load_scenario(str(path), {})

    def test_required(self):
        with pytest.raises(ConfigError):
            load_scenario(None, {"initial_state": "psi0"})

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"t_end": 0.0},
            {"dt": -1e-3},
            {"sample_every": 0},
            {"outputs": {"csv", "movie"}},
        ],
    )
    def test_invalid(self, kwargs):
        values = {"initial_state": "psi0", "model": "independent", "t_end": 1.0, "dt": 1e-3, "sample_every": 10}
        values.update(kwargs)
        with pytest.raises(ConfigError):
            ScenarioConfig(**values)


class TestHelpers:
    def test_parse_grid(self):
        assert parse_grid("3.6") == [3.6]
        assert parse_grid("3.2,3.6") == [3.2, 3.6]
        assert parse_grid("3.2:4.0:5") == pytest.approx([3.2, 3.4, 3.6, 3.8, 4.0])
        with pytest.raises(ConfigError):
            parse_grid("a:b")

    @pytest.mark.parametrize(
        "error, code",
        [
            (ConfigError("x"), EXIT_CONFIG),
            (BadGeometryError("x"), EXIT_CONFIG),
            (InvalidStateError("x"), EXIT_INTEGRATION),
            (StepTooLargeError(0.5, "x"), EXIT_INTEGRATION),
            (RefinementStallError("x"), EXIT_INTEGRATION),
            (FileNotFoundError("x"), EXIT_IO),
        ],
    )
    def test_exit_codes(self, error, code):
        assert exit_code_for(error) == code

    def test_unexpected_error_propagates(self):
        with pytest.raises(KeyError):
            exit_code_for(KeyError("x"))


class TestEvolveCommand:
    def test_decay(self, tmp_path, capsys):
        code = main(["evolve", "--state", "basis:3", "--model", "independent", "--tend", "3", "--out", str(tmp_path)])
        assert code == 0
        out = printed(capsys)
        assert out["tN_gamma"] == "none"
        assert out["tD_gamma"] == "none"
        columns = read_csv_columns(tmp_path / "trajectory.csv")
        assert list(columns) == TRAJECTORY_HEADER
        for t, p3 in zip(columns["t"], columns["p3"]):
            assert float(p3) == pytest.approx(math.exp(-2 * float(t)), abs=1e-6)

    def test_ground_constant(self, tmp_path, capsys):
        code = main(
            ["evolve", "--state", "basis:9", "--tend", "1", "--outputs", "csv,states", "--out", str(tmp_path)]
        )
        assert code == 0
        assert printed(capsys)["tN_gamma"] == "none"
        columns = read_csv_columns(tmp_path / "trajectory.csv")
        assert set(columns["p9"]) == {"1"}
        assert set(columns["N"]) == {"0"}
        assert load_state(tmp_path / "states" / "state_00000.txt").population(9) == 1.0
        assert (tmp_path / "states" / "index.csv").is_file()

    def test_birth_times(self, tmp_path, capsys):
        code = main(
            [
                "evolve",
                "--state",
                "horodecki:α=3.6",
                "--model",
                "geometric:R=0.2",
                "--tend",
                "1.5",
                "--outputs",
                "csv,plot",
                "--out",
                str(tmp_path),
            ]
        )
        assert code == 0
        out = printed(capsys)
        assert float(out["tN_gamma"]) == pytest.approx(0.6711, abs=2e-3)
        assert float(out["tD_gamma"]) == pytest.approx(1.0109, abs=2e-3)
        assert (tmp_path / "trajectory.svg").read_text().startswith("<?xml")

    def test_birth_times_custom_couplings(self, tmp_path, capsys, axial_damping_couplings):
        c = axial_damping_couplings
        model = f"custom:G13={c.damping_13!r},G23={c.damping_23!r},O13={c.shift_13!r},O23={c.shift_23!r}"
        code = main(["evolve", "--state", "horodecki:α=3.6", "--model", model, "--tend", "1.5", "--out", str(tmp_path)])
        assert code == 0
        out = printed(capsys)
        t_n, t_d = float(out["tN_gamma"]), float(out["tD_gamma"])
        assert t_n == pytest.approx(0.49, rel=0.3)
        assert t_d == pytest.approx(0.78, rel=0.3)
        assert t_n < t_d

    def test_config_file(self, tmp_path, capsys):
        scenario = tmp_path / "run.env"
        scenario.write_text(f"state=basis:9\ntend=0.5\nout={tmp_path / 'out'}\n")
        assert main(["evolve", "--config", str(scenario)]) == 0
        assert (tmp_path / "out" / "trajectory.csv").is_file()

    @pytest.mark.parametrize(
        "argv, code",
        [
            (["evolve", "--state", "werner", "--tend", "1"], EXIT_CONFIG),
            (["evolve", "--state", "horodecki:α=4.5", "--tend", "1"], EXIT_CONFIG),
            (["evolve", "--state", "psi0", "--model", "geometric:R=0", "--tend", "1"], EXIT_CONFIG),
            (["evolve", "--state", "psi0", "--tend", "1", "--dt", "0"], EXIT_CONFIG),
            (["evolve", "--state", "psi0", "--tend", "1", "--dt", "2", "--model", "ideal:omega=40"], EXIT_INTEGRATION),
        ],
    )
    def test_errors(self, tmp_path, argv, code):
        assert main(argv + ["--out", str(tmp_path)]) == code

    def test_bad_arguments(self):
        with pytest.raises(SystemExit) as error:
            main(["evolve", "--tend", "soon"])
        assert error.value.code == EXIT_CONFIG


class TestFigureCommand:
    def test_fig1(self, tmp_path):
        assert cmd_figure("fig1", out_path=str(tmp_path)) == 0
        columns = read_csv_columns(tmp_path / "fig1.csv")
        assert list(columns) == ["t", "F"]
        values = [float(v) for v in columns["F"]]
        assert values[0] > 0
        crossings = sum(1 for a, b in zip(values, values[1:]) if a > 0 >= b or a <= 0 < b)
        assert crossings == 1
        assert (tmp_path / "fig1.svg").is_file()

    def test_fig2(self, tmp_path):
        assert cmd_figure("fig2", out_path=str(tmp_path)) == 0
        columns = read_csv_columns(tmp_path / "fig2.csv")
        for name in ("G", "H"):
            values = [float(v) for v in columns[name]]
            assert min(values) < 0 < max(values)

    def test_fig3(self, tmp_path):
        assert main(["figure", "fig3", "--out", str(tmp_path)]) == 0
        columns = read_csv_columns(tmp_path / "fig3.csv")
        assert list(columns) == ["t", "N", "Nred", "NR"]
        times = [float(v) for v in columns["t"]]
        first_n = next(t for t, v in zip(times, columns["N"]) if float(v) > 0)
        first_nred = next(t for t, v in zip(times, columns["Nred"]) if float(v) > 0)
        assert first_nred > first_n
        realign = [float(v) for v in columns["NR"]]
        assert realign[0] == pytest.approx(0.0461796, abs=1e-7)
        assert all(v == 0.0 for t, v in zip(times, realign) if 0.05 <= t <= 0.3)

    def test_svg_reproducible(self, tmp_path):
        first, second = tmp_path / "a", tmp_path / "b"
        cmd_figure("fig1", t_end=0.5, out_path=str(first))
        cmd_figure("fig1", t_end=0.5, out_path=str(second))
        assert (first / "fig1.svg").read_bytes() == (second / "fig1.svg").read_bytes()


class TestAsymptoteCommand:
    def test_alpha(self, capsys):
        assert main(["asymptote", "horodecki:α=3.9"]) == 0
        out = printed(capsys)
        assert float(out["x"]) == pytest.approx(5 / 56)
        assert float(out["y"]) == pytest.approx(5 / 56)
        assert float(out["t"]) == pytest.approx(9 / 14)
        assert float(out["N"]) == pytest.approx(0.0239121, abs=1e-7)
        assert out["distillable"] == "true"
        assert float(out["stationarity_residual"]) <= 1e-12

    def test_ground(self, capsys):
        assert main(["asymptote", "basis:9"]) == 0
        out = printed(capsys)
        assert float(out["N"]) == 0.0
        assert float(out["Nred"]) == 0.0
        assert out["distillable"] == "false"

    def test_one_atom_excited(self, capsys):
        assert main(["asymptote", "basis:3"]) == 0
        out = printed(capsys)
        assert float(out["x"]) == pytest.approx(0.25)
        assert float(out["N"]) == pytest.approx(0.10356, abs=1e-5)
        assert out["distillable"] == "true"

    def test_unknown_state(self):
        assert main(["asymptote", "werner"]) == EXIT_CONFIG


class TestScanCommand:
    def test_rows(self, tmp_path):
        assert cmd_scan([3.6, 4.0], [0.2], t_end=1.5, out_path=str(tmp_path)) == 0
        columns = read_csv_columns(tmp_path / "scan.csv")
        assert list(columns) == SCAN_HEADER
        assert [float(v) for v in columns["alpha"]] == [3.6, 4.0]
        assert columns["status"] == ["ok", "ok"]
        assert float(columns["tN"][0]) == pytest.approx(0.6711, abs=5e-3)

    @pytest.mark.parametrize("alphas, r_values", [([2.5], [0.2]), ([3.6], [0.0])])
    def test_out_of_range(self, tmp_path, alphas, r_values):
        assert cmd_scan(alphas, r_values, out_path=str(tmp_path)) == EXIT_CONFIG

    def test_failed_cell(self):
        row = run_cell(ScanCell(alpha=4.5, r_over_lambda=0.2, t_end=0.5, dt=1e-3, sample_every=10))
        assert row.status == "error"
        assert row.t_n is None

    def test_pool_order(self):
        cells = [ScanCell(alpha=a, r_over_lambda=0.5, t_end=0.2, dt=1e-3, sample_every=10) for a in (3.9, 3.3)]
        rows = ScanPool(workers=1).run(cells)
        assert [r.alpha for r in rows] == [3.9, 3.3]

    def test_cli(self, tmp_path, capsys):
        assert main(["scan", "--alpha", "3.6", "--r", "0.2", "--tend", "1", "--out", str(tmp_path)]) == 0
        assert printed(capsys)["scan_csv"].endswith("scan.csv")


class TestCouplingsCommand:
    def test_geometric(self, capsys):
        assert main(["couplings", "geometric:R=0.2"]) == 0
        out = printed(capsys)
        assert float(out["damping_13"]) == pytest.approx(0.70989, abs=1e-4)
        assert float(out["shift_13"]) == pytest.approx(0.38407, abs=1e-4)
        assert float(out["damping_min_eigenvalue"]) > 0

    def test_custom_gamma(self, capsys):
        assert main(["couplings", "custom:G13=0.5,O13=1", "--gamma", "2"]) == 0
        out = printed(capsys)
        assert float(out["gamma"]) == 2.0
        assert float(out["damping_13"]) == pytest.approx(1.0)
        assert float(out["shift_13"]) == pytest.approx(2.0)

    def test_axial(self, capsys):
        assert main(["couplings", "axial:R=0.2"]) == 0
        assert float(printed(capsys)["damping_13"]) == pytest.approx(0.85074, abs=1e-5)

    def test_bad_model(self):
        assert main(["couplings", "vacuum"]) == EXIT_CONFIG


class TestLargeSeparationScan:
    def test_uniquely_relaxing(self, tmp_path):
        assert cmd_scan([3.6], [5.0, 10.0], t_end=10.0, sample_every=100, out_path=str(tmp_path)) == 0
        columns = read_csv_columns(tmp_path / "scan.csv")
        assert columns["status"] == ["ok", "ok"]
        assert all(float(v) <= 1e-3 for v in columns["finalN"])
