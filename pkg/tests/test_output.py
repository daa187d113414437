import pytest

from states import basis_state, psi0
from qstate import load_state
from utils.output import dump_states, ensure_dir, format_number, read_csv_columns, write_csv
from utils.plotting import plot_csv


class TestFormatting:
    @pytest.mark.parametrize(
        "value, digits, expected",
        [(None, 12, ""), (0.0, 12, "0"), (1 / 3, 4, "0.3333"), (1.25e-9, 3, "1.25e-09")],
    )
    def test_format_number(self, value, digits, expected):
        assert format_number(value, digits) == expected


class TestFiles:
    def test_csv_round_trip(self, tmp_path):
        path = write_csv(tmp_path / "out.csv", ["t", "N"], [["0", "0.1"], ["0.5", ""]])
        assert path.read_text() == "t,N\n0,0.1\n0.5,\n"
        assert read_csv_columns(path) == {"t": ["0", "0.5"], "N": ["0.1", ""]}

    def test_ensure_dir(self, tmp_path):
        target = ensure_dir(tmp_path / "a" / "b")
        assert target.is_dir()
        assert ensure_dir(target) == target

    def test_dump_states(self, tmp_path):
        count = dump_states(tmp_path / "states", [0.0, 0.5], [psi0(), basis_state(9)])
        assert count == 2
        index = read_csv_columns(tmp_path / "states" / "index.csv")
        assert index == {"file": ["state_00000.txt", "state_00001.txt"], "t": ["0", "0.5"]}
        assert load_state(tmp_path / "states" / "state_00001.txt").population(9) == 1.0

    def test_plot_with_empty_cells(self, tmp_path):
        csv_path = write_csv(tmp_path / "out.csv", ["t", "N"], [["0", "0.1"], ["0.5", ""], ["1", "0.2"]])
        svg = plot_csv(csv_path, tmp_path / "out.svg", ["N"], title="N")
        assert "<svg" in svg.read_text()
