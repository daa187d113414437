import pytest
import torch

from matkit import DTYPE, hermitian_eigenvalues, trace_norm
from qstate import (
    DensityMatrix,
    InvalidStateError,
    StateViolation,
    Subsystem,
    dump_state,
    ensure_valid,
    fidelity_with_pure,
    load_state,
    partial_trace,
    partial_transpose,
    realign,
    validate,
)
from qstate.density import _permute_pt
from states import horodecki_alpha, maximally_mixed, p_minus, p_plus, product_state, psi0, random_state


@pytest.fixture(params=[0, 1, 2])
def random_rho(request):
    return random_state(request.param)


class TestValidate:
    def test_valid(self, random_rho):
        diagnostics = validate(random_rho)
        assert diagnostics.is_valid
        assert diagnostics.violations == []

    def test_trace(self):
        diagnostics = validate(DensityMatrix(2 * maximally_mixed().mat))
        assert StateViolation.TRACE_DEVIATION in diagnostics.violations

    def test_negative(self):
        mat = torch.diag(torch.tensor([1.1, -0.1] + [0.0] * 7, dtype=DTYPE))
        diagnostics = validate(DensityMatrix(mat))
        assert diagnostics.violations == [StateViolation.NEGATIVE_EIGENVALUE]
        assert diagnostics.min_eigenvalue == pytest.approx(-0.1)

    def test_not_hermitian(self):
        mat = maximally_mixed().mat.clone()
        mat[0, 1] = 0.05
        diagnostics = validate(DensityMatrix(mat))
        assert not diagnostics.is_valid
        assert StateViolation.NOT_HERMITIAN in diagnostics.violations

    def test_ensure_valid(self):
        with pytest.raises(InvalidStateError):
            ensure_valid(DensityMatrix(torch.zeros((9, 9), dtype=DTYPE)))

    def test_wrong_shape(self):
        with pytest.raises(InvalidStateError):
            DensityMatrix(torch.eye(4, dtype=DTYPE) / 4)


class TestPartialTrace:
    def test_psi0(self):
        for keep in Subsystem:
            torch.testing.assert_close(partial_trace(psi0(), keep), torch.eye(3, dtype=DTYPE) / 3)

    def test_product(self):
        sigma_a = torch.diag(torch.tensor([0.5, 0.3, 0.2], dtype=DTYPE))
        sigma_b = torch.diag(torch.tensor([0.1, 0.1, 0.8], dtype=DTYPE))
        rho = product_state(sigma_a, sigma_b)
        torch.testing.assert_close(partial_trace(rho, Subsystem.A), sigma_a)
        torch.testing.assert_close(partial_trace(rho, Subsystem.B), sigma_b)

    def test_reduced_states_are_states(self, random_rho):
        for keep in Subsystem:
            reduced = partial_trace(random_rho, keep)
            assert complex(torch.trace(reduced)).real == pytest.approx(1.0, abs=1e-10)
            assert float(hermitian_eigenvalues(reduced)[0]) >= -1e-10


class TestPartialTranspose:
    def test_psi0_spectrum(self):
        eigenvalues = hermitian_eigenvalues(partial_transpose(psi0()))
        expected = torch.tensor([-1 / 3] * 3 + [1 / 3] * 6, dtype=torch.float64)
        torch.testing.assert_close(eigenvalues, expected, atol=1e-12, rtol=0)

    def test_involution(self, random_rho):
        for side in Subsystem:
            once = _permute_pt(random_rho.mat, 3, 3, side)
            assert torch.equal(_permute_pt(once, 3, 3, side), random_rho.mat)

    def test_trace(self, random_rho):
        assert torch.trace(partial_transpose(random_rho)) == torch.trace(random_rho.mat)

    def test_side_independent_spectrum(self, random_rho):
        spectrum_a = hermitian_eigenvalues(partial_transpose(random_rho, Subsystem.A))
        spectrum_b = hermitian_eigenvalues(partial_transpose(random_rho, Subsystem.B))
        torch.testing.assert_close(spectrum_a, spectrum_b, atol=1e-12, rtol=0)

    def test_coherence_relocation(self):
        mat = maximally_mixed().mat.clone()
        mat[2, 6] = mat[6, 2] = 0.05
        moved = partial_transpose(DensityMatrix(mat))
        # ρ_37 уходит в позиции (1, 9) и (9, 1)
        assert complex(moved[0, 8]) == pytest.approx(0.05)
        assert complex(moved[8, 0]) == pytest.approx(0.05)
        assert complex(moved[2, 6]) == 0


class TestRealign:
    def test_psi0(self):
        assert trace_norm(realign(psi0())) == pytest.approx(3.0, abs=1e-12)

    def test_maximally_mixed(self):
        assert trace_norm(realign(maximally_mixed())) == pytest.approx(1 / 3, abs=1e-12)

    def test_frobenius_preserved(self, random_rho):
        norm = torch.linalg.matrix_norm(random_rho.mat)
        assert float(torch.linalg.matrix_norm(realign(random_rho))) == pytest.approx(float(norm), abs=1e-12)

    def test_product_is_rank_one(self):
        sigma_a = torch.diag(torch.tensor([0.5, 0.3, 0.2], dtype=DTYPE))
        sigma_b = torch.diag(torch.tensor([0.1, 0.1, 0.8], dtype=DTYPE))
        r = realign(product_state(sigma_a, sigma_b))
        assert int(torch.linalg.matrix_rank(r)) == 1
        expected = float(torch.linalg.matrix_norm(sigma_a) * torch.linalg.matrix_norm(sigma_b))
        assert trace_norm(r) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("make", [p_plus, p_minus, maximally_mixed])
    def test_separable_below_one(self, make):
        assert trace_norm(realign(make())) <= 1 + 1e-9


class TestFidelity:
    def test_basis(self):
        rho = horodecki_alpha(3.6)
        assert fidelity_with_pure(rho, 2) == pytest.approx(3.6 / 21)
        assert fidelity_with_pure(rho, 3) == pytest.approx(1.4 / 21)


class TestSerialization:
    def test_round_trip(self, tmp_path, random_rho):
        path = tmp_path / "state.txt"
        dump_state(random_rho, path)
        loaded = load_state(path)
        assert (loaded.dim_a, loaded.dim_b) == (3, 3)
        torch.testing.assert_close(loaded.mat, random_rho.mat, atol=1e-15, rtol=0)

    def test_header(self, tmp_path):
        path = tmp_path / "state.txt"
        dump_state(psi0(), path)
        lines = path.read_text().splitlines()
        assert lines[0] == "3 3"
        assert len(lines) == 1 + 9

    def test_corrupted(self, tmp_path):
        path = tmp_path / "state.txt"
        path.write_text("3 3\n1 1 oops\n")
        with pytest.raises(InvalidStateError):
            load_state(path)
