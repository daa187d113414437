"""
модуль с генератором основного кинетического уравнения

    dρ/dt = i[H, ρ] + (L^A + L^B + L^AB) ρ

гамильтониан содержит только диполь-дипольные сдвиги (уравнение записано во
вращающейся системе на частоте ω0), диссипатор собран из операторов скачка
σ3k^α = |3_α><k_α| с матрицей затухания из dynamics.couplings
"""

import logging
from functools import lru_cache

import torch

from matkit import CMatrix, DTYPE, identity, kron, matrix_unit
from qstate import DensityMatrix, Subsystem, ensure_valid
from dynamics.couplings import BadCouplingsError, CouplingParams, damping_matrix

logger = logging.getLogger(__name__)

LEVELS = 3
DIM = LEVELS * LEVELS

# порядок операторов скачка совпадает со строками damping_matrix
JUMP_LABELS = ((1, Subsystem.A), (2, Subsystem.A), (1, Subsystem.B), (2, Subsystem.B))


def transition_operator(j: int, k: int, slot: Subsystem) -> CMatrix:
    """
    σ_jk^α - переход из |k_α> в |j_α>, тензорно домноженный на единицу второго атома

    Args:
        j: конечный уровень (1..3)
        k: начальный уровень (1..3)
        slot: атом A или B

    Returns:
        CMatrix: оператор 9x9
    """
    unit = matrix_unit(LEVELS, j, k)
    if slot is Subsystem.A:
        return kron(unit, identity(LEVELS))
    return kron(identity(LEVELS), unit)


def _other(slot: Subsystem) -> Subsystem:
    return Subsystem.B if slot is Subsystem.A else Subsystem.A


def hamiltonian(c: CouplingParams) -> CMatrix:
    """
    H = Σ_k Ω_k3 (σk3^A σ3k^B + σk3^B σ3k^A) + Σ_α Ω_vc (σ23^α σ31^¬α + σ32^α σ13^¬α)

    Args:
        c: коэффициенты связи

    Returns:
        CMatrix: эрмитов гамильтониан 9x9
    """
    s = transition_operator
    h = torch.zeros((DIM, DIM), dtype=DTYPE)
    for k, shift in ((1, c.shift_13), (2, c.shift_23)):
        h = h + shift * (s(k, 3, Subsystem.A) @ s(3, k, Subsystem.B) + s(k, 3, Subsystem.B) @ s(3, k, Subsystem.A))
    for slot in Subsystem:
        other = _other(slot)
        h = h + c.shift_vc * (s(2, 3, slot) @ s(3, 1, other) + s(3, 2, slot) @ s(1, 3, other))
    return h


class MasterEquation:
    """
    генератор динамики для фиксированного набора коэффициентов

    все операторы собираются один раз в конструкторе, apply работает и с одной
    матрицей 9x9, и с пачкой матриц формы (..., 9, 9)
    """

    def __init__(self, c: CouplingParams):
        """
        инициализация генератора

        Args:
            c: коэффициенты связи
        """
        self.couplings = c
        self.hamiltonian = hamiltonian(c)
        jumps = [transition_operator(3, k, slot) for k, slot in JUMP_LABELS]
        rates = damping_matrix(c)
        # тройки (c_ij, A_i, A_j^dagger, A_j^dagger A_i) для ненулевых c_ij
        self._terms = []
        for i, a_i in enumerate(jumps):
            for j, a_j in enumerate(jumps):
                rate = float(rates[i, j])
                if rate == 0.0:
                    continue
                a_j_dag = a_j.conj().T
                self._terms.append((rate, a_i, a_j_dag, a_j_dag @ a_i))
        logger.debug("генератор собран: %s слагаемых диссипатора", len(self._terms))

    def apply(self, rho: torch.Tensor) -> torch.Tensor:
        """
        правая часть уравнения без проверки входа

        Args:
            rho: матрица 9x9 или пачка таких матриц

        Returns:
            torch.Tensor: dρ/dt той же формы
        """
        h = self.hamiltonian
        out = 1j * (h @ rho - rho @ h)
        for rate, a_i, a_j_dag, product in self._terms:
            out = out + rate * (2.0 * a_i @ rho @ a_j_dag - product @ rho - rho @ product)
        return out

    def superoperator(self) -> torch.Tensor:
        """
        генератор как матрица 81x81, действующая на построчно развёрнутую ρ

        Returns:
            torch.Tensor: L такая, что vec(dρ/dt) = L vec(ρ)
        """
        basis = torch.eye(DIM * DIM, dtype=DTYPE).reshape(DIM * DIM, DIM, DIM)
        images = self.apply(basis).reshape(DIM * DIM, DIM * DIM)
        return images.T.contiguous()


@lru_cache(maxsize=32)
def master_equation(c: CouplingParams) -> MasterEquation:
    return MasterEquation(c)


def liouvillian(rho: DensityMatrix, c: CouplingParams) -> CMatrix:
    """
    dρ/dt = i[H, ρ] + (L^A + L^B + L^AB) ρ для данного состояния

    Args:
        rho: матрица плотности
        c: коэффициенты связи

    Returns:
        CMatrix: производная, эрмитова и со следом ноль

    Raises:
        InvalidStateError: если ρ не является состоянием
        BadCouplingsError: если c не является CouplingParams
    """
    if not isinstance(c, CouplingParams):
        raise BadCouplingsError(f"ожидались CouplingParams, получено {type(c).__name__}")
    ensure_valid(rho)
    return master_equation(c).apply(rho.mat)


def superoperator(c: CouplingParams) -> torch.Tensor:
    """матрица генератора 81x81 для коэффициентов c"""
    return master_equation(c).superoperator()
