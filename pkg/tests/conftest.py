import pytest

from config.configurations import load_config
from dynamics import (
    CouplingKind,
    CouplingModel,
    CouplingParams,
    axial_coefficients,
    birth_times,
    couplings,
    evolve,
    geometric_coefficients,
)
from states import horodecki_alpha


@pytest.fixture(autouse=True)
def fresh_config():
    load_config.cache_clear()
    yield
    load_config.cache_clear()


@pytest.fixture(scope="session")
def geometric_couplings():
    return couplings(CouplingModel(CouplingKind.GEOMETRIC, r_over_lambda=0.2))


@pytest.fixture(scope="session")
def axial_damping_couplings():
    """затухание осевых диполей и сдвиг перпендикулярных при R = 0.2λ"""
    damping, _ = axial_coefficients(0.2)
    _, shift = geometric_coefficients(0.2)
    return CouplingParams(damping_13=damping, damping_23=damping, shift_13=shift, shift_23=shift)


@pytest.fixture(scope="session")
def ideal_couplings():
    return couplings(CouplingModel(CouplingKind.IDEAL_SMALL_R))


@pytest.fixture(scope="session")
def alpha_trajectory(geometric_couplings):
    """ρ_α (α = 3.6), R = 0.2λ, до 3/γ с отчётами в каждом отсчёте"""
    traj = evolve(horodecki_alpha(3.6), geometric_couplings, 3.0, dt=1e-3, sample_every=10)
    return traj.attach_reports()


@pytest.fixture(scope="session")
def alpha_birth_times(alpha_trajectory, geometric_couplings):
    return birth_times(alpha_trajectory, geometric_couplings, dt=1e-3)


@pytest.fixture(scope="session")
def axial_damping_trajectory(axial_damping_couplings):
    traj = evolve(horodecki_alpha(3.6), axial_damping_couplings, 3.0, dt=1e-3, sample_every=10)
    return traj.attach_reports()


@pytest.fixture(scope="session")
def axial_damping_birth_times(axial_damping_trajectory, axial_damping_couplings):
    return birth_times(axial_damping_trajectory, axial_damping_couplings, dt=1e-3)


@pytest.fixture(scope="session", params=["alpha", "axial_damping"])
def birth_run(request):
    """(траектория, моменты рождения, коэффициенты) для обоих наборов связи"""
    name = request.param
    c = request.getfixturevalue("geometric_couplings" if name == "alpha" else "axial_damping_couplings")
    return request.getfixturevalue(f"{name}_trajectory"), request.getfixturevalue(f"{name}_birth_times"), c
