import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from phonon_chain import (
    ChainParams,
    PhaseState,
    build_mode_basis,
    energy_level,
    equilibrium_positions,
    from_modes,
    hamiltonian_cartesian,
    hamiltonian_modes,
    to_modes,
)


def test_params_reject_single_particle():
    with pytest.raises(ValueError):
        ChainParams(n_particles=1)


@pytest.mark.parametrize("kwargs", [
    {"mass": 0.0}, {"mass": -1.0}, {"coupling": 0.0}, {"hbar": 0.0},
    {"spacing": -0.1},
])
def test_params_reject_bad_constants(kwargs):
    with pytest.raises(ValueError):
        ChainParams(n_particles=4, **kwargs)


def test_two_particle_transform_closed_form():
    params = ChainParams(n_particles=2, mass=1.0, coupling=1.0)
    basis = build_mode_basis(params)
    s = 1.0 / np.sqrt(2.0)
    assert_allclose(basis.transform[:, 0], [s, s], rtol=0, atol=1e-15)
    assert_allclose(basis.transform[:, 1], [-s, s], rtol=0, atol=1e-15)
    assert_allclose(basis.frequencies[1], np.sqrt(2.0), rtol=1e-15)


@pytest.mark.parametrize("n", [2, 3, 10, 101, 999])
def test_zero_mode_frequency_is_exactly_zero(n):
    basis = build_mode_basis(ChainParams(n_particles=n))
    assert basis.frequencies[0] == 0.0


@pytest.mark.parametrize("n", [2, 3, 10, 100, 1000])
def test_transform_is_orthogonal(n):
    basis = build_mode_basis(ChainParams(n_particles=n))
    Y = basis.transform
    residual = np.max(np.abs(Y.T @ Y - np.eye(n)))
    assert residual < 1e-10


def test_orthogonality_with_random_constants():
    rng = np.random.default_rng(11)
    params = ChainParams(n_particles=100, mass=rng.uniform(0.1, 5),
                         coupling=rng.uniform(0.1, 5), spacing=rng.uniform(0, 2))
    Y = build_mode_basis(params).transform
    assert np.max(np.abs(Y.T @ Y - np.eye(100))) < 1e-10


@pytest.mark.parametrize("n", [2, 5, 64, 301])
def test_frequencies_increase_and_stay_bounded(n):
    params = ChainParams(n_particles=n, mass=1.7, coupling=0.9)
    w = build_mode_basis(params).frequencies
    assert w[0] == 0.0
    assert np.all(np.diff(w) > 0)
    assert w[-1] < 2 * params.coupling / np.sqrt(params.mass)


def test_equilibrium_state_has_zero_energy():
    params = ChainParams(n_particles=9, spacing=0.7)
    state = PhaseState(equilibrium_positions(params), np.zeros(9))
    # squared roundoff of the rest positions is the only residual
    assert hamiltonian_cartesian(params, state) == pytest.approx(0.0, abs=1e-24)


def test_single_stretched_spring():
    params = ChainParams(n_particles=2, spacing=0.0, coupling=1.0)
    state = PhaseState([0.0, 1.0], [0.0, 0.0])
    assert hamiltonian_cartesian(params, state) == pytest.approx(0.5, rel=1e-15)


def test_dimension_mismatch_rejected():
    params = ChainParams(n_particles=4)
    basis = build_mode_basis(params)
    state = PhaseState(np.zeros(3), np.zeros(3))
    with pytest.raises(ValueError):
        hamiltonian_cartesian(params, state)
    with pytest.raises(ValueError):
        to_modes(params, basis, state)
    with pytest.raises(ValueError):
        hamiltonian_modes(params, basis, np.zeros(3), np.zeros(3))
    with pytest.raises(ValueError):
        PhaseState(np.zeros(4), np.zeros(3))


def test_mode_energy_matches_cartesian_energy():
    # one vectorized batch of 100 random states per chain size
    rng = np.random.default_rng(2)
    for n in range(2, 201):
        params = ChainParams(n_particles=n, mass=1.3, coupling=0.8, spacing=0.4)
        basis = build_mode_basis(params)
        Y = basis.transform
        w = basis.frequencies
        eq = equilibrium_positions(params)
        X = eq[:, None] + rng.normal(size=(n, 100))
        P = rng.normal(size=(n, 100))
        u = Y.T @ (X - eq[:, None])
        q = Y.T @ P
        h_cart = (P**2).sum(0) / (2 * params.mass) \
            + 0.5 * params.coupling**2 * ((np.diff(X, axis=0) - params.spacing) ** 2).sum(0)
        h_mode = (q**2).sum(0) / (2 * params.mass) \
            + 0.5 * params.mass * ((w[:, None] * u) ** 2).sum(0)
        assert np.max(np.abs(h_cart - h_mode) / (1 + np.abs(h_cart))) < 1e-10


def test_mode_energy_single_state_api():
    params = ChainParams(n_particles=12, mass=2.0, coupling=1.5, spacing=0.3)
    basis = build_mode_basis(params)
    rng = np.random.default_rng(3)
    state = PhaseState(rng.normal(size=12), rng.normal(size=12))
    u, q = to_modes(params, basis, state)
    hc = hamiltonian_cartesian(params, state)
    hm = hamiltonian_modes(params, basis, u, q)
    assert abs(hc - hm) / (1 + abs(hc)) < 1e-10


def test_zero_mode_term_is_free_kinetic_energy():
    # with only the m = 0 mode excited the energy is exactly q0^2 / 2 mu,
    # the center-of-mass kinetic term P^2/2M
    params = ChainParams(n_particles=7, mass=1.9)
    basis = build_mode_basis(params)
    u = np.zeros(7)
    q = np.zeros(7)
    u[0] = 3.7  # no potential term: omega_0 = 0 exactly
    q[0] = -1.2
    assert hamiltonian_modes(params, basis, u, q) == q[0] ** 2 / (2 * params.mass)


def test_zero_mode_carries_total_momentum():
    n = 5
    params = ChainParams(n_particles=n, mass=0.8)
    basis = build_mode_basis(params)
    p_bar = 0.6
    state = PhaseState(equilibrium_positions(params), np.full(n, p_bar))
    u, q = to_modes(params, basis, state)
    assert_allclose(q[0], np.sqrt(n) * p_bar, rtol=1e-14)
    assert_allclose(q[1:], 0.0, atol=1e-14)
    total_p = n * p_bar
    assert hamiltonian_modes(params, basis, u, q) == pytest.approx(
        total_p**2 / (2 * n * params.mass), rel=1e-14)


def test_uniform_translation_moves_only_the_zero_mode():
    n = 11
    params = ChainParams(n_particles=n, spacing=0.5)
    basis = build_mode_basis(params)
    c = 2.25
    state = PhaseState(equilibrium_positions(params) + c, np.zeros(n))
    u, q = to_modes(params, basis, state)
    assert_allclose(u[0], np.sqrt(n) * c, rtol=1e-13)
    assert_allclose(u[1:], 0.0, atol=1e-12)
    assert_allclose(q, 0.0, atol=0)


def test_equilibrium_maps_to_zero_modes():
    params = ChainParams(n_particles=6, spacing=1.3)
    basis = build_mode_basis(params)
    state = PhaseState(equilibrium_positions(params), np.zeros(6))
    u, q = to_modes(params, basis, state)
    assert_allclose(u, 0.0, atol=1e-13)
    assert_allclose(q, 0.0, atol=0)


def test_from_modes_zero_is_equilibrium():
    params = ChainParams(n_particles=6, spacing=1.3)
    basis = build_mode_basis(params)
    state = from_modes(params, basis, np.zeros(6), np.zeros(6))
    assert_allclose(state.positions, equilibrium_positions(params), rtol=0, atol=0)
    assert_allclose(state.momenta, 0.0, atol=0)


def test_from_modes_zero_mode_is_rigid_translation():
    n = 8
    params = ChainParams(n_particles=n, spacing=0.9)
    basis = build_mode_basis(params)
    u = np.zeros(n)
    u[0] = np.sqrt(n)  # center of mass shifted by exactly 1
    state = from_modes(params, basis, u, np.zeros(n))
    assert_allclose(state.positions, equilibrium_positions(params) + 1.0, rtol=1e-14)


@pytest.mark.parametrize("n", [2, 7, 40])
def test_round_trip_is_identity(n):
    params = ChainParams(n_particles=n, mass=1.1, coupling=2.0, spacing=0.25)
    basis = build_mode_basis(params)
    rng = np.random.default_rng(n)
    u = rng.normal(size=n)
    q = rng.normal(size=n)
    state = from_modes(params, basis, u, q)
    u2, q2 = to_modes(params, basis, state)
    assert np.max(np.abs(u2 - u)) < 1e-12
    assert np.max(np.abs(q2 - q)) < 1e-12


@settings(max_examples=25, deadline=None)
@given(n=st.integers(2, 30), seed=st.integers(0, 2**32 - 1))
def test_round_trip_property(n, seed):
    params = ChainParams(n_particles=n, spacing=0.5)
    basis = build_mode_basis(params)
    rng = np.random.default_rng(seed)
    state = PhaseState(rng.normal(scale=3.0, size=n), rng.normal(scale=3.0, size=n))
    u, q = to_modes(params, basis, state)
    back = from_modes(params, basis, u, q)
    assert np.max(np.abs(back.positions - state.positions)) < 1e-12
    assert np.max(np.abs(back.momenta - state.momenta)) < 1e-12


def test_energy_level_ground_state():
    params = ChainParams(n_particles=5)
    basis = build_mode_basis(params)
    assert energy_level(params, basis, [0, 0, 0, 0]) == 0.0


def test_energy_level_single_phonon_two_particles():
    params = ChainParams(n_particles=2, mass=1.0, coupling=1.0, hbar=1.0)
    basis = build_mode_basis(params)
    assert energy_level(params, basis, [1]) == pytest.approx(np.sqrt(2.0), rel=1e-15)


def test_energy_level_sums_frequencies():
    params = ChainParams(n_particles=4, hbar=0.5)
    basis = build_mode_basis(params)
    expected = 0.5 * basis.frequencies[1:].sum()
    assert energy_level(params, basis, [1, 1, 1]) == pytest.approx(expected, rel=1e-14)


def test_energy_level_rejects_bad_occupations():
    params = ChainParams(n_particles=4)
    basis = build_mode_basis(params)
    with pytest.raises(ValueError):
        energy_level(params, basis, [1, 1])
    with pytest.raises(ValueError):
        energy_level(params, basis, [1, -1, 0])
    with pytest.raises(ValueError):
        energy_level(params, basis, [0.5, 0.0, 0.0])
