import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from phonon_chain import (
    ChainParams,
    bound_function_f,
    build_mode_basis,
    from_modes,
    length_expansion,
    length_mean,
    length_variance_asymptotic,
    length_variance_exact,
    relative_std_asymptotic,
    scaling_sweep,
    thermo_state,
    variance_upper_bound,
)

# the asymptotic prefactor 12/pi^2 below comes from an upper-bound block
# construction; the exact sum converges to the smaller classical value
# (N-1)/(lambda kappa^2), so their large-N ratio is pi^2/12, not 1
EXACT_OVER_ASYMPTOTIC_VARIANCE = np.pi**2 / 12.0
EXACT_OVER_ASYMPTOTIC_REL_STD = np.pi / (2.0 * np.sqrt(3.0))


# ---------------------------------------------------------------------------
# expansion of x_N - x_1 over the modes

def test_two_particle_expansion_closed_form():
    params = ChainParams(n_particles=2, spacing=1.0)
    basis = build_mode_basis(params)
    exp = length_expansion(params, basis)
    assert exp.constant == pytest.approx(1.0, rel=0)
    assert len(exp.coefficients) == 1
    assert exp.coefficients[0] == pytest.approx(np.sqrt(2.0), rel=1e-14)


@pytest.mark.parametrize("n", [2, 3, 8, 33])
def test_expansion_at_rest_gives_mean_length(n):
    params = ChainParams(n_particles=n, spacing=0.7)
    basis = build_mode_basis(params)
    exp = length_expansion(params, basis)
    assert exp.apply(np.zeros(n)) == (n - 1) * 0.7


def test_even_mode_coefficients_vanish_exactly():
    for n in (2, 5, 12, 101):
        basis = build_mode_basis(ChainParams(n_particles=n))
        diff = basis.transform[-1] - basis.transform[0]
        assert np.all(diff[0::2] == 0.0)


def test_coefficients_match_closed_form():
    for n in (2, 7, 24, 255):
        params = ChainParams(n_particles=n)
        exp = length_expansion(params, build_mode_basis(params))
        j = np.arange(1, n // 2 + 1)
        closed = -np.sqrt(8.0 / n) * (-1.0) ** j * np.cos((2 * j - 1) * np.pi / (2 * n))
        assert np.max(np.abs(exp.coefficients - closed)) < 1e-12


@pytest.mark.parametrize("n", [2, 7, 16, 61])
def test_expansion_reproduces_end_to_end_distance(n):
    params = ChainParams(n_particles=n, spacing=0.31)
    basis = build_mode_basis(params)
    exp = length_expansion(params, basis)
    rng = np.random.default_rng(n)
    for _ in range(20):
        u = rng.normal(scale=2.0, size=n)
        state = from_modes(params, basis, u, np.zeros(n))
        direct = state.positions[-1] - state.positions[0]
        assert abs(exp.apply(u) - direct) < 1e-10


def test_expansion_rejects_wrong_length():
    params = ChainParams(n_particles=5)
    exp = length_expansion(params, build_mode_basis(params))
    with pytest.raises(ValueError):
        exp.apply(np.zeros(4))


# ---------------------------------------------------------------------------
# mean

def test_mean_two_particles():
    assert length_mean(ChainParams(n_particles=2, spacing=1.0)) == 1.0


def test_mean_direct_formula():
    assert length_mean(ChainParams(n_particles=101, spacing=0.3)) == 100 * 0.3


def test_mean_is_energy_independent():
    params = ChainParams(n_particles=9, spacing=0.55)
    basis = build_mode_basis(params)
    reports = [length_variance_exact(params, basis, thermo_state(lam, params, basis))
               for lam in (0.1, 1.0, 10.0)]
    assert reports[0].mean == reports[1].mean == reports[2].mean == 8 * 0.55


# ---------------------------------------------------------------------------
# exact variance

def test_two_particle_variance_reduced_mass_form():
    # the relative coordinate of two particles is an oscillator with
    # reduced mass mu/2 and frequency sqrt(2) kappa / sqrt(mu)
    params = ChainParams(n_particles=2, mass=1.3, coupling=0.9, spacing=1.0)
    basis = build_mode_basis(params)
    for lam in (0.2, 1.0, 5.0):
        ts = thermo_state(lam, params, basis)
        w1 = basis.frequencies[1]
        expected = (params.hbar / (params.mass * w1)) / math.tanh(
            lam * params.hbar * w1 / 2.0)
        report = length_variance_exact(params, basis, ts)
        assert report.variance == pytest.approx(expected, rel=1e-12)
        assert report.rel_std == pytest.approx(math.sqrt(expected), rel=1e-12)


def test_ground_state_limit_is_pure_zero_point():
    params = ChainParams(n_particles=10, mass=1.1, coupling=1.4)
    basis = build_mode_basis(params)
    ts = thermo_state(300.0, params, basis)
    m = np.arange(1, 6)
    arg = (2 * m - 1) * np.pi / 20.0
    zero_point = params.hbar / (2 * params.mass * basis.frequencies[2 * m - 1])
    expected = (8.0 / 10.0) * np.sum(np.cos(arg) ** 2 * zero_point)
    assert length_variance_exact(params, basis, ts).variance == pytest.approx(
        expected, rel=1e-12)


def test_variance_monotone_decreasing_in_lambda():
    params = ChainParams(n_particles=24)
    basis = build_mode_basis(params)
    variances = [length_variance_exact(params, basis,
                                       thermo_state(lam, params, basis)).variance
                 for lam in np.geomspace(0.05, 50, 30)]
    assert np.all(np.diff(variances) < 0)


def test_zero_spacing_flags_undefined_rel_std():
    params = ChainParams(n_particles=6, spacing=0.0)
    basis = build_mode_basis(params)
    report = length_variance_exact(params, basis, thermo_state(1.0, params, basis))
    assert report.mean == 0.0
    assert report.rel_std is None
    with pytest.raises(ValueError):
        relative_std_asymptotic(params, thermo_state(1.0, params, basis))


# ---------------------------------------------------------------------------
# asymptotic forms

def test_asymptotic_variance_formula():
    for n in (10, 64, 1000):
        params = ChainParams(n_particles=n, coupling=1.3)
        ts = thermo_state(0.7, params, build_mode_basis(params))
        assert length_variance_asymptotic(params, ts) == pytest.approx(
            12.0 * n / (np.pi**2 * 0.7 * 1.3**2), rel=1e-15)


def test_asymptotic_variance_linear_in_n():
    ts_small = thermo_state(1.0, ChainParams(n_particles=32),
                            build_mode_basis(ChainParams(n_particles=32)))
    v32 = length_variance_asymptotic(ChainParams(n_particles=32), ts_small)
    v64 = length_variance_asymptotic(ChainParams(n_particles=64), ts_small)
    assert v64 == pytest.approx(2 * v32, rel=1e-15)


def test_asymptotic_rel_std_inverse_sqrt_law():
    params4 = ChainParams(n_particles=400)
    params1 = ChainParams(n_particles=100)
    ts = thermo_state(1.0, params1, build_mode_basis(params1))
    assert relative_std_asymptotic(params4, ts) == pytest.approx(
        relative_std_asymptotic(params1, ts) / 2.0, rel=1e-14)


def test_asymptotic_rel_std_consistent_with_asymptotic_variance():
    # same algebra with N in place of N-1 in the mean
    for n in (12, 144):
        params = ChainParams(n_particles=n, coupling=0.8, spacing=0.6)
        ts = thermo_state(2.2, params, build_mode_basis(params))
        via_variance = math.sqrt(length_variance_asymptotic(params, ts)) / (
            n * params.spacing)
        assert relative_std_asymptotic(params, ts) == pytest.approx(
            via_variance, rel=1e-12)


@pytest.mark.xfail(strict=True,
                   reason="the large-N prefactor comes from an upper bound; the exact "
                          "variance converges to pi^2/12 of it, outside 10 percent")
def test_asymptotic_matches_exact_within_ten_percent():
    params = ChainParams(n_particles=2**16)
    basis = build_mode_basis(params)
    ts = thermo_state(1.0, params, basis)
    exact = length_variance_exact(params, basis, ts).variance
    asym = length_variance_asymptotic(params, ts)
    assert abs(asym - exact) / exact < 0.10


def test_exact_to_asymptotic_variance_ratio_converges():
    # the true limit of exact/asymptotic: the classical independent-spring
    # variance (N-1)/(lambda kappa^2) against 12N/(pi^2 lambda kappa^2)
    params = ChainParams(n_particles=2**16)
    basis = build_mode_basis(params)
    for lam in (0.5, 1.0, 2.0):
        ts = thermo_state(lam, params, basis)
        ratio = length_variance_exact(params, basis, ts).variance / \
            length_variance_asymptotic(params, ts)
        assert ratio == pytest.approx(EXACT_OVER_ASYMPTOTIC_VARIANCE, rel=2e-4)


def test_classical_limit_matches_independent_springs():
    # high temperature: each of the N-1 springs contributes 1/(lambda kappa^2)
    params = ChainParams(n_particles=37, coupling=1.7)
    basis = build_mode_basis(params)
    lam = 1e-6
    variance = length_variance_exact(params, basis,
                                     thermo_state(lam, params, basis)).variance
    assert variance == pytest.approx(36.0 / (lam * params.coupling**2), rel=1e-6)


# ---------------------------------------------------------------------------
# envelope function f and the variance bound

def test_f_tends_to_zero_at_right_edge():
    assert bound_function_f(1.0 - 1e-12, 2.0) < 1e-5


def test_f_small_x_divergence():
    gamma, x = 2.0, 1e-3
    assert bound_function_f(x, gamma) == pytest.approx(2.0 / (gamma * x * x), rel=5e-3)


@pytest.mark.parametrize("gamma", [0.5, 2.0, 10.0])
def test_f_is_decreasing(gamma):
    assert bound_function_f(0.2, gamma) > bound_function_f(0.5, gamma) \
        > bound_function_f(0.8, gamma)


def test_f_rejects_out_of_domain_points():
    for x in (-0.5, 0.0, 1.0, 1.5):
        with pytest.raises(ValueError):
            bound_function_f(x, 1.0)
    with pytest.raises(ValueError):
        bound_function_f(0.5, 0.0)


@pytest.mark.parametrize("n", [2, 4, 16, 64, 1024])
@pytest.mark.parametrize("lam", [0.25, 1.0, 5.0])
def test_exact_variance_below_envelope(n, lam):
    params = ChainParams(n_particles=n, mass=1.2, coupling=0.9)
    basis = build_mode_basis(params)
    ts = thermo_state(lam, params, basis)
    exact = length_variance_exact(params, basis, ts).variance
    assert exact <= variance_upper_bound(params, ts)


# ---------------------------------------------------------------------------
# scaling sweep

def test_sweep_rows_and_fit():
    params = ChainParams(n_particles=2)
    result = scaling_sweep(params, 1.0, [2**k for k in range(6, 17)])
    assert [r.n_particles for r in result.rows] == [2**k for k in range(6, 17)]
    for row in result.rows:
        assert row.mean_length == (row.n_particles - 1) * 1.0
        assert row.variance_exact > 0
    assert abs(result.slope + 0.5) < 0.02


@pytest.mark.xfail(strict=True,
                   reason="rel_std_exact/rel_std_asymptotic converges to pi/(2 sqrt(3)) "
                          "~ 0.907, outside the 5 percent band around 1")
def test_sweep_ratio_near_one():
    result = scaling_sweep(ChainParams(n_particles=2), 1.0,
                           [2**k for k in range(6, 17)])
    assert abs(result.rel_std_ratio - 1.0) < 0.05


def test_sweep_ratio_converges_to_bound_constant():
    result = scaling_sweep(ChainParams(n_particles=2), 1.0, [2**14, 2**16])
    assert result.rel_std_ratio == pytest.approx(EXACT_OVER_ASYMPTOTIC_REL_STD,
                                                 rel=1e-3)


def test_sweep_rows_sorted_even_for_shuffled_input():
    result = scaling_sweep(ChainParams(n_particles=2), 2.0, [512, 64, 128])
    assert [r.n_particles for r in result.rows] == [64, 128, 512]


def test_sweep_parallel_matches_serial():
    ns = [64, 128, 256]
    serial = scaling_sweep(ChainParams(n_particles=2), 1.5, ns, parallel=False)
    parallel = scaling_sweep(ChainParams(n_particles=2), 1.5, ns, parallel=True)
    for a, b in zip(serial.rows, parallel.rows):
        assert a == b
    assert serial.slope == parallel.slope


def test_sweep_input_validation():
    params = ChainParams(n_particles=2)
    with pytest.raises(ValueError):
        scaling_sweep(params, 1.0, [])
    with pytest.raises(ValueError):
        scaling_sweep(params, -1.0, [8])
    with pytest.raises(ValueError):
        scaling_sweep(params, 1.0, [1, 8])
    with pytest.raises(ValueError):
        scaling_sweep(ChainParams(n_particles=2, spacing=0.0), 1.0, [8])
