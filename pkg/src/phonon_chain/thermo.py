"""Per-mode Gibbs statistics and whole-chain thermodynamics.

Each internal mode m is an oscillator whose occupation number follows the
geometric law p_nu = Z^-1 exp(-lambda hbar omega nu) with partition function
Z = 1/(1 - exp(-lambda hbar omega)).  The Lagrange multiplier lambda fixes
the mean internal energy; its inverse plays the role of temperature.

Everything is expressed through q = exp(-lambda hbar omega) and
1 - q = -expm1(-lambda hbar omega), which keeps full precision at both the
classical (lambda -> 0) and ground-state (lambda -> inf) ends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .chain import ChainParams, ModeBasis
from .errors import ConvergenceError, ZeroModeError

#: relative residual at which the energy inversion stops
LAMBDA_SOLVE_RTOL = 1e-10
#: iteration budget for bracketing plus bisection (diagnostic, never reached)
LAMBDA_SOLVE_MAX_ITER = 200


@dataclass(frozen=True)
class MomentReport:
    """Mean, variance and relative spread of an observable in a state.

    rel_std is sqrt(variance)/|mean|; it is None when the mean vanishes
    and the ratio is undefined.
    """

    mean: float
    variance: float
    rel_std: Optional[float]

    def __post_init__(self):
        if self.variance < 0:
            raise ValueError(f"variance must be nonnegative, got {self.variance}")


def make_report(mean: float, variance: float) -> MomentReport:
    rel = math.sqrt(variance) / abs(mean) if mean != 0.0 else None
    return MomentReport(mean=mean, variance=variance, rel_std=rel)


@dataclass(frozen=True)
class ThermoState:
    """Gibbs data of the internal modes at a given Lagrange multiplier.

    Arrays run over the internal modes m = 1..N-1 (index 0 is mode 1).
    gamma = 2 hbar kappa lambda / sqrt(mu) is the dimensionless coupling
    between the multiplier and the spectrum.
    """

    lam: float
    internal_energy: float
    gamma: float
    omegas: np.ndarray      # mode frequencies omega_1..omega_{N-1}
    partition: np.ndarray   # Z_m
    occupation: np.ndarray  # mean occupation n_m
    u2_mean: np.ndarray     # <u_m^2>

    @property
    def n_particles(self) -> int:
        return len(self.omegas) + 1


def _check_mode_args(lam: float, omega: float) -> None:
    if not lam > 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    if not omega > 0:
        raise ZeroModeError(
            f"omega must be positive, got {omega}; the zero mode carries no Gibbs factor"
        )


def partition_fn_mode(lam: float, omega: float, hbar: float = 1.0) -> float:
    """Single-mode partition function Z = 1/(1 - exp(-lambda hbar omega))."""
    _check_mode_args(lam, omega)
    return float(1.0 / -np.expm1(-lam * hbar * omega))


def occupation_prob(lam: float, omega: float, hbar: float, nu: int) -> float:
    """Probability of occupation nu: (1 - q) q^nu with q = exp(-lambda hbar omega)."""
    _check_mode_args(lam, omega)
    if int(nu) != nu or nu < 0:
        raise ValueError(f"nu must be a nonnegative integer, got {nu}")
    x = lam * hbar * omega
    return float(-np.expm1(-x) * np.exp(-x * nu))


def mean_occupation(lam: float, omega: float, hbar: float = 1.0) -> float:
    """Mean occupation q/(1 - q), the Planck form 1/(exp(lambda hbar omega) - 1)."""
    _check_mode_args(lam, omega)
    x = lam * hbar * omega
    return float(np.exp(-x) / -np.expm1(-x))


def mode_u_mean(lam: float, omega: float, mass: float, hbar: float = 1.0) -> float:
    """Gibbs mean of the mode coordinate; vanishes identically."""
    _check_mode_args(lam, omega)
    return 0.0


def mode_u2_mean(lam: float, omega: float, mass: float, hbar: float = 1.0) -> float:
    """Gibbs mean of u^2 for one mode.

    (hbar / 2 mass omega) (1 + q)/(1 - q), which equals
    (hbar / 2 mass omega) (2 n + 1) and tends to the ground-state width
    hbar / 2 mass omega as lambda -> inf.
    """
    _check_mode_args(lam, omega)
    x = lam * hbar * omega
    q = np.exp(-x)
    return float(hbar / (2.0 * mass * omega) * (1.0 + q) / -np.expm1(-x))


def fock_cutoff(lam: float, omega: float, hbar: float = 1.0,
                tail: float = 1e-12, cap: int = 10**6) -> int:
    """Smallest level nu* whose geometric tail mass q^(nu*+1) drops below `tail`.

    Deterministic truncation rule for occupation sums; capped at `cap`.
    """
    _check_mode_args(lam, omega)
    if not 0 < tail < 1:
        raise ValueError("tail target must lie in (0, 1)")
    x = lam * hbar * omega
    # q^(nu+1) < tail  <=>  nu + 1 > ln(tail)/ln(q) = -ln(tail)/x
    nu_star = math.floor(-math.log(tail) / x)
    return min(max(nu_star, 1), cap)


def internal_energy(lam: float, params: ChainParams, basis: ModeBasis) -> float:
    """Mean internal energy sum_m hbar omega_m n_m over the N-1 internal modes.

    Strictly decreasing in lambda; tends to 0 as lambda -> inf and to the
    equipartition value (N-1)/lambda as lambda -> 0.
    """
    if not lam > 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    w = basis.frequencies[1:]
    x = lam * params.hbar * w
    n = np.exp(-x) / -np.expm1(-x)
    return float(params.hbar * np.sum(w * n))


def thermo_state(lam: float, params: ChainParams, basis: ModeBasis) -> ThermoState:
    """Assemble the full per-mode Gibbs record at a given lambda."""
    if not lam > 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    w = basis.frequencies[1:].copy()
    hbar, mass = params.hbar, params.mass
    x = lam * hbar * w
    q = np.exp(-x)
    one_minus_q = -np.expm1(-x)
    Z = 1.0 / one_minus_q
    n = q / one_minus_q
    u2 = hbar / (2.0 * mass * w) * (1.0 + q) / one_minus_q
    gamma = 2.0 * hbar * params.coupling * lam / np.sqrt(mass)
    energy = float(hbar * np.sum(w * n))
    for a in (w, Z, n, u2):
        a.setflags(write=False)
    return ThermoState(lam=lam, internal_energy=energy, gamma=float(gamma),
                       omegas=w, partition=Z, occupation=n, u2_mean=u2)


def solve_lambda(target_energy: float, params: ChainParams, basis: ModeBasis) -> ThermoState:
    """Invert the energy map: find lambda with E(lambda) = target_energy.

    Bracketing bisection on the strictly monotone map, starting from the
    equipartition guess lambda = (N-1)/E.  Stops when the relative energy
    residual falls below 1e-10.
    """
    if not target_energy > 0:
        raise ValueError(f"target energy must be positive, got {target_energy}")

    rtol = LAMBDA_SOLVE_RTOL
    budget = LAMBDA_SOLVE_MAX_ITER

    def energy_at(lam):
        nonlocal budget
        budget -= 1
        if budget < 0:
            raise ConvergenceError(
                f"energy inversion did not reach relative residual {rtol} "
                f"within {LAMBDA_SOLVE_MAX_ITER} evaluations"
            )
        return internal_energy(lam, params, basis)

    lam = (params.n_particles - 1) / target_energy
    e = energy_at(lam)
    # grow or shrink lambda until the target is enclosed; E is decreasing,
    # so the bracket keeps E(lo) >= target >= E(hi)
    if e >= target_energy:
        lo, hi = lam, 2.0 * lam
        lam = hi
        while (e := energy_at(lam)) > target_energy:
            lo, hi = lam, 2.0 * lam
            lam = hi
    else:
        lo, hi = 0.5 * lam, lam
        lam = lo
        while (e := energy_at(lam)) < target_energy:
            lo, hi = 0.5 * lam, lam
            lam = lo

    while abs(e - target_energy) > rtol * target_energy:
        lam = 0.5 * (lo + hi)
        e = energy_at(lam)
        if e > target_energy:
            lo = lam
        else:
            hi = lam
    return thermo_state(lam, params, basis)


def entropy(thermo: ThermoState) -> float:
    """Entropy of the internal Gibbs state: lambda E + sum_m ln Z_m.

    Nonnegative; tends to 0 as lambda -> inf (pure ground state).
    """
    return float(thermo.lam * thermo.internal_energy + np.sum(np.log(thermo.partition)))
