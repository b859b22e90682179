"""Brute-force validation in truncated Fock space.

Every closed form in the thermodynamic modules has an independent check
here: mode coordinates are realized as ladder matrices
u = sqrt(hbar/2 mass omega) (a + a^T) on the lowest `cutoff` levels,
Gibbs weights are raw geometric factors, and occupation statistics can
also be drawn by Monte Carlo.  None of the validated closed forms
(partition function, mean occupation, <u^2>) appear below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chain import ChainParams, ModeBasis
from .errors import CutoffTooSmallError, ZeroModeError
from .length import length_expansion
from .thermo import MomentReport, ThermoState, make_report

#: occupation mass above the cutoff at which construction is refused
TAIL_MASS_LIMIT = 1e-6

#: how the Monte Carlo stream is produced, recorded in sample metadata
RNG_DESCRIPTION = "numpy PCG64 via default_rng(seed), inverse-CDF geometric draws"


@dataclass(frozen=True)
class TruncatedMode:
    """One oscillator mode truncated to `cutoff` Fock levels.

    u_matrix is the mode coordinate, rho the renormalized diagonal Gibbs
    state; tail_mass is the geometric occupation mass q^cutoff that was
    cut away (before renormalization).
    """

    cutoff: int
    u_matrix: np.ndarray
    rho: np.ndarray
    tail_mass: float
    lam: float
    omega: float
    mass: float
    hbar: float


def build_truncated_mode(lam: float, omega: float, mass: float, hbar: float,
                         cutoff: int) -> TruncatedMode:
    """Assemble ladder-operator u and the diagonal Gibbs state on d levels.

    Off-diagonal elements <nu|u|nu+1> = sqrt(hbar/2 mass omega) sqrt(nu+1);
    the diagonal vanishes.  Raises CutoffTooSmallError when the discarded
    occupation mass exceeds 1e-6.
    """
    if cutoff < 2 or int(cutoff) != cutoff:
        raise ValueError(f"cutoff must be an integer >= 2, got {cutoff}")
    if not lam > 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    if not omega > 0:
        raise ZeroModeError(f"omega must be positive, got {omega}")

    d = int(cutoff)
    q = math.exp(-lam * hbar * omega)
    tail = q**d
    if tail > TAIL_MASS_LIMIT:
        raise CutoffTooSmallError(
            f"tail mass {tail:.3e} above {TAIL_MASS_LIMIT:.0e} at cutoff {d}; "
            "raise the cutoff or lambda*hbar*omega"
        )

    scale = math.sqrt(hbar / (2.0 * mass * omega))
    u = np.zeros((d, d))
    steps = scale * np.sqrt(np.arange(1.0, d))
    idx = np.arange(d - 1)
    u[idx, idx + 1] = steps
    u[idx + 1, idx] = steps

    weights = q ** np.arange(d)
    rho = np.diag(weights / weights.sum())
    return TruncatedMode(cutoff=d, u_matrix=u, rho=rho, tail_mass=tail,
                         lam=lam, omega=omega, mass=mass, hbar=hbar)


def oracle_u2(mode: TruncatedMode) -> float:
    """Matrix-level Gibbs average of u^2: trace(rho u u)."""
    return float(np.trace(mode.rho @ mode.u_matrix @ mode.u_matrix).real)


def oracle_u_mean(mode: TruncatedMode) -> float:
    """Matrix-level Gibbs average of u; zero because u has no diagonal."""
    return float(np.trace(mode.rho @ mode.u_matrix).real)


def truncation_error_bound(mode: TruncatedMode) -> float:
    """Upper bound on |oracle_u2 - exact <u^2>| for this truncation.

    Three contributions: the dropped tail of the (2 nu + 1) moment, the
    renormalization shift of the kept weights, and the missing upward
    ladder step at the top level.  A floating-point floor of 2 d eps per
    unit value covers accumulation roundoff once the truncation terms
    underflow machine precision.
    """
    d = mode.cutoff
    q = math.exp(-mode.lam * mode.hbar * mode.omega)
    s2 = mode.hbar / (2.0 * mode.mass * mode.omega)
    p_kept = np.diag(mode.rho)
    m2_kept = float(np.sum((2.0 * np.arange(d) + 1.0) * p_kept))

    tail_moment = q**d * (2 * d + 1 + 2 * q / (1 - q))
    renorm_shift = q**d / (1 - q**d) * m2_kept
    top_defect = d * (1 - q) * q ** (d - 1) / (1 - q**d)
    roundoff = 2 * d * np.finfo(float).eps * m2_kept
    return float(s2 * (tail_moment + renorm_shift + top_defect + roundoff))


@dataclass(frozen=True)
class OccupationSample:
    """Monte Carlo occupation statistics for one mode.

    mean_u2 estimates <u^2> through the per-level identity
    (hbar/2 mass omega)(2 nu + 1).  Standard errors use the sample
    standard deviation; rng documents the generator and seeding scheme.
    """

    n_samples: int
    seed: int
    mean_occupation: float
    stderr_occupation: float
    mean_u2: float
    stderr_u2: float
    rng: str = RNG_DESCRIPTION


def mc_sample_occupations(lam: float, omega: float, mass: float, hbar: float,
                          n_samples: int, seed: int) -> OccupationSample:
    """Draw occupation numbers by inverse-CDF from the geometric law.

    nu = floor(log(1 - U)/log(q)) with U uniform on [0, 1) and
    q = exp(-lambda hbar omega).  Deterministic per seed.
    """
    if not lam > 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    if not omega > 0:
        raise ZeroModeError(f"omega must be positive, got {omega}")
    if n_samples < 1:
        raise ValueError(f"n_samples must be >= 1, got {n_samples}")

    log_q = -lam * hbar * omega
    rng = np.random.default_rng(seed)
    u = rng.random(n_samples)
    nu = np.floor(np.log1p(-u) / log_q)

    s2 = hbar / (2.0 * mass * omega)
    u2 = s2 * (2.0 * nu + 1.0)
    ddof = 1 if n_samples > 1 else 0
    root_n = math.sqrt(n_samples)
    return OccupationSample(
        n_samples=n_samples,
        seed=seed,
        mean_occupation=float(nu.mean()),
        stderr_occupation=float(nu.std(ddof=ddof) / root_n),
        mean_u2=float(u2.mean()),
        stderr_u2=float(u2.std(ddof=ddof) / root_n),
    )


def oracle_length_moments(params: ChainParams, basis: ModeBasis,
                          thermo: ThermoState, cutoff: int) -> MomentReport:
    """Length mean and variance assembled from truncated-mode matrices.

    Per-mode second moments come from trace(rho u u), never from the coth
    closed form; the modes are independent, so cross terms carry the exact
    factor trace(rho u) = 0 and the variance reduces to
    sum_m c_m^2 (<u_m^2> - <u_m>^2).  Restricted to N <= 12.
    """
    if params.n_particles > 12:
        raise ValueError("oracle length moments are limited to N <= 12")
    if thermo.n_particles != params.n_particles:
        raise ValueError("thermo state does not match params")

    expansion = length_expansion(params, basis)
    mean = expansion.constant
    variance = 0.0
    for j, c in enumerate(expansion.coefficients):
        omega = thermo.omegas[2 * j]  # internal-mode index of mode 2j+1
        mode = build_truncated_mode(thermo.lam, omega, params.mass, params.hbar, cutoff)
        first = oracle_u_mean(mode)
        mean += c * first
        variance += c * c * (oracle_u2(mode) - first * first)
    return make_report(float(mean), float(variance))
