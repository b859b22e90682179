"""Open harmonic chain: Hamiltonian, normal-mode transform, spectrum.

The model is a line of N identical particles of mass mu coupled to their
nearest neighbours by springs of strength kappa^2 and natural length xi:

    H = (1/2mu) sum_n p_n^2 + (kappa^2/2) sum_{n=2..N} (x_n - x_{n-1} - xi)^2

The chain is free to translate as a whole.  An orthogonal transform Y maps
particle coordinates to mode coordinates (u, q); mode m = 0 is the
center of mass, modes m = 1..N-1 are internal oscillators with

    omega_m = (2 kappa / sqrt(mu)) sin(m pi / 2N).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np


@dataclass(frozen=True)
class ChainParams:
    """Structural constants of the chain.

    n_particles: number of particles N, at least 2.
    mass: particle mass mu.
    coupling: spring strength kappa; kappa^2 (delta x)^2 is an energy, so
        kappa carries units sqrt(energy)/length.
    spacing: equilibrium inter-particle distance xi (may be zero).
    hbar: quantum of action, default 1 (natural units).
    """

    n_particles: int
    mass: float = 1.0
    coupling: float = 1.0
    spacing: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if int(self.n_particles) != self.n_particles or self.n_particles < 2:
            raise ValueError(
                f"n_particles must be an integer >= 2, got {self.n_particles}; "
                "a single particle has no internal structure"
            )
        if not self.mass > 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if not self.coupling > 0:
            raise ValueError(f"coupling must be positive, got {self.coupling}")
        if self.spacing < 0:
            raise ValueError(f"spacing must be nonnegative, got {self.spacing}")
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")


@dataclass(frozen=True)
class PhaseState:
    """Classical phase-space point: positions x_1..x_N and momenta p_1..p_N."""

    positions: np.ndarray
    momenta: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.positions, dtype=float)
        p = np.asarray(self.momenta, dtype=float)
        if x.ndim != 1 or p.ndim != 1 or x.shape != p.shape:
            raise ValueError("positions and momenta must be 1-d arrays of equal length")
        object.__setattr__(self, "positions", x)
        object.__setattr__(self, "momenta", p)


class ModeBasis:
    """Normal-mode data for a chain: frequencies plus the orthogonal transform.

    Frequencies are computed eagerly (O(N)).  The N x N transform matrix is
    built lazily on first access: the thermodynamic paths only ever need the
    frequencies, and at sweep scale (N ~ 1e5) the matrix would not fit in
    memory.
    """

    def __init__(self, params: ChainParams):
        self.params = params
        self.frequencies = _mode_frequencies(params)
        self.frequencies.setflags(write=False)

    @property
    def n_particles(self) -> int:
        return self.params.n_particles

    @cached_property
    def transform(self) -> np.ndarray:
        """Orthogonal matrix Y, row = particle (n = 1..N), column = mode (m = 0..N-1)."""
        Y = _mode_transform(self.params.n_particles)
        Y.setflags(write=False)
        return Y

    def __repr__(self):
        return f"ModeBasis(n_particles={self.n_particles})"


def _mode_frequencies(params: ChainParams) -> np.ndarray:
    N = params.n_particles
    m = np.arange(N)
    # argument assembled in one expression: pi*m/(2N) stays accurate at large N
    return (2.0 * params.coupling / np.sqrt(params.mass)) * np.sin(np.pi * m / (2.0 * N))


def _mode_transform(N: int) -> np.ndarray:
    n = np.arange(1, N + 1)[:, None]  # particle index, rows
    m = np.arange(N)[None, :]         # mode index, columns
    # (pi m / N)(n - (N+1)/2) = pi * m(2n - N - 1) / (2N); the integer
    # m(2n - N - 1) is exact, so mirrored particles get exactly opposite args
    arg = np.pi * (m * (2 * n - N - 1)) / (2.0 * N)
    Y = np.empty((N, N))
    Y[:, 0::2] = np.cos(arg[:, 0::2])
    Y[:, 1::2] = np.sin(arg[:, 1::2])
    amp = np.full(N, np.sqrt(2.0 / N))
    amp[0] = 1.0 / np.sqrt(N)
    Y *= amp
    return Y


def build_mode_basis(params: ChainParams) -> ModeBasis:
    """Build the normal-mode basis: transform Y and frequencies omega_0..omega_{N-1}.

    Column m = 0 is the uniform center-of-mass vector with amplitude 1/sqrt(N);
    even m > 0 are cosine-type rows, odd m sine-type, both with amplitude
    sqrt(2/N).  omega_0 = 0 exactly; the internal frequencies increase
    strictly and stay below 2 kappa / sqrt(mu).
    """
    return ModeBasis(params)


def equilibrium_positions(params: ChainParams) -> np.ndarray:
    """Rest positions (n - (N+1)/2) xi, centered on the origin."""
    N = params.n_particles
    return (np.arange(1, N + 1) - (N + 1) / 2.0) * params.spacing


def _check_dimension(params: ChainParams, *arrays) -> None:
    for a in arrays:
        if len(a) != params.n_particles:
            raise ValueError(
                f"dimension mismatch: expected length {params.n_particles}, got {len(a)}"
            )


def hamiltonian_cartesian(params: ChainParams, state: PhaseState) -> float:
    """Chain energy in particle coordinates.

    (1/2mu) sum p_n^2 + (kappa^2/2) sum_{n>=2} (x_n - x_{n-1} - xi)^2.
    """
    _check_dimension(params, state.positions, state.momenta)
    kinetic = np.sum(state.momenta**2) / (2.0 * params.mass)
    stretch = np.diff(state.positions) - params.spacing
    return float(kinetic + 0.5 * params.coupling**2 * np.sum(stretch**2))


def to_modes(params: ChainParams, basis: ModeBasis, state: PhaseState):
    """Project a phase state onto mode coordinates: u = Y^T (x - eq), q = Y^T p."""
    _check_dimension(params, state.positions, state.momenta)
    if basis.n_particles != params.n_particles:
        raise ValueError("basis does not match params")
    Y = basis.transform
    u = Y.T @ (state.positions - equilibrium_positions(params))
    q = Y.T @ state.momenta
    return u, q


def from_modes(params: ChainParams, basis: ModeBasis, u, q) -> PhaseState:
    """Rebuild particle coordinates from modes: x = Y u + eq, p = Y q."""
    u = np.asarray(u, dtype=float)
    q = np.asarray(q, dtype=float)
    _check_dimension(params, u, q)
    if basis.n_particles != params.n_particles:
        raise ValueError("basis does not match params")
    Y = basis.transform
    return PhaseState(Y @ u + equilibrium_positions(params), Y @ q)


def hamiltonian_modes(params: ChainParams, basis: ModeBasis, u, q) -> float:
    """Chain energy in mode coordinates: (1/2mu) sum q_m^2 + (mu/2) sum omega_m^2 u_m^2.

    The m = 0 term has no potential part (omega_0 = 0), leaving the free
    center-of-mass kinetic energy P^2/2M with q_0 = P/sqrt(N) and M = N mu.
    """
    u = np.asarray(u, dtype=float)
    q = np.asarray(q, dtype=float)
    _check_dimension(params, u, q)
    w = basis.frequencies
    kinetic = np.sum(q**2) / (2.0 * params.mass)
    potential = 0.5 * params.mass * np.sum((w * u) ** 2)
    return float(kinetic + potential)


def energy_level(params: ChainParams, basis: ModeBasis, occupations) -> float:
    """Spectrum value sum_m nu_m hbar omega_m for phonon occupation numbers nu_1..nu_{N-1}.

    The center-of-mass mode is excluded and no zero-point offset is added;
    the level with all nu_m = 0 has energy exactly 0.
    """
    nu = np.asarray(occupations)
    if nu.shape != (params.n_particles - 1,):
        raise ValueError(
            f"occupations must have length N-1 = {params.n_particles - 1}, got {nu.shape}"
        )
    if not np.issubdtype(nu.dtype, np.integer) or np.any(nu < 0):
        raise ValueError("occupations must be nonnegative integers")
    return float(params.hbar * np.sum(nu * basis.frequencies[1:]))
