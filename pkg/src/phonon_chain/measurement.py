"""Finite-dimensional state operators, premeasurement, and registration statistics.

A DensityMatrix is just the operator: positive, self-adjoint, unit trace.
A Decomposition additionally records how a mixture was prepared (weights
and component vectors).  The two are kept as separate types on purpose:
tracing out a subsystem yields a DensityMatrix with no preparation record
attached, while a proper mixture remembers its decomposition even though
no registration statistics can recover it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DistinctOperatorsError

HERMITIAN_TOL = 1e-12   # algebraic identities
SPECTRAL_TOL = 1e-10    # eigenvalue and effect checks


def _as_square_complex(matrix) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def hermitian_deviation(matrix) -> float:
    """Largest entry of |M - M^dagger|."""
    m = _as_square_complex(matrix)
    return float(np.max(np.abs(m - m.conj().T)))


@dataclass(frozen=True)
class DensityMatrix:
    """State operator: Hermitian, unit trace, positive semidefinite."""

    matrix: np.ndarray

    def __post_init__(self):
        m = _as_square_complex(self.matrix)
        if hermitian_deviation(m) > HERMITIAN_TOL:
            raise ValueError("matrix is not Hermitian within 1e-12")
        tr = np.trace(m).real
        if abs(tr - 1.0) > HERMITIAN_TOL:
            raise ValueError(f"trace must be 1 within 1e-12, got {tr}")
        if np.linalg.eigvalsh(m)[0] < -SPECTRAL_TOL:
            raise ValueError("matrix has an eigenvalue below -1e-10")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class Decomposition:
    """Preparation record of a proper mixture: weights c_k and unit vectors.

    The vectors need not be orthogonal; the weights are positive and sum
    to one.
    """

    weights: np.ndarray
    states: np.ndarray  # shape (k, d), one unit vector per row

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        s = np.asarray(self.states, dtype=complex)
        if w.ndim != 1 or s.ndim != 2 or len(w) != len(s):
            raise ValueError("need one weight per state vector")
        if np.any(w <= 0) or np.any(w > 1):
            raise ValueError("weights must lie in (0, 1]")
        if abs(w.sum() - 1.0) > HERMITIAN_TOL:
            raise ValueError(f"weights must sum to 1 within 1e-12, got {w.sum()}")
        norms = np.linalg.norm(s, axis=1)
        if np.max(np.abs(norms - 1.0)) > HERMITIAN_TOL:
            raise ValueError("state vectors must be normalized within 1e-12")
        w.setflags(write=False)
        s.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "states", s)

    @property
    def dim(self) -> int:
        return self.states.shape[1]


def proper_mixture(decomp: Decomposition) -> DensityMatrix:
    """Forget the preparation: sum_k c_k |k><k| as a bare state operator."""
    rho = np.einsum("k,ki,kj->ij", decomp.weights, decomp.states, decomp.states.conj())
    return DensityMatrix(rho)


def density_from_vector(psi) -> DensityMatrix:
    """Pure-state operator |psi><psi| for a normalized vector."""
    v = np.asarray(psi, dtype=complex).ravel()
    if abs(np.linalg.norm(v) - 1.0) > HERMITIAN_TOL:
        raise ValueError("vector must be normalized within 1e-12")
    return DensityMatrix(np.outer(v, v.conj()))


def premeasurement(amplitudes, dim_system: int, dim_apparatus: int) -> np.ndarray:
    """Entangled system-apparatus vector sum_k c_k |a_k> x |A_k|>.

    Both eigenbases are the standard basis, so the joint vector of length
    dim_system * dim_apparatus has c_k at index k * dim_apparatus + k.
    """
    c = np.asarray(amplitudes, dtype=complex).ravel()
    if abs(np.sum(np.abs(c) ** 2) - 1.0) > HERMITIAN_TOL:
        raise ValueError("amplitudes must satisfy sum |c_k|^2 = 1 within 1e-12")
    if len(c) > min(dim_system, dim_apparatus):
        raise ValueError(
            f"{len(c)} outcomes do not fit in dimensions {dim_system} x {dim_apparatus}"
        )
    joint = np.zeros(dim_system * dim_apparatus, dtype=complex)
    k = np.arange(len(c))
    joint[k * dim_apparatus + k] = c
    return joint


def partial_trace(joint: DensityMatrix, dims, keep: int) -> DensityMatrix:
    """Trace out one tensor factor of a bipartite state.

    dims = (d_first, d_second) must factor the joint dimension; keep selects
    the surviving factor (0 or 1).  The result carries no decomposition
    record: it is a state operator and nothing more.
    """
    d1, d2 = int(dims[0]), int(dims[1])
    if d1 * d2 != joint.dim:
        raise ValueError(f"dims {dims} do not factor dimension {joint.dim}")
    if keep not in (0, 1):
        raise ValueError("keep must be 0 (first factor) or 1 (second factor)")
    blocks = joint.matrix.reshape(d1, d2, d1, d2)
    reduced = np.trace(blocks, axis1=1, axis2=3) if keep == 0 else \
        np.trace(blocks, axis1=0, axis2=2)
    return DensityMatrix(reduced)


def registration_probabilities(rho: DensityMatrix, effects) -> np.ndarray:
    """Outcome probabilities Tr(rho E_i) for a positive decomposition of identity."""
    mats = [_as_square_complex(e) for e in effects]
    if not mats:
        raise ValueError("invalid effects: empty set")
    d = rho.dim
    for e in mats:
        if e.shape != (d, d):
            raise ValueError(f"invalid effects: expected shape {(d, d)}, got {e.shape}")
        if hermitian_deviation(e) > SPECTRAL_TOL:
            raise ValueError("invalid effects: not Hermitian within 1e-10")
        if np.linalg.eigvalsh(e)[0] < -SPECTRAL_TOL:
            raise ValueError("invalid effects: eigenvalue below -1e-10")
    total = sum(mats)
    if np.max(np.abs(total - np.eye(d))) > SPECTRAL_TOL:
        raise ValueError("invalid effects: do not sum to the identity within 1e-10")

    probs = np.array([np.trace(rho.matrix @ e).real for e in mats])
    if np.min(probs) < -SPECTRAL_TOL:
        raise ValueError("registration produced a probability below -1e-10")
    return np.clip(probs, 0.0, None)


def random_effect_set(dim: int, n_outcomes: int, rng: np.random.Generator):
    """Generic registration: random PSD matrices normalized against their sum.

    A_i = G_i G_i^dagger from complex Gaussian G_i, then
    E_i = S^(-1/2) A_i S^(-1/2) with S = sum A_i, so the E_i sum to the
    identity by construction.
    """
    raw = []
    for _ in range(n_outcomes):
        g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        raw.append(g @ g.conj().T)
    total = sum(raw)
    vals, vecs = np.linalg.eigh(total)
    inv_sqrt = (vecs * (1.0 / np.sqrt(vals))) @ vecs.conj().T
    return [inv_sqrt @ a @ inv_sqrt for a in raw]


@dataclass(frozen=True)
class IndistinguishabilityReport:
    """Outcome of comparing two decompositions over random registrations."""

    trials: int
    seed: int
    max_deviation: float
    operator_deviation: float  # max-norm distance of the two state operators


def decompositions_indistinguishable(d1: Decomposition, d2: Decomposition,
                                     trials: int, seed: int) -> IndistinguishabilityReport:
    """Compare registration statistics of two decompositions of one operator.

    Requires the two mixtures to agree as operators within 1e-10 in
    max-norm (otherwise they are trivially distinguishable and the check
    does not apply).  Each trial draws a random effect set and records the
    largest probability difference.
    """
    if d1.dim != d2.dim:
        raise DistinctOperatorsError("decompositions act on different dimensions")
    rho1 = proper_mixture(d1)
    rho2 = proper_mixture(d2)
    op_dev = float(np.max(np.abs(rho1.matrix - rho2.matrix)))
    if op_dev > SPECTRAL_TOL:
        raise DistinctOperatorsError(
            f"state operators differ by {op_dev:.3e} in max-norm; "
            "distinct operators are distinguishable"
        )
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        n_outcomes = int(rng.integers(2, d1.dim + 2))
        effects = random_effect_set(d1.dim, n_outcomes, rng)
        p1 = registration_probabilities(rho1, effects)
        p2 = registration_probabilities(rho2, effects)
        worst = max(worst, float(np.max(np.abs(p1 - p2))))
    return IndistinguishabilityReport(trials=trials, seed=seed,
                                      max_deviation=worst, operator_deviation=op_dev)


def evolve_proper_mixture(decomp: Decomposition, unitary) -> Decomposition:
    """Evolve a proper mixture: same weights, each component mapped by U."""
    u = _as_square_complex(unitary)
    if u.shape != (decomp.dim, decomp.dim):
        raise ValueError(f"unitary shape {u.shape} does not match dimension {decomp.dim}")
    if np.max(np.abs(u.conj().T @ u - np.eye(decomp.dim))) > SPECTRAL_TOL:
        raise ValueError("matrix is not unitary within 1e-10")
    return Decomposition(weights=decomp.weights.copy(),
                         states=decomp.states @ u.T)


def eigen_decomposition(rho: DensityMatrix, weight_floor: float = 1e-12) -> Decomposition:
    """Orthogonal decomposition of a state operator from its spectrum.

    Eigenvalues below weight_floor are dropped and the rest renormalized,
    so the weights satisfy the (0, 1] contract.
    """
    vals, vecs = np.linalg.eigh(rho.matrix)
    keep = vals > weight_floor
    w = vals[keep]
    return Decomposition(weights=w / w.sum(), states=vecs[:, keep].T)


def random_equivalent_decomposition(rho: DensityMatrix, n_states: int,
                                    rng: np.random.Generator) -> Decomposition:
    """A different preparation of the same operator.

    Mixes the spectral decomposition through the first columns of a Haar
    unitary: |phi_j> proportional to sum_k V_jk sqrt(p_k) |k>, with weights
    |sum_k V_jk sqrt(p_k)|^2.  n_states must be at least the operator rank.
    """
    vals, vecs = np.linalg.eigh(rho.matrix)
    keep = vals > 1e-12
    p = vals[keep]
    basis = vecs[:, keep]
    rank = len(p)
    if n_states < rank:
        raise ValueError(f"need at least rank = {rank} states, got {n_states}")
    g = rng.normal(size=(n_states, n_states)) + 1j * rng.normal(size=(n_states, n_states))
    v, _ = np.linalg.qr(g)
    unnormalized = (v[:, :rank] * np.sqrt(p)) @ basis.T  # row j is the j-th vector
    weights = np.linalg.norm(unnormalized, axis=1) ** 2
    states = unnormalized / np.sqrt(weights)[:, None]
    return Decomposition(weights=weights / weights.sum(), states=states)
