"""Classical-state coordinates of quantum states and their equivalence classes.

A classical state is specified by target averages A_k and spreads dA_k of a
chosen family of observables.  The quantum counterpart is the set of all
state operators reproducing those coordinates; membership is checked with
explicit tolerances because exact equality of reals is not testable.  The
relation "same coordinates" is reflexive and symmetric; transitivity only
holds up to tolerance accumulation and is not asserted anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .measurement import (
    DensityMatrix,
    HERMITIAN_TOL,
    density_from_vector,
    hermitian_deviation,
    _as_square_complex,
)

DEFAULT_TOL_MEAN = 1e-8
DEFAULT_TOL_SPREAD = 1e-8

#: variance this far below zero is treated as roundoff and clamped
_VARIANCE_CLAMP = 1e-10


def _check_observables(observables, dim=None):
    mats = [_as_square_complex(a) for a in observables]
    if not mats:
        raise ValueError("need at least one observable")
    for a in mats:
        if hermitian_deviation(a) > HERMITIAN_TOL:
            raise ValueError("observables must be Hermitian within 1e-12")
        if dim is not None and a.shape != (dim, dim):
            raise ValueError(f"observable shape {a.shape} does not match dimension {dim}")
    return mats


def classical_coordinates(rho: DensityMatrix, observables) -> Tuple[np.ndarray, np.ndarray]:
    """Means Tr(rho a_k) and spreads sqrt(Tr(rho a_k^2) - Tr(rho a_k)^2).

    The variance is evaluated in the shifted form Tr(rho (a - mean)^2),
    which is the same quantity but does not lose near-zero spreads to
    cancellation.
    """
    mats = _check_observables(observables, rho.dim)
    means = np.empty(len(mats))
    spreads = np.empty(len(mats))
    eye = np.eye(rho.dim)
    for i, a in enumerate(mats):
        mean = np.trace(rho.matrix @ a).real
        shifted = a - mean * eye
        variance = np.trace(rho.matrix @ shifted @ shifted).real
        if variance < -_VARIANCE_CLAMP:
            raise ValueError(f"variance {variance} below the -1e-10 roundoff clamp")
        means[i] = mean
        spreads[i] = np.sqrt(max(variance, 0.0))
    return means, spreads


@dataclass(frozen=True)
class ClassicalStateSpec:
    """Coordinates defining one classical state: targets, spreads, tolerances."""

    observables: tuple
    targets: np.ndarray
    spreads: np.ndarray
    tol_mean: float = DEFAULT_TOL_MEAN
    tol_spread: float = DEFAULT_TOL_SPREAD

    def __post_init__(self):
        mats = tuple(np.asarray(a, dtype=complex) for a in self.observables)
        _check_observables(mats)
        t = np.asarray(self.targets, dtype=float)
        s = np.asarray(self.spreads, dtype=float)
        if len(mats) != len(t) or len(mats) != len(s):
            raise ValueError("observables, targets and spreads must have equal length")
        if np.any(s < 0):
            raise ValueError("spreads must be nonnegative")
        if not (self.tol_mean > 0 and self.tol_spread > 0):
            raise ValueError("tolerances must be positive")
        object.__setattr__(self, "observables", mats)
        object.__setattr__(self, "targets", t)
        object.__setattr__(self, "spreads", s)


def in_class(rho: DensityMatrix, spec: ClassicalStateSpec) -> bool:
    """Whether rho reproduces every target coordinate within the tolerances."""
    means, spreads = classical_coordinates(rho, spec.observables)
    return bool(
        np.all(np.abs(means - spec.targets) <= spec.tol_mean)
        and np.all(np.abs(spreads - spec.spreads) <= spec.tol_spread)
    )


def same_class(rho: DensityMatrix, sigma: DensityMatrix, observables,
               tol_mean: float = DEFAULT_TOL_MEAN,
               tol_spread: float = DEFAULT_TOL_SPREAD) -> bool:
    """Whether two states share all classical coordinates within tolerance."""
    if rho.dim != sigma.dim:
        raise ValueError("states act on different dimensions")
    m1, s1 = classical_coordinates(rho, observables)
    m2, s2 = classical_coordinates(sigma, observables)
    return bool(np.all(np.abs(m1 - m2) <= tol_mean)
                and np.all(np.abs(s1 - s2) <= tol_spread))


@dataclass(frozen=True)
class SuperpositionProbe:
    """Coordinates of two representative superpositions and the class verdict."""

    same_class: bool
    first_means: np.ndarray
    first_spreads: np.ndarray
    second_means: np.ndarray
    second_spreads: np.ndarray


def _unit_vector(v, name):
    vec = np.asarray(v, dtype=complex).ravel()
    norm = np.linalg.norm(vec)
    if abs(norm - 1.0) > HERMITIAN_TOL:
        raise ValueError(f"{name} must be a unit vector, norm is {norm}")
    return vec


def superposition_class_probe(a, a_prime, b, b_prime, c, d, observables,
                              tol_mean: float = DEFAULT_TOL_MEAN,
                              tol_spread: float = DEFAULT_TOL_SPREAD) -> SuperpositionProbe:
    """Test whether class superposition is representative-independent.

    a and a_prime must represent one class, b and b_prime another (checked,
    ValueError otherwise).  The two candidate superpositions c a + d b and
    c a_prime + d b_prime are normalized and their coordinates compared;
    generically they land in different classes, which is exactly why no
    superposition operation survives on the classes themselves.
    """
    va, vap = _unit_vector(a, "a"), _unit_vector(a_prime, "a_prime")
    vb, vbp = _unit_vector(b, "b"), _unit_vector(b_prime, "b_prime")
    if abs(abs(c) ** 2 + abs(d) ** 2 - 1.0) > HERMITIAN_TOL:
        raise ValueError("amplitudes must satisfy |c|^2 + |d|^2 = 1")
    mats = _check_observables(observables, len(va))

    if not same_class(density_from_vector(va), density_from_vector(vap),
                      mats, tol_mean, tol_spread):
        raise ValueError("precondition violated: a and a_prime are not class-equivalent")
    if not same_class(density_from_vector(vb), density_from_vector(vbp),
                      mats, tol_mean, tol_spread):
        raise ValueError("precondition violated: b and b_prime are not class-equivalent")

    def normalized_superposition(x, y):
        psi = c * x + d * y
        norm = np.linalg.norm(psi)
        if norm < 1e-12:
            raise ValueError("superposition vanishes; representatives interfere away")
        return psi / norm

    rho1 = density_from_vector(normalized_superposition(va, vb))
    rho2 = density_from_vector(normalized_superposition(vap, vbp))
    m1, s1 = classical_coordinates(rho1, mats)
    m2, s2 = classical_coordinates(rho2, mats)
    verdict = bool(np.all(np.abs(m1 - m2) <= tol_mean)
                   and np.all(np.abs(s1 - s2) <= tol_spread))
    return SuperpositionProbe(same_class=verdict,
                              first_means=m1, first_spreads=s1,
                              second_means=m2, second_spreads=s2)
