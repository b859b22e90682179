"""Quantum harmonic chain with a classically sharp length.

Normal-mode machinery, per-mode Gibbs thermodynamics, exact and asymptotic
length fluctuations, truncated-Fock and Monte Carlo validation oracles, and
finite-dimensional measurement/classical-state tools, all behind one CLI.
"""

__version__ = "0.1.0"

from .chain import (
    ChainParams,
    ModeBasis,
    PhaseState,
    build_mode_basis,
    energy_level,
    equilibrium_positions,
    from_modes,
    hamiltonian_cartesian,
    hamiltonian_modes,
    to_modes,
)
from .classical import (
    ClassicalStateSpec,
    SuperpositionProbe,
    classical_coordinates,
    in_class,
    same_class,
    superposition_class_probe,
)
from .errors import (
    ConvergenceError,
    CutoffTooSmallError,
    DistinctOperatorsError,
    ZeroModeError,
)
from .fock import (
    OccupationSample,
    TruncatedMode,
    build_truncated_mode,
    mc_sample_occupations,
    oracle_length_moments,
    oracle_u2,
    oracle_u_mean,
    truncation_error_bound,
)
from .length import (
    LengthExpansion,
    ScalingRow,
    SweepResult,
    bound_function_f,
    length_expansion,
    length_mean,
    length_variance_asymptotic,
    length_variance_exact,
    relative_std_asymptotic,
    scaling_sweep,
    variance_upper_bound,
)
from .measurement import (
    Decomposition,
    DensityMatrix,
    IndistinguishabilityReport,
    decompositions_indistinguishable,
    density_from_vector,
    eigen_decomposition,
    evolve_proper_mixture,
    partial_trace,
    premeasurement,
    proper_mixture,
    random_effect_set,
    random_equivalent_decomposition,
    registration_probabilities,
)
from .thermo import (
    MomentReport,
    ThermoState,
    entropy,
    fock_cutoff,
    internal_energy,
    mean_occupation,
    mode_u2_mean,
    mode_u_mean,
    occupation_prob,
    partition_fn_mode,
    solve_lambda,
    thermo_state,
)

__all__ = [
    "ChainParams", "ModeBasis", "PhaseState", "build_mode_basis",
    "energy_level", "equilibrium_positions", "from_modes",
    "hamiltonian_cartesian", "hamiltonian_modes", "to_modes",
    "MomentReport", "ThermoState", "entropy", "fock_cutoff",
    "internal_energy", "mean_occupation", "mode_u2_mean", "mode_u_mean",
    "occupation_prob", "partition_fn_mode", "solve_lambda", "thermo_state",
    "LengthExpansion", "ScalingRow", "SweepResult", "bound_function_f",
    "length_expansion", "length_mean", "length_variance_asymptotic",
    "length_variance_exact", "relative_std_asymptotic", "scaling_sweep",
    "variance_upper_bound",
    "OccupationSample", "TruncatedMode", "build_truncated_mode",
    "mc_sample_occupations", "oracle_length_moments", "oracle_u2",
    "oracle_u_mean", "truncation_error_bound",
    "Decomposition", "DensityMatrix", "IndistinguishabilityReport",
    "decompositions_indistinguishable", "density_from_vector",
    "eigen_decomposition", "evolve_proper_mixture", "partial_trace",
    "premeasurement", "proper_mixture", "random_effect_set",
    "random_equivalent_decomposition", "registration_probabilities",
    "ClassicalStateSpec", "SuperpositionProbe", "classical_coordinates",
    "in_class", "same_class", "superposition_class_probe",
    "ZeroModeError", "CutoffTooSmallError", "ConvergenceError",
    "DistinctOperatorsError",
]
