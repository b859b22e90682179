"""Command-line surface.

Subcommands: modes, thermo, length-stats, scaling-sweep, oracle-check,
measure-demo, class-check.  Exit codes: 0 success, 1 check failure,
2 usage or configuration error.

Configuration is resolved as defaults < config file < command-line flags.
The config file is flat UTF-8 ``key=value`` text with full-line ``#``
comments; ``--config`` names it explicitly and the PHONON_CHAIN_CONFIG
environment variable is the fallback.  JSON output always embeds the fully
resolved configuration (seed included) so any run can be reproduced.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import __version__
from .chain import ChainParams, build_mode_basis
from .classical import (
    classical_coordinates,
    same_class,
    superposition_class_probe,
)
from .errors import CutoffTooSmallError
from .fock import (
    build_truncated_mode,
    mc_sample_occupations,
    oracle_length_moments,
    oracle_u2,
    truncation_error_bound,
)
from .length import (
    length_variance_asymptotic,
    length_variance_exact,
    relative_std_asymptotic,
    scaling_sweep,
)
from .matrixio import matrix_to_dict, read_matrices, read_matrix
from .measurement import (
    DensityMatrix,
    decompositions_indistinguishable,
    density_from_vector,
    eigen_decomposition,
    partial_trace,
    premeasurement,
    random_equivalent_decomposition,
)
from .thermo import entropy, mean_occupation, mode_u2_mean, solve_lambda, thermo_state

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

ENV_CONFIG = "PHONON_CHAIN_CONFIG"

#: fixed grid for the oracle-check command: dimensionless lambda*hbar*omega
#: values crossed with Fock cutoffs; chosen so truncation error sits below
#: the 1e-10 agreement tolerance while staying above the cutoff guard
ORACLE_GRID_X = (0.75, 1.0, 2.0, 5.0, 10.0)
ORACLE_GRID_CUTOFFS = (40, 80, 160)
ORACLE_U2_TOL = 1e-10
ORACLE_LENGTH_TOL = 1e-9


class CliConfigError(Exception):
    """Invalid configuration; reported on stderr with exit code 2."""


@dataclass
class RunConfig:
    """Resolved run configuration shared by all subcommands."""

    n: int = 8
    mass: float = 1.0
    coupling: float = 1.0
    spacing: float = 1.0
    hbar: float = 1.0
    lam: Optional[float] = None
    energy: Optional[float] = None
    n_values: Optional[List[int]] = None
    cutoff: int = 80
    samples: int = 1_000_000
    seed: int = 0
    format: Optional[str] = None
    out: Optional[str] = None
    parallel: bool = False

    def params(self) -> ChainParams:
        try:
            return ChainParams(n_particles=self.n, mass=self.mass,
                               coupling=self.coupling, spacing=self.spacing,
                               hbar=self.hbar)
        except ValueError as exc:
            raise CliConfigError(str(exc)) from exc

    def as_dict(self) -> dict:
        return {
            "n": self.n, "mass": self.mass, "coupling": self.coupling,
            "spacing": self.spacing, "hbar": self.hbar, "lambda": self.lam,
            "energy": self.energy, "n_values": self.n_values,
            "cutoff": self.cutoff, "samples": self.samples, "seed": self.seed,
            "format": self.format, "out": self.out, "parallel": self.parallel,
        }


_INT_KEYS = {"n", "cutoff", "samples", "seed"}
_FLOAT_KEYS = {"mass", "coupling", "spacing", "hbar", "lambda", "energy"}
_STR_KEYS = {"format", "out"}
_BOOL_KEYS = {"parallel"}
_LIST_KEYS = {"n_values"}
_ALL_KEYS = _INT_KEYS | _FLOAT_KEYS | _STR_KEYS | _BOOL_KEYS | _LIST_KEYS


def _parse_config_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise CliConfigError(f"cannot read config file {path}: {exc}") from exc

    values = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise CliConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _ALL_KEYS:
            raise CliConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value
    return values


def _coerce(key: str, text: str):
    try:
        if key in _INT_KEYS:
            return int(text)
        if key in _FLOAT_KEYS:
            return float(text)
        if key in _BOOL_KEYS:
            lowered = text.lower()
            if lowered in ("true", "1", "yes"):
                return True
            if lowered in ("false", "0", "no"):
                return False
            raise ValueError(f"not a boolean: {text!r}")
        if key in _LIST_KEYS:
            return [int(part) for part in text.split(",") if part.strip()]
        return text
    except ValueError as exc:
        raise CliConfigError(f"config key {key!r}: {exc}") from exc


def resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()

    path = getattr(args, "config", None) or os.environ.get(ENV_CONFIG)
    if path:
        for key, text in _parse_config_file(path).items():
            attr = "lam" if key == "lambda" else key
            setattr(cfg, attr, _coerce(key, text))

    for attr in ("n", "mass", "coupling", "spacing", "hbar", "lam", "energy",
                 "n_values", "cutoff", "samples", "seed", "format", "out"):
        value = getattr(args, attr, None)
        if value is not None:
            setattr(cfg, attr, value)
    if getattr(args, "parallel", False):
        cfg.parallel = True

    if cfg.lam is not None and cfg.energy is not None:
        raise CliConfigError("set exactly one of lambda and energy, not both")
    if cfg.lam is not None and not cfg.lam > 0:
        raise CliConfigError(f"lambda must be positive, got {cfg.lam}")
    if cfg.energy is not None and not cfg.energy > 0:
        raise CliConfigError(f"energy must be positive, got {cfg.energy}")
    if cfg.format not in (None, "csv", "json"):
        raise CliConfigError(f"format must be csv or json, got {cfg.format!r}")
    if cfg.cutoff < 2:
        raise CliConfigError(f"cutoff must be >= 2, got {cfg.cutoff}")
    if cfg.samples < 1:
        raise CliConfigError(f"samples must be >= 1, got {cfg.samples}")
    if not 0 <= cfg.seed < 2**64:
        raise CliConfigError(f"seed must fit in an unsigned 64-bit integer, got {cfg.seed}")
    return cfg


def _resolve_thermo(cfg: RunConfig, params, basis):
    """Build the Gibbs record from whichever of lambda/energy is configured."""
    if cfg.lam is not None:
        return thermo_state(cfg.lam, params, basis)
    if cfg.energy is not None:
        return solve_lambda(cfg.energy, params, basis)
    raise CliConfigError("this command needs lambda or energy")


# ---------------------------------------------------------------------------
# output helpers

def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_csv(header, rows, out) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    _emit("\n".join(lines) + "\n", out)


def _json_ready(value):
    if isinstance(value, dict):
        return {k: _json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_ready(v) for v in value]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, np.ndarray):
        return [_json_ready(v) for v in value.tolist()]
    return value


def _emit_json(payload: dict, out) -> None:
    _emit(json.dumps(_json_ready(payload), indent=2) + "\n", out)


# ---------------------------------------------------------------------------
# subcommands

def cmd_modes(cfg: RunConfig) -> int:
    params = cfg.params()
    basis = build_mode_basis(params)
    Y = basis.transform
    residual = float(np.max(np.abs(Y.T @ Y - np.eye(params.n_particles))))

    if cfg.format == "json":
        _emit_json({
            "command": "modes",
            "config": cfg.as_dict(),
            "frequencies": basis.frequencies,
            "orthogonality_residual": residual,
        }, cfg.out)
    else:
        rows = [(m, w, residual) for m, w in enumerate(basis.frequencies)]
        _emit_csv(("mode", "omega", "orthogonality_residual"), rows, cfg.out)
    return EXIT_OK


def cmd_thermo(cfg: RunConfig) -> int:
    params = cfg.params()
    basis = build_mode_basis(params)
    ts = _resolve_thermo(cfg, params, basis)
    s = entropy(ts)
    scalars = {
        "lambda": ts.lam,
        "internal_energy": ts.internal_energy,
        "entropy": s,
        "gamma": ts.gamma,
        "temperature": 1.0 / ts.lam,  # reported as 1/lambda, nothing more
    }

    if cfg.format == "json":
        _emit_json({
            "command": "thermo",
            "config": cfg.as_dict(),
            **scalars,
            "modes": [
                {"mode": m + 1, "omega": ts.omegas[m], "Z": ts.partition[m],
                 "n_mean": ts.occupation[m]}
                for m in range(len(ts.omegas))
            ],
        }, cfg.out)
    else:
        header = ("mode", "omega", "Z", "n_mean", "lambda", "internal_energy",
                  "entropy", "gamma", "temperature")
        rows = [
            (m + 1, ts.omegas[m], ts.partition[m], ts.occupation[m],
             ts.lam, ts.internal_energy, s, ts.gamma, 1.0 / ts.lam)
            for m in range(len(ts.omegas))
        ]
        _emit_csv(header, rows, cfg.out)
    return EXIT_OK


def cmd_length_stats(cfg: RunConfig) -> int:
    params = cfg.params()
    basis = build_mode_basis(params)
    ts = _resolve_thermo(cfg, params, basis)
    exact = length_variance_exact(params, basis, ts)
    asymptotic = length_variance_asymptotic(params, ts)
    rel_asym = relative_std_asymptotic(params, ts) if params.spacing > 0 else None

    record = {
        "n": params.n_particles,
        "lambda": ts.lam,
        "mean_length": exact.mean,
        "variance_exact": exact.variance,
        "variance_asymptotic": asymptotic,
        "rel_std_exact": exact.rel_std,
        "rel_std_asymptotic": rel_asym,
    }
    if cfg.format == "json":
        _emit_json({"command": "length-stats", "config": cfg.as_dict(), **record},
                   cfg.out)
    else:
        _emit_csv(tuple(record), [tuple(record.values())], cfg.out)
    return EXIT_OK


def cmd_scaling_sweep(cfg: RunConfig) -> int:
    if not cfg.n_values:
        raise CliConfigError("scaling-sweep needs n_values (e.g. --n-values 64,256,1024)")
    params = cfg.params()
    if cfg.lam is not None:
        lam = cfg.lam
    elif cfg.energy is not None:
        # hold the multiplier of the configured reference chain fixed across N
        lam = solve_lambda(cfg.energy, params, build_mode_basis(params)).lam
    else:
        raise CliConfigError("this command needs lambda or energy")

    result = scaling_sweep(params, lam, cfg.n_values, parallel=cfg.parallel)
    header = ("n_particles", "lambda", "mean_length", "variance_exact",
              "variance_asymptotic", "rel_std_exact", "rel_std_asymptotic")
    if cfg.format == "json":
        _emit_json({
            "command": "scaling-sweep",
            "config": cfg.as_dict(),
            "rows": [
                {key: getattr(row, attr) for key, attr in zip(
                    header, ("n_particles", "lam", "mean_length", "variance_exact",
                             "variance_asymptotic", "rel_std_exact", "rel_std_asymptotic"))}
                for row in result.rows
            ],
            "slope": result.slope,
            "rel_std_ratio": result.rel_std_ratio,
        }, cfg.out)
    else:
        rows = [
            (r.n_particles, r.lam, r.mean_length, r.variance_exact,
             r.variance_asymptotic, r.rel_std_exact, r.rel_std_asymptotic)
            for r in result.rows
        ]
        _emit_csv(header, rows, cfg.out)
        # keep the CSV stream parseable: the fit summary goes to stderr
        print(f"slope = {result.slope:.6f}", file=sys.stderr)
        print(f"rel_std_ratio = {result.rel_std_ratio:.6f}", file=sys.stderr)
    return EXIT_OK


def _oracle_checks(cfg: RunConfig):
    """Run every oracle comparison; yield (name, passed, deviation, detail)."""
    lam = cfg.lam if cfg.lam is not None else 1.0
    mass, hbar = cfg.mass, cfg.hbar

    worst = 0.0
    ok = True
    detail = ""
    for x in ORACLE_GRID_X:
        omega = x / (lam * hbar)
        closed = mode_u2_mean(lam, omega, mass, hbar)
        for cutoff in ORACLE_GRID_CUTOFFS:
            mode = build_truncated_mode(lam, omega, mass, hbar, cutoff)
            dev = abs(oracle_u2(mode) - closed)
            worst = max(worst, dev)
            if dev > ORACLE_U2_TOL:
                ok = False
                detail = f"x={x} cutoff={cutoff}"
            if dev > truncation_error_bound(mode):
                ok = False
                detail = f"error bound exceeded at x={x} cutoff={cutoff}"
    yield ("u2-closed-form", ok, worst,
           detail or f"{len(ORACLE_GRID_X)}x{len(ORACLE_GRID_CUTOFFS)} grid, tol {ORACLE_U2_TOL:g}")

    try:
        params = ChainParams(n_particles=6, mass=mass, coupling=cfg.coupling,
                             spacing=cfg.spacing, hbar=hbar)
        basis = build_mode_basis(params)
        ts = thermo_state(lam, params, basis)
        oracle = oracle_length_moments(params, basis, ts, cfg.cutoff)
        exact = length_variance_exact(params, basis, ts)
        dev = abs(oracle.variance - exact.variance)
        yield ("length-moments", dev <= ORACLE_LENGTH_TOL, dev,
               f"N=6 cutoff={cfg.cutoff}, tol {ORACLE_LENGTH_TOL:g}")
    except CutoffTooSmallError as exc:
        yield ("length-moments", False, math.inf, f"cutoff too small: {exc}")

    omega = math.log(2.0) / (lam * hbar)
    sample = mc_sample_occupations(lam, omega, mass, hbar, cfg.samples, cfg.seed)
    target = mean_occupation(lam, omega, hbar)
    dev = abs(sample.mean_occupation - target)
    yield ("mc-occupation", dev <= 3.0 * sample.stderr_occupation, dev,
           f"{cfg.samples} samples, seed {cfg.seed}, 3 sigma = "
           f"{3.0 * sample.stderr_occupation:.3e}, rng: {sample.rng}")


def cmd_oracle_check(cfg: RunConfig) -> int:
    results = list(_oracle_checks(cfg))
    passed = all(ok for _, ok, _, _ in results)

    if cfg.format == "json":
        _emit_json({
            "command": "oracle-check",
            "config": cfg.as_dict(),
            "checks": [
                {"name": name, "passed": ok, "max_deviation": dev, "detail": detail}
                for name, ok, dev, detail in results
            ],
            "passed": passed,
        }, cfg.out)
    else:
        lines = []
        for name, ok, dev, detail in results:
            status = "ok" if ok else "FAIL"
            lines.append(f"{status:4s} {name}: max deviation {dev:.3e} ({detail})")
        lines.append("all checks passed" if passed else "oracle check FAILED")
        _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def _parse_amplitudes(text: str) -> np.ndarray:
    try:
        return np.array([complex(part.strip().replace(" ", ""))
                         for part in text.split(",") if part.strip()])
    except ValueError as exc:
        raise CliConfigError(f"cannot parse amplitudes {text!r}: {exc}") from exc


def _format_matrix(m: np.ndarray) -> str:
    rows = []
    for row in m:
        rows.append("  [" + ", ".join(f"{v.real:+.6f}{v.imag:+.6f}j" for v in row) + "]")
    return "\n".join(rows)


def cmd_measure_demo(cfg: RunConfig, amplitudes: str) -> int:
    c = _parse_amplitudes(amplitudes)
    k = len(c)
    if k == 0:
        raise CliConfigError("need at least one amplitude")
    try:
        joint = premeasurement(c, k, k)
    except ValueError as exc:
        raise CliConfigError(str(exc)) from exc

    apparatus = partial_trace(density_from_vector(joint), (k, k), keep=1)
    rng = np.random.default_rng(cfg.seed)
    pointer = eigen_decomposition(apparatus)
    rotated = random_equivalent_decomposition(apparatus, n_states=apparatus.dim, rng=rng)
    report = decompositions_indistinguishable(pointer, rotated, trials=20, seed=cfg.seed)

    if cfg.format == "json":
        _emit_json({
            "command": "measure-demo",
            "config": cfg.as_dict(),
            "outcome_probabilities": np.abs(c) ** 2,
            "apparatus_state": matrix_to_dict(apparatus.matrix),
            "indistinguishability": {
                "trials": report.trials,
                "max_deviation": report.max_deviation,
                "operator_deviation": report.operator_deviation,
            },
        }, cfg.out)
    else:
        lines = [
            f"apparatus state after tracing out the system ({k} outcomes):",
            _format_matrix(apparatus.matrix),
            "outcome probabilities: "
            + ", ".join(f"{p:.6f}" for p in np.abs(c) ** 2),
            "decomposition indistinguishability over "
            f"{report.trials} random registrations: max deviation "
            f"{report.max_deviation:.3e}",
        ]
        _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


_SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


def _builtin_counterexample(tol_mean: float, tol_spread: float):
    """Qubit probe: same projectors, opposite phases, classes split by sigma_x."""
    e0 = np.array([1.0, 0.0], dtype=complex)
    e1 = np.array([0.0, 1.0], dtype=complex)
    amp = 1.0 / math.sqrt(2.0)
    return superposition_class_probe(e0, e0, e1, -e1, amp, amp, [_SIGMA_X],
                                     tol_mean=tol_mean, tol_spread=tol_spread)


def cmd_class_check(cfg: RunConfig, args) -> int:
    if args.demo:
        probe = _builtin_counterexample(args.tol_mean, args.tol_spread)
        verdict = "same class" if probe.same_class else "different classes"
        if cfg.format == "json":
            _emit_json({
                "command": "class-check",
                "config": cfg.as_dict(),
                "demo": True,
                "first": {"means": probe.first_means, "spreads": probe.first_spreads},
                "second": {"means": probe.second_means, "spreads": probe.second_spreads},
                "same_class": probe.same_class,
            }, cfg.out)
        else:
            _emit(
                "built-in superposition counterexample (sigma_x on a qubit):\n"
                f"first superposition:  means {probe.first_means}, spreads {probe.first_spreads}\n"
                f"second superposition: means {probe.second_means}, spreads {probe.second_spreads}\n"
                f"verdict: {verdict}\n",
                cfg.out,
            )
        return EXIT_OK

    if not args.state_a or not args.state_b or not args.observables:
        raise CliConfigError(
            "class-check needs two state files and --observables (or --demo)")
    try:
        rho = DensityMatrix(read_matrix(args.state_a))
        sigma = DensityMatrix(read_matrix(args.state_b))
        observables = read_matrices(args.observables)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        raise CliConfigError(str(exc)) from exc

    try:
        means_a, spreads_a = classical_coordinates(rho, observables)
        means_b, spreads_b = classical_coordinates(sigma, observables)
        equal = same_class(rho, sigma, observables,
                           tol_mean=args.tol_mean, tol_spread=args.tol_spread)
    except ValueError as exc:
        raise CliConfigError(str(exc)) from exc

    if cfg.format == "json":
        _emit_json({
            "command": "class-check",
            "config": cfg.as_dict(),
            "first": {"means": means_a, "spreads": spreads_a},
            "second": {"means": means_b, "spreads": spreads_b},
            "same_class": equal,
        }, cfg.out)
    else:
        verdict = "same class" if equal else "different classes"
        _emit(
            f"state A: means {means_a}, spreads {spreads_a}\n"
            f"state B: means {means_b}, spreads {spreads_b}\n"
            f"verdict: {verdict}\n",
            cfg.out,
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

def _seed_type(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH",
                        help=f"key=value config file (fallback: ${ENV_CONFIG})")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--out", metavar="PATH", help="write output to a file")
    common.add_argument("--seed", type=_seed_type, metavar="U64")
    common.add_argument("--parallel", action="store_true", default=False,
                        help="compute sweep rows concurrently")

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("--n", type=int, help="number of particles")
    model.add_argument("--mass", type=float)
    model.add_argument("--coupling", type=float)
    model.add_argument("--spacing", type=float)
    model.add_argument("--hbar", type=float)
    model.add_argument("--lambda", dest="lam", type=float,
                       help="Lagrange multiplier (inverse temperature)")
    model.add_argument("--energy", type=float, help="mean internal energy")

    parser = argparse.ArgumentParser(
        prog="phonon-chain",
        description="Harmonic-chain length statistics, Gibbs thermodynamics, "
                    "and measurement-model demos.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("modes", parents=[common, model],
                   help="mode frequencies and orthogonality residual")
    sub.add_parser("thermo", parents=[common, model],
                   help="partition data, energy, entropy at lambda or energy")
    sub.add_parser("length-stats", parents=[common, model],
                   help="length mean, exact and asymptotic variance")

    sweep = sub.add_parser("scaling-sweep", parents=[common, model],
                           help="length statistics across chain sizes")
    sweep.add_argument("--n-values", dest="n_values", metavar="N1,N2,...",
                       type=lambda t: [int(p) for p in t.split(",") if p.strip()])

    oracle = sub.add_parser("oracle-check", parents=[common, model],
                            help="truncated-Fock and Monte Carlo validation")
    oracle.add_argument("--cutoff", type=int, help="Fock cutoff for the length check")
    oracle.add_argument("--samples", type=int, help="Monte Carlo sample count")

    demo = sub.add_parser("measure-demo", parents=[common],
                          help="apparatus state after a premeasurement")
    demo.add_argument("--amplitudes", required=True, metavar="C1,C2,...",
                      help="complex amplitudes, e.g. 0.6,0.8 or 0.6+0j,0.8j")

    check = sub.add_parser("class-check", parents=[common],
                           help="compare classical coordinates of two states")
    check.add_argument("state_a", nargs="?", help="density matrix JSON file")
    check.add_argument("state_b", nargs="?", help="density matrix JSON file")
    check.add_argument("--observables", metavar="PATH",
                       help="JSON file with one observable or a list of them")
    check.add_argument("--demo", action="store_true",
                       help="run the built-in qubit superposition counterexample")
    check.add_argument("--tol-mean", type=float, default=1e-8)
    check.add_argument("--tol-spread", type=float, default=1e-8)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        if args.command == "modes":
            return cmd_modes(cfg)
        if args.command == "thermo":
            return cmd_thermo(cfg)
        if args.command == "length-stats":
            return cmd_length_stats(cfg)
        if args.command == "scaling-sweep":
            return cmd_scaling_sweep(cfg)
        if args.command == "oracle-check":
            return cmd_oracle_check(cfg)
        if args.command == "measure-demo":
            return cmd_measure_demo(cfg, args.amplitudes)
        if args.command == "class-check":
            return cmd_class_check(cfg, args)
        raise CliConfigError(f"unknown command {args.command!r}")
    except CliConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
