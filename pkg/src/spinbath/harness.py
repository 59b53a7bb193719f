"""Random-bath sampling, Monte Carlo sweeps, CSV output, and the
Gaussian-envelope fit.

Reproducibility contract: every sweep is a pure function of its config.
Trial k draws from an RNG stream spawned from (seed, k), so serial and
parallel execution orders cannot change the output, and a repeated run
writes byte-identical CSV.
"""
from __future__ import annotations

import csv
import dataclasses
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .bell import AngleSet, canonical_angles, chsh_closed_form
from .core import Bath, PairState, bath_spin_from_angles, make_bell_state
from .decoherence import factors_common, factors_two_baths
from .density import rho_from_factors
from .entanglement import concurrence, entanglement_entropy_from_concurrence
from .oracle import evolve_full_state, partial_trace_pair

SCENARIOS = ("two-bath", "common", "one-coupled")

DEFAULT_OUTPUTS = ("factors", "concurrence", "entropy", "chsh")

FIT_WINDOW_FLOOR = math.exp(-4.0)


@dataclass(frozen=True)
class Distribution:
    """Sampling law for coupling frequencies."""

    kind: str  # uniform | gaussian | constant
    a: float = 0.0
    b: float = 0.0

    def __post_init__(self):
        if self.kind == "uniform":
            if not (math.isfinite(self.a) and math.isfinite(self.b)) or self.a > self.b:
                raise ValueError(f"uniform bounds invalid: [{self.a}, {self.b}]")
        elif self.kind == "gaussian":
            if not (math.isfinite(self.a) and math.isfinite(self.b)) or self.b < 0:
                raise ValueError(f"gaussian parameters invalid: mean={self.a} sd={self.b}")
        elif self.kind == "constant":
            if not math.isfinite(self.a):
                raise ValueError(f"constant value invalid: {self.a}")
        else:
            raise ValueError(f"unknown distribution kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "Distribution":
        """Parse "uniform:lo:hi", "gaussian:mean:sd", or "constant:v"."""
        parts = text.split(":")
        kind = parts[0]
        try:
            params = [float(p) for p in parts[1:]]
        except ValueError as exc:
            raise ValueError(f"bad distribution spec {text!r}") from exc
        if kind == "constant" and len(params) == 1:
            return cls("constant", params[0])
        if kind in ("uniform", "gaussian") and len(params) == 2:
            return cls(kind, params[0], params[1])
        raise ValueError(f"bad distribution spec {text!r}")

    def spec_string(self) -> str:
        if self.kind == "constant":
            return f"constant:{self.a:g}"
        return f"{self.kind}:{self.a:g}:{self.b:g}"

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        if self.kind == "uniform":
            return rng.uniform(self.a, self.b, size=n)
        if self.kind == "gaussian":
            return rng.normal(self.a, self.b, size=n)
        return np.full(n, self.a)


@dataclass(frozen=True)
class SamplingSpec:
    """How to draw one random bath.

    Orientations follow the stated sampling law: theta uniform on [0, pi]
    and phi uniform on [0, 2*pi]. Set sphere_uniform to weight theta by
    sin(theta) instead (uniform directions on the sphere; non-default
    extension). omega2_dist "match" copies omega per spin, producing the
    equal-couplings shared bath.
    """

    n_spins: int
    omega_dist: Distribution
    omega2_dist: Distribution | str | None = None
    seed: int = 0
    sphere_uniform: bool = False
    label: str = "bath-1"

    def __post_init__(self):
        if self.n_spins < 0:
            raise ValueError(f"n_spins must be >= 0, got {self.n_spins}")
        if isinstance(self.omega2_dist, str) and self.omega2_dist != "match":
            raise ValueError(f"omega2_dist string must be 'match', got {self.omega2_dist!r}")


def sample_bath(spec: SamplingSpec, rng: np.random.Generator | None = None) -> Bath:
    """Draw a bath; deterministic given the spec's seed when rng is None."""
    if rng is None:
        rng = np.random.default_rng(spec.seed)
    n = spec.n_spins
    if spec.sphere_uniform:
        theta = np.arccos(rng.uniform(-1.0, 1.0, size=n))
    else:
        theta = rng.uniform(0.0, math.pi, size=n)
    phi = rng.uniform(0.0, 2.0 * math.pi, size=n)
    omega = spec.omega_dist.sample(rng, n)
    if spec.omega2_dist is None:
        omega2 = [None] * n
    elif spec.omega2_dist == "match":
        omega2 = omega
    else:
        omega2 = spec.omega2_dist.sample(rng, n)
    spins = tuple(
        bath_spin_from_angles(theta[k], phi[k], float(omega[k]),
                              None if omega2[k] is None else float(omega2[k]))
        for k in range(n)
    )
    label = "common" if spec.omega2_dist is not None else spec.label
    return Bath(spins, label=label)


@dataclass(frozen=True)
class SweepConfig:
    """Full description of one Monte Carlo sweep."""

    scenario: str = "two-bath"
    bell_index: int = 1
    amplitudes: tuple[complex, complex, complex, complex] | None = None
    n_spins: int = 100
    omega_dist: Distribution = field(default_factory=lambda: Distribution("uniform", 0.0, 1.0))
    omega2_dist: Distribution | str | None = None
    t_start: float = 0.0
    t_max: float = 1.0
    steps: int = 100
    n_trials: int = 1
    seed: int = 0
    outputs: tuple[str, ...] = DEFAULT_OUTPUTS
    angles: AngleSet = field(default_factory=canonical_angles)
    sphere_uniform: bool = False

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise ValueError(f"scenario must be one of {SCENARIOS}, got {self.scenario!r}")
        if self.bell_index not in (1, 2, 3, 4):
            raise ValueError(f"bell_index must be 1..4, got {self.bell_index}")
        if self.steps < 2:
            raise ValueError(f"steps must be >= 2, got {self.steps}")
        if self.n_trials < 1:
            raise ValueError(f"n_trials must be >= 1, got {self.n_trials}")
        bad = set(self.outputs) - {"factors", "concurrence", "entropy", "chsh", "gaussian-fit"}
        if bad:
            raise ValueError(f"unknown outputs: {sorted(bad)}")
        if self.scenario == "common" and self.omega2_dist is None:
            raise ValueError("common scenario requires omega2_dist (or 'match')")
        if self.scenario != "common" and self.omega2_dist is not None:
            raise ValueError(f"omega2_dist is only valid for the common scenario")

    def initial_state(self) -> PairState:
        if self.amplitudes is not None:
            return PairState(self.amplitudes)
        return make_bell_state(self.bell_index)

    def time_grid(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_max, self.steps)

    def to_dict(self) -> dict:
        d = {
            "scenario": self.scenario,
            "bell_index": self.bell_index,
            "amplitudes": None
            if self.amplitudes is None
            else [[a.real, a.imag] for a in self.amplitudes],
            "n_spins": self.n_spins,
            "omega_dist": self.omega_dist.spec_string(),
            "omega2_dist": self.omega2_dist.spec_string()
            if isinstance(self.omega2_dist, Distribution)
            else self.omega2_dist,
            "t_start": self.t_start,
            "t_max": self.t_max,
            "steps": self.steps,
            "n_trials": self.n_trials,
            "seed": self.seed,
            "outputs": list(self.outputs),
            "angles": dataclasses.asdict(self.angles),
            "sphere_uniform": self.sphere_uniform,
        }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        kwargs = dict(d)
        if kwargs.get("amplitudes"):
            kwargs["amplitudes"] = tuple(complex(re, im) for re, im in kwargs["amplitudes"])
        else:
            kwargs.pop("amplitudes", None)
        for key in ("omega_dist", "omega2_dist"):
            val = kwargs.get(key)
            if isinstance(val, str) and val != "match":
                kwargs[key] = Distribution.parse(val)
        if "angles" in kwargs and isinstance(kwargs["angles"], dict):
            kwargs["angles"] = AngleSet(**kwargs["angles"])
        if "outputs" in kwargs:
            kwargs["outputs"] = tuple(kwargs["outputs"])
        return cls(**kwargs)


@dataclass
class SweepResult:
    config: SweepConfig
    columns: list[str]
    rows: list[dict]


def _trial_baths(config: SweepConfig, trial_seed: np.random.SeedSequence):
    """Baths for one trial: a common Bath or a (bath1, bath2) pair."""
    rng = np.random.default_rng(trial_seed)
    if config.scenario == "common":
        spec = SamplingSpec(config.n_spins, config.omega_dist, config.omega2_dist,
                            sphere_uniform=config.sphere_uniform, label="common")
        return sample_bath(spec, rng)
    spec1 = SamplingSpec(config.n_spins, config.omega_dist,
                         sphere_uniform=config.sphere_uniform, label="bath-1")
    bath1 = sample_bath(spec1, rng)
    if config.scenario == "one-coupled":
        bath2 = Bath((), label="bath-2")
    else:
        spec2 = dataclasses.replace(spec1, label="bath-2")
        bath2 = sample_bath(spec2, rng)
    return bath1, bath2


def run_sweep(config: SweepConfig) -> SweepResult:
    """One row per (trial, time) plus mean/std aggregate rows per time."""
    psi = config.initial_state()
    grid = config.time_grid()
    want = set(config.outputs)

    columns = ["trial", "time"]
    if "factors" in want:
        columns += ["re_r1", "im_r1", "re_r2", "im_r2", "abs_r1", "abs_r2"]
        if config.scenario == "common":
            columns += ["re_r12p", "im_r12p", "re_r12m", "im_r12m", "abs_r12p", "abs_r12m"]
    if "concurrence" in want:
        columns.append("concurrence")
    if "entropy" in want:
        columns.append("entropy")
    if "chsh" in want:
        columns += ["S1", "S2", "S3", "S4"]

    streams = np.random.SeedSequence(config.seed).spawn(config.n_trials)
    rows: list[dict] = []
    for trial, stream in enumerate(streams):
        baths = _trial_baths(config, stream)
        for t in grid:
            if config.scenario == "common":
                factors = factors_common(baths, float(t))
            else:
                factors = factors_two_baths(baths[0], baths[1], float(t))
            row: dict = {"trial": trial, "time": float(t)}
            if "factors" in want:
                row.update(
                    re_r1=factors.r1.real, im_r1=factors.r1.imag,
                    re_r2=factors.r2.real, im_r2=factors.r2.imag,
                    abs_r1=abs(factors.r1), abs_r2=abs(factors.r2),
                )
                if config.scenario == "common":
                    row.update(
                        re_r12p=factors.r12_plus.real, im_r12p=factors.r12_plus.imag,
                        re_r12m=factors.r12_minus.real, im_r12m=factors.r12_minus.imag,
                        abs_r12p=abs(factors.r12_plus), abs_r12m=abs(factors.r12_minus),
                    )
            if "concurrence" in want or "entropy" in want:
                c = concurrence(rho_from_factors(psi, factors))
                if "concurrence" in want:
                    row["concurrence"] = c
                if "entropy" in want:
                    row["entropy"] = entanglement_entropy_from_concurrence(min(c, 1.0))
            if "chsh" in want:
                scen = config.scenario
                for i in (1, 2, 3, 4):
                    row[f"S{i}"] = chsh_closed_form(i, scen, config.angles, factors)
            rows.append(row)

    # Aggregates over trials, in grid order after all trial rows.
    value_cols = [c for c in columns if c not in ("trial", "time")]
    for stat in ("mean", "std"):
        for j, t in enumerate(grid):
            block = [rows[trial * len(grid) + j] for trial in range(config.n_trials)]
            agg: dict = {"trial": stat, "time": float(t)}
            for col in value_cols:
                vals = np.array([b[col] for b in block])
                agg[col] = float(vals.mean()) if stat == "mean" else float(vals.std(ddof=0))
            rows.append(agg)
    return SweepResult(config=config, columns=columns, rows=rows)


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def write_sweep_csv(result: SweepResult, path: str | Path) -> Path:
    """Write the result table as CSV plus a sidecar JSON metadata file."""
    path = Path(path)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(result.columns)
        for row in result.rows:
            writer.writerow(_fmt(row[c]) for c in result.columns)
    meta_path = path.with_suffix(path.suffix + ".meta.json")
    with open(meta_path, "w") as fh:
        json.dump({"config": result.config.to_dict()}, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return meta_path


def read_sweep_csv(path: str | Path) -> tuple[list[str], list[dict]]:
    """Read a sweep CSV back into typed rows."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        columns = next(reader)
        rows = []
        for rec in reader:
            row = {}
            for col, val in zip(columns, rec):
                if col == "trial" and val not in ("mean", "std"):
                    row[col] = int(val)
                elif col == "trial":
                    row[col] = val
                else:
                    row[col] = float(val)
            rows.append(row)
    return columns, rows


def oracle_max_deviation(config: SweepConfig) -> float:
    """Max entrywise gap between the analytic reduced matrix and the
    brute-force partial trace, over the config's trials and time grid.

    Only sensible at small bath sizes; the full-state evolution enforces
    its own qubit budget.
    """
    psi = config.initial_state()
    grid = config.time_grid()
    worst = 0.0
    streams = np.random.SeedSequence(config.seed).spawn(config.n_trials)
    for stream in streams:
        baths = _trial_baths(config, stream)
        for t in grid:
            t = float(t)
            if config.scenario == "common":
                factors = factors_common(baths, t)
            else:
                factors = factors_two_baths(baths[0], baths[1], t)
            analytic = rho_from_factors(psi, factors)
            brute = partial_trace_pair(evolve_full_state(psi, baths, t))
            worst = max(worst, float(np.max(np.abs(analytic - brute))))
    return worst


def fit_gaussian_envelope(times, moduli) -> tuple[float, float]:
    """Least-squares fit of -ln|r| against t^2 through the origin.

    Only points with modulus >= e^-4 enter the fit (the decay shoulder;
    below that, log-amplified noise dominates). Returns the slope and the
    maximum absolute deviation |r| - e^{-a t^2} inside that window.
    """
    times = np.asarray(times, dtype=float)
    moduli = np.asarray(moduli, dtype=float)
    if times.shape != moduli.shape:
        raise ValueError("times and moduli must have the same length")
    if np.any(moduli <= 0.0) or np.any(moduli > 1.0 + 1e-9):
        raise ValueError("moduli must lie in (0, 1]")
    window = moduli >= FIT_WINDOW_FLOOR
    if window.sum() < 3:
        raise ValueError(f"need >= 3 points with modulus >= e^-4, got {int(window.sum())}")
    x = times[window] ** 2
    y = -np.log(moduli[window])
    denom = float(np.sum(x * x))
    if denom == 0.0:
        raise ValueError("all usable points sit at t = 0; cannot fit a slope")
    a_hat = float(np.sum(x * y) / denom)
    resid = float(np.max(np.abs(moduli[window] - np.exp(-a_hat * x))))
    return a_hat, resid
