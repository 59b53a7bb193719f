"""Decoherence of an entangled spin pair in spin-1/2 baths.

Exact decoherence factors, reduced density matrices, Wootters
concurrence, and CHSH dynamics for two central spins coupled to separate
or shared dephasing baths, cross-validated against brute-force
full-Hilbert-space evolution.
"""
from .bell import (
    AngleSet,
    ab_coefficients,
    canonical_angles,
    chsh_S,
    chsh_closed_form,
    correlator,
    measurement_operator,
)
from .core import (
    Bath,
    BathSpin,
    DecoherenceFactors,
    InternalConsistencyError,
    PairState,
    ResourceLimitError,
    bath_spin_from_angles,
    check_density_matrix,
    make_bell_state,
)
from .decoherence import (
    factor_common_pm,
    factor_common_single,
    factor_separate,
    factors_common,
    factors_two_baths,
    gaussian_rate,
)
from .density import (
    rho_common_bath,
    rho_from_factors,
    rho_time_sweep,
    rho_two_baths,
    spin_flip,
)
from .entanglement import (
    concurrence,
    concurrence_closed_common,
    concurrence_closed_two_baths,
    entanglement_entropy_from_concurrence,
)
from .harness import (
    Distribution,
    SamplingSpec,
    SweepConfig,
    SweepResult,
    fit_gaussian_envelope,
    oracle_max_deviation,
    run_sweep,
    sample_bath,
    write_sweep_csv,
)
from .oracle import evolve_full_state, partial_trace_pair

__all__ = [
    "AngleSet",
    "Bath",
    "BathSpin",
    "DecoherenceFactors",
    "Distribution",
    "InternalConsistencyError",
    "PairState",
    "ResourceLimitError",
    "SamplingSpec",
    "SweepConfig",
    "SweepResult",
    "ab_coefficients",
    "bath_spin_from_angles",
    "canonical_angles",
    "check_density_matrix",
    "chsh_S",
    "chsh_closed_form",
    "concurrence",
    "concurrence_closed_common",
    "concurrence_closed_two_baths",
    "correlator",
    "entanglement_entropy_from_concurrence",
    "evolve_full_state",
    "factor_common_pm",
    "factor_common_single",
    "factor_separate",
    "factors_common",
    "factors_two_baths",
    "fit_gaussian_envelope",
    "gaussian_rate",
    "make_bell_state",
    "measurement_operator",
    "oracle_max_deviation",
    "partial_trace_pair",
    "rho_common_bath",
    "rho_from_factors",
    "rho_time_sweep",
    "rho_two_baths",
    "run_sweep",
    "sample_bath",
    "spin_flip",
    "write_sweep_csv",
]
