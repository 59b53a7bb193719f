"""Brute-force ground truth: exact full-Hilbert-space evolution of the
pair plus every bath spin, and the partial trace back to the pair.

The Hamiltonian is diagonal in the product basis, so evolution is applied
as exact per-branch phases on a dense state vector; nothing is integrated
numerically. This module exists for correctness at small bath sizes, not
for scale.
"""
from __future__ import annotations

import numpy as np

from .core import Bath, PairState, ResourceLimitError

MAX_QUBITS = 24

# Central-spin z eigenvalues (s1, s2) per pair basis index (uu, ud, du, dd).
_BRANCH_SIGNS = ((+1, +1), (+1, -1), (-1, +1), (-1, -1))


def _as_bath_pair(baths) -> tuple[Bath | None, tuple[Bath, Bath] | None]:
    """Normalize the baths argument: a common Bath, or a pair of separate
    ones (use an empty bath for an uncoupled spin)."""
    if isinstance(baths, Bath):
        if not baths.is_common:
            raise ValueError(
                "a single bath must be a common bath; pass (bath1, bath2) otherwise"
            )
        return baths, None
    bath1, bath2 = baths
    if bath1.is_common or bath2.is_common:
        raise ValueError("bath pair must consist of separate baths")
    return None, (bath1, bath2)


def _branch_bath_vector(spins, freqs, t: float) -> np.ndarray:
    """Kron product of per-spin states evolved with the branch's effective
    frequencies; spin 0 occupies the most significant bit."""
    vec = np.ones(1, dtype=complex)
    for spin, w in zip(spins, freqs):
        phase = np.exp(-1j * w * t)
        vec = np.kron(vec, np.array([spin.alpha * phase, spin.beta / phase]))
    return vec


def evolve_full_state(psi: PairState, baths, t: float) -> np.ndarray:
    """Exact full state at time t, indexed by (pair index, bath bitstring).

    Each pair branch fixes the z eigenvalues (s1, s2) of the central
    spins; every bath spin then precesses with effective frequency
    s1*w1 + s2*w2 (shared bath) or s*w of its own bath.
    """
    common, pair = _as_bath_pair(baths)
    if common is not None:
        spins = common.spins
    else:
        spins = pair[0].spins + pair[1].spins
    n_bath = len(spins)
    if n_bath + 2 > MAX_QUBITS:
        raise ResourceLimitError(
            f"{n_bath + 2} qubits requested, budget is {MAX_QUBITS}"
        )
    dim_bath = 2**n_bath
    state = np.zeros(4 * dim_bath, dtype=complex)
    amps = psi.vector
    for idx, (s1, s2) in enumerate(_BRANCH_SIGNS):
        if common is not None:
            freqs = [s1 * s.omega + s2 * s.omega2 for s in spins]
        else:
            freqs = [s1 * s.omega for s in pair[0].spins] + [
                s2 * s.omega for s in pair[1].spins
            ]
        state[idx * dim_bath : (idx + 1) * dim_bath] = amps[idx] * _branch_bath_vector(
            spins, freqs, t
        )
    return state


def partial_trace_pair(state: np.ndarray) -> np.ndarray:
    """Trace out every bath spin from a pure full state, leaving the 4x4
    reduced matrix of the pair."""
    state = np.asarray(state, dtype=complex)
    if state.ndim != 1 or state.size % 4 != 0 or state.size == 0:
        raise ValueError(f"state dimension {state.shape} is not 4 * 2^n")
    dim_bath = state.size // 4
    if dim_bath & (dim_bath - 1):
        raise ValueError(f"bath dimension {dim_bath} is not a power of two")
    block = state.reshape(4, dim_bath)
    return block @ block.conj().T
