"""Reduced 4x4 density matrices of the pair and the spin-flip transform.

Pure dephasing never moves populations: the builders multiply the initial
projector entrywise by a coherence mask whose off-diagonal entries carry
the decoherence factors. The mask layout is fixed by the product-basis
ordering (uu, ud, du, dd).
"""
from __future__ import annotations

import numpy as np

from .core import Bath, DecoherenceFactors, PairState
from .decoherence import factors_common, factors_two_baths

# sigma_y (x) sigma_y; real in this basis.
_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)


def _coherence_mask(r1: complex, r2: complex, upper_corner: complex, inner: complex):
    """Hermitian mask with unit diagonal; upper_corner sits at (uu,dd) and
    inner at (ud,du)."""
    m = np.ones((4, 4), dtype=complex)
    m[0, 1] = r2
    m[0, 2] = r1
    m[0, 3] = upper_corner
    m[1, 2] = inner
    m[1, 3] = r1
    m[2, 3] = r2
    for i in range(4):
        for j in range(i):
            m[i, j] = np.conj(m[j, i])
    return m


def rho_two_baths(psi: PairState, r1: complex, r2: complex) -> np.ndarray:
    """Reduced pair state when each spin dephases in its own bath."""
    for name, r in (("r1", r1), ("r2", r2)):
        if abs(r) > 1.0 + 1e-9:
            raise ValueError(f"|{name}| = {abs(r)} exceeds 1")
    mask = _coherence_mask(r1, r2, upper_corner=r1 * r2, inner=r1 * np.conj(r2))
    return psi.projector() * mask


def rho_common_bath(
    psi: PairState, r1: complex, r2: complex, r12p: complex, r12m: complex
) -> np.ndarray:
    """Reduced pair state when both spins share one bath.

    The parallel coherence (uu,dd) carries r12p and the antiparallel
    coherence (ud,du) carries r12m.
    """
    for name, r in (("r1", r1), ("r2", r2), ("r12p", r12p), ("r12m", r12m)):
        if abs(r) > 1.0 + 1e-9:
            raise ValueError(f"|{name}| = {abs(r)} exceeds 1")
    mask = _coherence_mask(r1, r2, upper_corner=r12p, inner=r12m)
    return psi.projector() * mask


def rho_from_factors(psi: PairState, factors: DecoherenceFactors) -> np.ndarray:
    """Dispatch to the right builder based on which factors are present."""
    if factors.is_common:
        return rho_common_bath(
            psi, factors.r1, factors.r2, factors.r12_plus, factors.r12_minus
        )
    return rho_two_baths(psi, factors.r1, factors.r2)


def spin_flip(rho: np.ndarray) -> np.ndarray:
    """(sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected 4x4 matrix, got shape {rho.shape}")
    return _FLIP @ rho.conj() @ _FLIP


def rho_time_sweep(psi: PairState, baths, grid) -> list[np.ndarray]:
    """One reduced density matrix per grid time.

    ``baths`` is either a common Bath or a (bath1, bath2) pair of separate
    baths; use an empty second bath for the one-coupled scenario.
    """
    grid = list(grid)
    if not grid:
        raise ValueError("time grid must be non-empty")
    if any(b > a for a, b in zip(grid[1:], grid)):
        raise ValueError("time grid must be sorted ascending")
    if isinstance(baths, Bath):
        if not baths.is_common:
            raise ValueError("a single bath must be a common bath; pass a pair otherwise")
        factor_fn = lambda t: factors_common(baths, t)
    else:
        bath1, bath2 = baths
        factor_fn = lambda t: factors_two_baths(bath1, bath2, t)
    return [rho_from_factors(psi, factor_fn(t)) for t in grid]
