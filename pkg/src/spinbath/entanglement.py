"""Concurrence (general eigenvalue recipe and closed forms) and its
entanglement-entropy image."""
from __future__ import annotations

import numpy as np

from .core import InternalConsistencyError, check_density_matrix

_CLAMP = 1e-10

# sigma_y (x) sigma_y; real in this basis.
_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)


def concurrence(rho: np.ndarray) -> float:
    """Two-qubit concurrence from the spectrum of rho times its spin flip.

    The non-Hermitian product is handled through an equivalent Hermitian
    factorization: with rho = L L^dag from its spectral decomposition,
    the sqrt-eigenvalues of rho * rho_tilde are the singular values of
    L^T (sigma_y (x) sigma_y) L. Working with singular values keeps
    exact-zero eigenvalues at machine precision instead of sqrt(eps).
    """
    rho = np.asarray(rho, dtype=complex)
    check_density_matrix(rho, herm_tol=1e-9, trace_tol=1e-9, psd_tol=1e-8)
    rho = 0.5 * (rho + rho.conj().T)
    evals, vecs = np.linalg.eigh(rho)
    if evals.min() < -_CLAMP:
        raise InternalConsistencyError(
            f"density eigenvalue {evals.min()} below round-off clamp {-_CLAMP}"
        )
    factor = vecs * np.sqrt(np.clip(evals, 0.0, None))
    lam_sqrt = np.linalg.svd(factor.T @ _FLIP @ factor, compute_uv=False)
    return float(max(0.0, lam_sqrt[0] - lam_sqrt[1] - lam_sqrt[2] - lam_sqrt[3]))


def concurrence_closed_two_baths(r1: complex, r2: complex) -> float:
    """Concurrence of any maximally entangled pair state dephasing in two
    separate baths: the product of the factor moduli."""
    return float(abs(r1) * abs(r2))


def concurrence_closed_common(bell_index: int, r12p: complex, r12m: complex) -> float:
    """Concurrence of a maximally entangled pair state in a shared bath.

    The parallel states (indices 1, 3) follow |r12p|; the antiparallel
    states (2, 4) follow |r12m|.
    """
    if bell_index in (1, 3):
        return float(abs(r12p))
    if bell_index in (2, 4):
        return float(abs(r12m))
    raise ValueError(f"Bell-state index must be 1..4, got {bell_index}")


def entanglement_entropy_from_concurrence(c: float) -> float:
    """Binary-entropy image of the concurrence, in bits.

    E = h((1 + sqrt(1 - c^2)) / 2), monotone increasing on [0, 1] with
    E(0) = 0 and E(1) = 1.
    """
    if c < -1e-12 or c > 1.0 + 1e-12:
        raise ValueError(f"concurrence must lie in [0, 1], got {c}")
    c = min(max(c, 0.0), 1.0)
    x = 0.5 * (1.0 + np.sqrt(1.0 - c * c))
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1.0 - x) * np.log2(1.0 - x))
