"""Complex decoherence factors and their Gaussian-envelope rate.

Each factor is a product over bath spins of a convex combination of two
unit-modulus phases, so its modulus never exceeds 1 and it equals 1 at
t = 0. All factor functions broadcast over a time grid: passing an array
of times returns an array of factors.
"""
from __future__ import annotations

import numpy as np

from .core import Bath, DecoherenceFactors

# Effective-frequency selectors accepted by gaussian_rate.
_SEPARATE_SELECTORS = ("omega",)
_COMMON_SELECTORS = ("omega1", "omega2", "plus", "minus")


def _weights_and_freqs(bath: Bath):
    p = np.array([abs(s.alpha) ** 2 for s in bath.spins])
    q = np.array([abs(s.beta) ** 2 for s in bath.spins])
    return p, q


def _phase_product(p: np.ndarray, q: np.ndarray, w: np.ndarray, t):
    """prod_k (p_k e^{-2i w_k t} + q_k e^{+2i w_k t}), broadcast over t."""
    t_arr = np.asarray(t, dtype=float)
    if p.size == 0:
        out = np.ones(t_arr.shape, dtype=complex)
        return out[()] if t_arr.ndim == 0 else out
    phase = np.exp(-2j * np.multiply.outer(w, t_arr))
    terms = p.reshape(p.shape + (1,) * t_arr.ndim) * phase + q.reshape(
        q.shape + (1,) * t_arr.ndim
    ) * np.conj(phase)
    out = np.prod(terms, axis=0)
    return out[()] if t_arr.ndim == 0 else out


def factor_separate(bath: Bath, t):
    """Decoherence factor of a single separate bath at time(s) t."""
    if bath.is_common:
        raise ValueError("factor_separate requires a separate bath")
    p, q = _weights_and_freqs(bath)
    w = np.array([s.omega for s in bath.spins])
    return _phase_product(p, q, w, t)


def factor_common_single(bath: Bath, which: int, t):
    """Per-spin factor r1 or r2 of a shared bath (which = 1 or 2)."""
    if not bath.is_common:
        raise ValueError("factor_common_single requires a common bath")
    if which not in (1, 2):
        raise ValueError(f"which must be 1 or 2, got {which}")
    p, q = _weights_and_freqs(bath)
    w = np.array([s.omega if which == 1 else s.omega2 for s in bath.spins])
    return _phase_product(p, q, w, t)


def factor_common_pm(bath: Bath, sign, t):
    """Joint factor of a shared bath at effective frequency w1 +/- w2."""
    if not bath.is_common:
        raise ValueError("factor_common_pm requires a common bath")
    if sign in ("+", 1, +1):
        s = 1.0
    elif sign in ("-", -1):
        s = -1.0
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    p, q = _weights_and_freqs(bath)
    w = np.array([spin.omega + s * spin.omega2 for spin in bath.spins])
    return _phase_product(p, q, w, t)


def gaussian_rate(bath: Bath, selector: str = "omega") -> float:
    """Rate a of the large-bath Gaussian envelope of the decoherence factor.

    a = 16 sum_k |alpha_k|^2 |beta_k|^2 w_eff,k^2. The envelope with this
    rate describes the squared modulus, |r(t)|^2 ~ e^{-a t^2}; the plain
    modulus decays as e^{-a t^2 / 2}. The selector picks
    the effective frequency per spin: "omega" for a separate bath;
    "omega1", "omega2", "plus" (w1+w2) or "minus" (w1-w2) for a common one.
    """
    if bath.is_common:
        if selector not in _COMMON_SELECTORS:
            raise ValueError(
                f"selector {selector!r} invalid for a common bath; "
                f"use one of {_COMMON_SELECTORS}"
            )
    else:
        if selector not in _SEPARATE_SELECTORS:
            raise ValueError(
                f"selector {selector!r} invalid for a separate bath; use 'omega'"
            )
    if len(bath) == 0:
        return 0.0
    p, q = _weights_and_freqs(bath)
    if selector in ("omega", "omega1"):
        w = np.array([s.omega for s in bath.spins])
    elif selector == "omega2":
        w = np.array([s.omega2 for s in bath.spins])
    elif selector == "plus":
        w = np.array([s.omega + s.omega2 for s in bath.spins])
    else:
        w = np.array([s.omega - s.omega2 for s in bath.spins])
    return float(16.0 * np.sum(p * q * w**2))


def factors_two_baths(bath1: Bath, bath2: Bath, t: float) -> DecoherenceFactors:
    """Factors for the two-separate-baths scenario at one time."""
    return DecoherenceFactors(
        r1=complex(factor_separate(bath1, t)),
        r2=complex(factor_separate(bath2, t)),
        time=float(t),
    )


def factors_common(bath: Bath, t: float) -> DecoherenceFactors:
    """All four factors for the shared-bath scenario at one time."""
    return DecoherenceFactors(
        r1=complex(factor_common_single(bath, 1, t)),
        r2=complex(factor_common_single(bath, 2, t)),
        r12_plus=complex(factor_common_pm(bath, "+", t)),
        r12_minus=complex(factor_common_pm(bath, "-", t)),
        time=float(t),
    )
