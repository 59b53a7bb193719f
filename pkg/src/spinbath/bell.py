"""CHSH machinery: measurement operators in the x-z plane, correlators,
the S combination evaluated by trace, and its closed forms for the four
maximally entangled initial states."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DecoherenceFactors, InternalConsistencyError

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

TSIRELSON = 2.0 * math.sqrt(2.0)

_IMAG_TOL = 1e-9


@dataclass(frozen=True)
class AngleSet:
    """The four analyzer angles entering the CHSH combination."""

    theta1: float
    theta2: float
    theta1p: float
    theta2p: float

    def __post_init__(self):
        for name in ("theta1", "theta2", "theta1p", "theta2p"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


def canonical_angles() -> AngleSet:
    """The angle choice for which the cosine and sine weights both equal
    sqrt(2): (0, pi/4, pi/2, 3*pi/4)."""
    return AngleSet(0.0, math.pi / 4.0, math.pi / 2.0, 3.0 * math.pi / 4.0)


def measurement_operator(theta: float) -> np.ndarray:
    """Spin projection along an x-z-plane direction: cos(theta) sigma_z +
    sin(theta) sigma_x. Hermitian, traceless, eigenvalues +/-1."""
    return math.cos(theta) * SIGMA_Z + math.sin(theta) * SIGMA_X


def correlator(theta1: float, theta2: float, rho: np.ndarray) -> float:
    """E(theta1, theta2) = Tr{ c1(theta1) (x) c2(theta2) rho }."""
    op = np.kron(measurement_operator(theta1), measurement_operator(theta2))
    val = complex(np.trace(op @ np.asarray(rho, dtype=complex)))
    if abs(val.imag) > _IMAG_TOL:
        raise InternalConsistencyError(
            f"correlator has imaginary residue {val.imag}; matrix assembly is broken"
        )
    return float(val.real)


def chsh_S(angles: AngleSet, rho: np.ndarray) -> float:
    """The CHSH combination of four correlators; |S| > 2 rules out local
    realism, quantum mechanics caps it at 2*sqrt(2)."""
    s = (
        correlator(angles.theta1, angles.theta2, rho)
        - correlator(angles.theta1, angles.theta2p, rho)
        + correlator(angles.theta1p, angles.theta2p, rho)
        + correlator(angles.theta1p, angles.theta2, rho)
    )
    if abs(s) > TSIRELSON + 1e-9:
        raise InternalConsistencyError(f"|S| = {abs(s)} exceeds the quantum bound")
    return s


def ab_coefficients(angles: AngleSet) -> tuple[float, float]:
    """Cosine and sine weights (A, B) of the closed-form S expressions."""
    c1, c2 = math.cos(angles.theta1), math.cos(angles.theta2)
    c1p, c2p = math.cos(angles.theta1p), math.cos(angles.theta2p)
    s1, s2 = math.sin(angles.theta1), math.sin(angles.theta2)
    s1p, s2p = math.sin(angles.theta1p), math.sin(angles.theta2p)
    a = c1 * c2 - c1 * c2p + c1p * c2p + c1p * c2
    b = s1 * s2 - s1 * s2p + s1p * s2p + s1p * s2
    return a, b


def chsh_closed_form(
    bell_index: int,
    scenario: str,
    angles: AngleSet,
    factors: DecoherenceFactors,
) -> float:
    """Closed-form S for maximally entangled initial state ``bell_index``.

    Two separate baths use Re{r1 r2} (parallel states 1, 3) and
    Re{r1 r2*} (antiparallel states 2, 4); a shared bath replaces those
    with Re{r12+} and Re{r12-}.
    """
    if bell_index not in (1, 2, 3, 4):
        raise ValueError(f"Bell-state index must be 1..4, got {bell_index}")
    if scenario in ("two-bath", "one-coupled"):
        if factors.is_common:
            raise ValueError("common-bath factors passed to a separate-bath scenario")
        parallel = (factors.r1 * factors.r2).real
        antiparallel = (factors.r1 * np.conj(factors.r2)).real
    elif scenario == "common":
        if not factors.is_common:
            raise ValueError("separate-bath factors passed to the common-bath scenario")
        parallel = factors.r12_plus.real
        antiparallel = factors.r12_minus.real
    else:
        raise ValueError(f"unknown scenario {scenario!r}")
    a, b = ab_coefficients(angles)
    if bell_index == 1:
        return a + b * parallel
    if bell_index == 2:
        return -a + b * antiparallel
    if bell_index == 3:
        return a - b * parallel
    return -a - b * antiparallel
