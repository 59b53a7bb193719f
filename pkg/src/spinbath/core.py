"""Domain types for two central spins dephasing in spin-1/2 baths.

All matrices and amplitude vectors use the fixed product-basis ordering
(up-up, up-down, down-up, down-down). Every type here is an immutable
value object; validation happens at construction time.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-9

BASIS_LABELS = ("uu", "ud", "du", "dd")

SQRT2 = math.sqrt(2.0)


class InternalConsistencyError(RuntimeError):
    """Numerical residue exceeded the threshold separating round-off from bugs."""


class ResourceLimitError(RuntimeError):
    """Requested Hilbert-space size exceeds the hard qubit budget."""


@dataclass(frozen=True)
class BathSpin:
    """One environmental spin-1/2: its initial orientation and coupling.

    ``omega2`` is the coupling to the second central spin and is set only
    when both central spins share the same bath.
    """

    alpha: complex
    beta: complex
    omega: float
    omega2: float | None = None

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(
                f"bath spin amplitudes not normalized: |alpha|^2+|beta|^2 = {norm!r}"
            )


def bath_spin_from_angles(
    theta: float, phi: float, omega: float, omega2: float | None = None
) -> BathSpin:
    """Build a bath spin pointing along spherical direction (theta, phi).

    alpha = cos(theta/2) e^{-i phi/2}, beta = sin(theta/2) e^{i phi/2},
    so normalization holds exactly by construction.
    """
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    if not 0.0 <= phi <= 2.0 * math.pi:
        raise ValueError(f"phi must lie in [0, 2*pi], got {phi}")
    half = theta / 2.0
    phase = np.exp(-0.5j * phi)
    return BathSpin(
        alpha=complex(math.cos(half) * phase),
        beta=complex(math.sin(half) * np.conj(phase)),
        omega=omega,
        omega2=omega2,
    )


@dataclass(frozen=True)
class Bath:
    """Ordered collection of bath spins with a scenario tag.

    label "common" means every spin couples to both central spins and
    carries omega2; any other label is a separate bath (no omega2).
    An empty bath is the uncoupled limit and gives r(t) = 1 for all t.
    """

    spins: tuple[BathSpin, ...]
    label: str = "bath-1"

    def __post_init__(self):
        object.__setattr__(self, "spins", tuple(self.spins))
        if self.is_common:
            if any(s.omega2 is None for s in self.spins):
                raise ValueError("common bath requires omega2 on every spin")
        else:
            if any(s.omega2 is not None for s in self.spins):
                raise ValueError(f"separate bath {self.label!r} must not carry omega2")

    @property
    def is_common(self) -> bool:
        return self.label == "common"

    def __len__(self) -> int:
        return len(self.spins)

    def concat(self, other: "Bath") -> "Bath":
        """Concatenate two baths of the same kind into one."""
        if self.is_common != other.is_common:
            raise ValueError("cannot concatenate a common and a separate bath")
        return Bath(self.spins + other.spins, label=self.label)


@dataclass(frozen=True)
class PairState:
    """Pure state of the central pair: four complex amplitudes, unit norm."""

    amplitudes: tuple[complex, complex, complex, complex]

    def __post_init__(self):
        amps = tuple(complex(a) for a in self.amplitudes)
        if len(amps) != 4:
            raise ValueError("PairState needs exactly four amplitudes")
        norm = sum(abs(a) ** 2 for a in amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"pair amplitudes not normalized: sum |a|^2 = {norm!r}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.amplitudes, dtype=complex)

    def projector(self) -> np.ndarray:
        v = self.vector
        return np.outer(v, v.conj())


def make_bell_state(index: int) -> PairState:
    """Return one of the four maximally entangled pair states.

    1: (|uu> + |dd>)/sqrt2   2: (|ud> + |du>)/sqrt2
    3: (|uu> - |dd>)/sqrt2   4: (|ud> - |du>)/sqrt2
    """
    s = 1.0 / SQRT2
    table = {
        1: (s, 0.0, 0.0, s),
        2: (0.0, s, s, 0.0),
        3: (s, 0.0, 0.0, -s),
        4: (0.0, s, -s, 0.0),
    }
    if index not in table:
        raise ValueError(f"Bell-state index must be 1..4, got {index}")
    return PairState(tuple(complex(a) for a in table[index]))


@dataclass(frozen=True)
class DecoherenceFactors:
    """Complex coherence multipliers at one instant.

    r12_plus / r12_minus are present only in the common-bath scenario,
    where they govern the parallel (uu,dd) and antiparallel (ud,du)
    coherences respectively.
    """

    r1: complex
    r2: complex
    r12_plus: complex | None = None
    r12_minus: complex | None = None
    time: float = 0.0

    def __post_init__(self):
        for name in ("r1", "r2", "r12_plus", "r12_minus"):
            val = getattr(self, name)
            if val is not None and abs(val) > 1.0 + 1e-9:
                raise ValueError(f"|{name}| = {abs(val)} exceeds 1")

    @property
    def is_common(self) -> bool:
        return self.r12_plus is not None and self.r12_minus is not None


def check_density_matrix(
    rho: np.ndarray,
    herm_tol: float = 1e-12,
    trace_tol: float = 1e-12,
    psd_tol: float = 1e-10,
) -> None:
    """Raise ValueError unless rho is a valid 4x4 density matrix."""
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected 4x4 matrix, got shape {rho.shape}")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > herm_tol:
        raise ValueError(f"matrix not Hermitian: max |rho - rho^dag| = {herm}")
    tr = np.trace(rho)
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"trace is {tr}, expected 1")
    evals = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    if evals.min() < -psd_tol:
        raise ValueError(f"matrix not positive semidefinite: min eigenvalue {evals.min()}")
