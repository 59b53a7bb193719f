import time

import numpy as np
import pytest

from spinbath import Bath, bath_spin_from_angles

SESSION_START = time.monotonic()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.monotonic() - SESSION_START
    terminalreporter.write_line(f"full suite wall time: {elapsed:.1f} s (budget 60 s)")


def random_separate_bath(rng: np.random.Generator, n: int, label: str = "bath-1",
                         omega_lo: float = 0.0, omega_hi: float = 1.0) -> Bath:
    """Random bath built directly from angles, independent of the sampler."""
    spins = tuple(
        bath_spin_from_angles(
            rng.uniform(0.0, np.pi),
            rng.uniform(0.0, 2.0 * np.pi),
            rng.uniform(omega_lo, omega_hi),
        )
        for _ in range(n)
    )
    return Bath(spins, label=label)


def random_common_bath(rng: np.random.Generator, n: int,
                       omega_lo: float = 0.0, omega_hi: float = 1.0,
                       matched: bool = False) -> Bath:
    spins = []
    for _ in range(n):
        w1 = rng.uniform(omega_lo, omega_hi)
        w2 = w1 if matched else rng.uniform(omega_lo, omega_hi)
        spins.append(
            bath_spin_from_angles(
                rng.uniform(0.0, np.pi), rng.uniform(0.0, 2.0 * np.pi), w1, w2
            )
        )
    return Bath(tuple(spins), label="common")


@pytest.fixture
def rng():
    return np.random.default_rng(20230817)
