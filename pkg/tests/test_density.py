import numpy as np
import pytest

from spinbath import (
    Bath,
    PairState,
    check_density_matrix,
    evolve_full_state,
    factors_common,
    factors_two_baths,
    make_bell_state,
    partial_trace_pair,
    rho_common_bath,
    rho_from_factors,
    rho_time_sweep,
    rho_two_baths,
    spin_flip,
)

from conftest import random_common_bath, random_separate_bath


def random_pair_state(rng):
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    v /= np.linalg.norm(v)
    return PairState(tuple(v))


def random_factor(rng):
    return rng.uniform(0, 1) * np.exp(1j * rng.uniform(0, 2 * np.pi))


class TestRhoTwoBaths:
    def test_unit_factors_give_pure_projector(self):
        psi = make_bell_state(1)
        rho = rho_two_baths(psi, 1.0, 1.0)
        np.testing.assert_allclose(rho, psi.projector(), atol=1e-15)
        assert np.linalg.matrix_rank(rho, tol=1e-10) == 1

    def test_zero_factors_fully_dephase(self):
        rho = rho_two_baths(make_bell_state(1), 0.0, 0.0)
        np.testing.assert_allclose(rho, np.diag([0.5, 0, 0, 0.5]), atol=1e-15)

    def test_matches_brute_force_partial_trace(self, rng):
        psi = random_pair_state(rng)
        b1 = random_separate_bath(rng, 6, label="bath-1")
        b2 = random_separate_bath(rng, 6, label="bath-2")
        t = 0.3
        f = factors_two_baths(b1, b2, t)
        analytic = rho_two_baths(psi, f.r1, f.r2)
        brute = partial_trace_pair(evolve_full_state(psi, (b1, b2), t))
        np.testing.assert_allclose(analytic, brute, atol=1e-12)

    def test_rejects_oversized_factor(self):
        with pytest.raises(ValueError):
            rho_two_baths(make_bell_state(1), 1.2, 0.5)

    def test_one_coupled_special_case_still_loses_entanglement(self, rng):
        # Second spin uncoupled: its factor stays 1, yet coherence decays.
        from spinbath import concurrence

        bath = random_separate_bath(rng, 30)
        psi = make_bell_state(1)
        t = 1.5 / np.sqrt(sum(s.omega**2 for s in bath.spins))
        f = factors_two_baths(bath, Bath((), label="bath-2"), t)
        assert f.r2 == 1.0 + 0.0j
        c = concurrence(rho_two_baths(psi, f.r1, f.r2))
        assert c < 1.0
        assert c == pytest.approx(abs(f.r1), abs=1e-9)


class TestRhoCommonBath:
    def test_unit_factors_give_pure_projector(self, rng):
        psi = random_pair_state(rng)
        rho = rho_common_bath(psi, 1.0, 1.0, 1.0, 1.0)
        np.testing.assert_allclose(rho, psi.projector(), atol=1e-15)

    def test_antiparallel_state_sees_only_minus_factor(self):
        from spinbath import concurrence

        rho = rho_common_bath(make_bell_state(2), 0.3, 0.1j, 0.5, 1.0)
        assert concurrence(rho) == pytest.approx(1.0, abs=1e-12)

    def test_matches_brute_force_partial_trace(self, rng):
        psi = random_pair_state(rng)
        bath = random_common_bath(rng, 6)
        t = 0.25
        f = factors_common(bath, t)
        analytic = rho_common_bath(psi, f.r1, f.r2, f.r12_plus, f.r12_minus)
        brute = partial_trace_pair(evolve_full_state(psi, bath, t))
        np.testing.assert_allclose(analytic, brute, atol=1e-12)


class TestSpinFlip:
    def test_bell_projectors_invariant(self):
        for i in (1, 2, 3, 4):
            rho = make_bell_state(i).projector()
            np.testing.assert_allclose(spin_flip(rho), rho, atol=1e-15)

    def test_flips_product_state(self):
        rho = np.diag([1.0, 0.0, 0.0, 0.0]).astype(complex)
        np.testing.assert_allclose(spin_flip(rho), np.diag([0, 0, 0, 1.0]), atol=1e-15)

    def test_dephased_matrix_layout(self, rng):
        # Spin flip of the two-bath matrix: amplitudes swap across the
        # anti-diagonal and single-factor coherences pick up a sign.
        a = random_pair_state(rng).amplitudes
        r1, r2 = random_factor(rng), random_factor(rng)
        auu, aud, adu, add = a
        got = spin_flip(rho_two_baths(PairState(a), r1, r2))
        want = np.empty((4, 4), dtype=complex)
        want[0] = [abs(add) ** 2, -adu * np.conj(add) * r2,
                   -aud * np.conj(add) * r1, auu * np.conj(add) * r1 * r2]
        want[1] = [-np.conj(adu) * add * np.conj(r2), abs(adu) ** 2,
                   aud * np.conj(adu) * r1 * np.conj(r2), -auu * np.conj(adu) * r1]
        want[2] = [-np.conj(aud) * add * np.conj(r1),
                   np.conj(aud) * adu * np.conj(r1) * r2,
                   abs(aud) ** 2, -auu * np.conj(aud) * r2]
        want[3] = [np.conj(auu) * add * np.conj(r1) * np.conj(r2),
                   -np.conj(auu) * adu * np.conj(r1),
                   -np.conj(auu) * aud * np.conj(r2), abs(auu) ** 2]
        np.testing.assert_allclose(got, want, atol=1e-14)

    def test_involution(self, rng):
        rho = rho_two_baths(random_pair_state(rng), random_factor(rng), random_factor(rng))
        np.testing.assert_allclose(spin_flip(spin_flip(rho)), rho, atol=1e-14)

    def test_preserves_trace_and_hermiticity(self, rng):
        rho = rho_two_baths(random_pair_state(rng), random_factor(rng), random_factor(rng))
        flipped = spin_flip(rho)
        assert np.trace(flipped) == pytest.approx(1.0, abs=1e-13)
        np.testing.assert_allclose(flipped, flipped.conj().T, atol=1e-14)


class TestRhoTimeSweep:
    def test_zero_grid_returns_projector(self, rng):
        psi = random_pair_state(rng)
        b1 = random_separate_bath(rng, 3)
        b2 = random_separate_bath(rng, 3, label="bath-2")
        [rho] = rho_time_sweep(psi, (b1, b2), [0.0])
        np.testing.assert_allclose(rho, psi.projector(), atol=1e-14)

    def test_concurrence_follows_factor_moduli(self, rng):
        from spinbath import concurrence, factor_separate

        psi = make_bell_state(1)
        b1 = random_separate_bath(rng, 8)
        b2 = random_separate_bath(rng, 8, label="bath-2")
        grid = np.linspace(0.0, 2.0, 100)
        for t, rho in zip(grid, rho_time_sweep(psi, (b1, b2), grid)):
            want = abs(factor_separate(b1, float(t))) * abs(factor_separate(b2, float(t)))
            assert concurrence(rho) == pytest.approx(want, abs=1e-10)

    def test_every_matrix_matches_oracle(self, rng):
        psi = random_pair_state(rng)
        b1 = random_separate_bath(rng, 5)
        b2 = random_separate_bath(rng, 5, label="bath-2")
        grid = np.linspace(0.0, 1.0, 10)
        for t, rho in zip(grid, rho_time_sweep(psi, (b1, b2), grid)):
            brute = partial_trace_pair(evolve_full_state(psi, (b1, b2), float(t)))
            np.testing.assert_allclose(rho, brute, atol=1e-12)

    def test_unsorted_grid_rejected(self, rng):
        psi = make_bell_state(1)
        bath = random_common_bath(rng, 2)
        with pytest.raises(ValueError):
            rho_time_sweep(psi, bath, [0.5, 0.1])
        with pytest.raises(ValueError):
            rho_time_sweep(psi, bath, [])


class TestDensityInvariants:
    @pytest.mark.parametrize("scenario", ["two-bath", "common"])
    def test_outputs_are_valid_density_matrices(self, rng, scenario):
        for _ in range(25):
            psi = random_pair_state(rng)
            if scenario == "two-bath":
                rho = rho_two_baths(psi, random_factor(rng), random_factor(rng))
            else:
                bath = random_common_bath(rng, 5)
                rho = rho_from_factors(psi, factors_common(bath, rng.uniform(0, 2)))
            check_density_matrix(rho, herm_tol=1e-12, trace_tol=1e-12, psd_tol=1e-10)

    def test_populations_never_move(self, rng):
        psi = random_pair_state(rng)
        b1 = random_separate_bath(rng, 4)
        b2 = random_separate_bath(rng, 4, label="bath-2")
        expected = np.abs(psi.vector) ** 2
        for rho in rho_time_sweep(psi, (b1, b2), np.linspace(0, 3, 7)):
            np.testing.assert_allclose(np.diag(rho).real, expected, atol=1e-14)
