import math

import numpy as np
import pytest

from casimir_swing import (
    CoupledSystem,
    ModeIndex,
    ParticleNumberSeries,
    RotationProfile,
    build_coupled_system,
    coupling_weight,
    extract_slow_amplitudes,
    fit_growth_rate,
    integrate_full,
    max_timestep,
    mode_frequency,
    oscillator_energy,
    particle_number_series,
    slow_amplitude_series,
)
from casimir_swing.direct import DirectState

M111 = ModeIndex(1, 1, 1)
M121 = ModeIndex(1, 2, 1)


@pytest.fixture(scope="module")
def sys2():
    return build_coupled_system(2, 1)


@pytest.fixture(scope="module")
def drive(omega_res):
    return RotationProfile.sinusoidal(0.01, omega_res)


@pytest.fixture(scope="module")
def silent(omega_res):
    return RotationProfile.sinusoidal(0.0, omega_res)


class TestIntegrateFull:
    def test_free_evolution_matches_closed_form(self, sys2, silent):
        r = integrate_full(sys2, silent, M111, 10.0, 5e-4, sample_every=500)
        w = sys2.omegas[0]
        exact = np.exp(-1j * w * r.t) / math.sqrt(2 * w)
        assert np.max(np.abs(r.c[:, 0] - exact)) <= 1e-10
        assert np.all(r.c[:, 1:] == 0)
        assert np.all(r.cdot[:, 1:] == 0)

    def test_free_evolution_conserves_energy(self, sys2, silent):
        r = integrate_full(sys2, silent, M121, 10.0, 5e-4, sample_every=100)
        en = oscillator_energy(r)
        assert np.max(np.abs(en / en[0] - 1)) <= 1e-12

    def test_vacuum_initial_conditions(self, sys2, drive):
        r = integrate_full(sys2, drive, M121, 0.0, 0.005)
        k = sys2.index_of(M121)
        w = sys2.omegas[k]
        assert r.c[0, k] == 1 / math.sqrt(2 * w)
        assert r.cdot[0, k] == -1j * math.sqrt(w / 2)
        assert np.count_nonzero(r.c[0]) == 1

    def test_deterministic_bitwise(self, sys2, drive):
        a = integrate_full(sys2, drive, M111, 5.0, 0.005, sample_every=10)
        b = integrate_full(sys2, drive, M111, 5.0, 0.005, sample_every=10)
        assert np.array_equal(a.c, b.c)
        assert np.array_equal(a.cdot, b.cdot)
        assert np.array_equal(a.t, b.t)

    def test_sample_grid(self, sys2, drive):
        r = integrate_full(sys2, drive, M111, 0.5, 0.005, sample_every=30)
        # 100 steps: start, every 30th, and the non-aligned final step
        assert np.array_equal(r.t / 0.005, [0, 30, 60, 90, 100])

    def test_rejects_coarse_step_naming_bound(self, sys2, drive):
        bound = max_timestep(sys2, drive)
        with pytest.raises(ValueError) as err:
            integrate_full(sys2, drive, M111, 1.0, bound * 1.5)
        assert f"{bound:.6g}" in str(err.value)

    def test_bound_uses_drive_frequency_when_faster(self, sys2):
        fast = RotationProfile.sinusoidal(0.001, 50.0)
        assert max_timestep(sys2, fast) == pytest.approx(2 * math.pi / (20 * 50.0))

    def test_constant_acceleration_bound_ignores_drive(self, sys2):
        prof = RotationProfile.constant_acceleration(1e-5)
        assert max_timestep(sys2, prof) == pytest.approx(
            2 * math.pi / (20 * sys2.omegas.max())
        )

    def test_rejects_unknown_pump_and_bad_args(self, sys2, drive):
        with pytest.raises(ValueError):
            integrate_full(sys2, drive, ModeIndex(5, 5, 1), 1.0, 0.005)
        with pytest.raises(ValueError):
            integrate_full(sys2, drive, M111, -1.0, 0.005)
        with pytest.raises(ValueError):
            integrate_full(sys2, drive, M111, 1.0, 0.005, sample_every=0)

    def test_nz_blocks_evolve_independently(self, drive):
        # stack two blocks into one hand-built system: the cross-block
        # weights vanish identically, so the nz=1 components must come out
        # bit-identical to the standalone nz=1 run
        b1 = build_coupled_system(2, 1)
        b2 = build_coupled_system(2, 2)
        basis = b1.basis + b2.basis
        omegas = np.concatenate([b1.omegas, b2.omegas])
        M = len(basis)
        dense = np.zeros((M, M))
        weights = {}
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                w = coupling_weight(a, b)
                if w != 0.0:
                    weights[(i, j)] = w
                    dense[i, j] = w
        assert np.all(dense[: b1.size, b1.size:] == 0)
        assert np.all(dense[b1.size:, : b1.size] == 0)
        stacked = CoupledSystem(basis, omegas, weights, dense, 1.0, 1)

        alone = integrate_full(b1, drive, M111, 20.0, 0.005, sample_every=100)
        both = integrate_full(stacked, drive, M111, 20.0, 0.005, sample_every=100)
        assert np.array_equal(both.c[:, : b1.size], alone.c)
        assert np.array_equal(both.cdot[:, : b1.size], alone.cdot)
        assert np.all(both.c[:, b1.size:] == 0)


class TestExtractSlowAmplitudes:
    def test_pure_annihilation_component(self):
        w = np.array([3.7])
        t = 2.1
        c = np.exp(-1j * w * t) / np.sqrt(2 * w)
        state = DirectState(c, -1j * w * c, t)
        beta, alpha = extract_slow_amplitudes(state, w)
        assert abs(beta[0]) <= 1e-15
        assert alpha[0] == pytest.approx(1 / math.sqrt(2 * w[0]), rel=1e-12)

    def test_pure_creation_component(self):
        w = np.array([2.0, 5.0])
        t = 0.8
        c = np.exp(1j * w * t)
        state = DirectState(c, 1j * w * c, t)
        beta, alpha = extract_slow_amplitudes(state, w)
        assert np.allclose(beta, 1.0, atol=1e-12)
        assert np.max(np.abs(alpha)) <= 1e-12

    def test_vacuum_start(self, sys2, drive):
        r = integrate_full(sys2, drive, M111, 0.0, 0.005)
        beta, alpha = extract_slow_amplitudes(r.state(0), sys2.omegas)
        assert np.max(np.abs(beta)) <= 1e-15
        expected = np.zeros(4)
        expected[0] = 1 / math.sqrt(2 * sys2.omegas[0])
        assert np.allclose(alpha, expected, atol=1e-15)

    def test_series_matches_per_state(self, sys2, drive):
        r = integrate_full(sys2, drive, M111, 3.0, 0.005, sample_every=100)
        beta_s, alpha_s = slow_amplitude_series(r)
        for i in (0, 3, len(r.t) - 1):
            beta, alpha = extract_slow_amplitudes(r.state(i), sys2.omegas)
            assert np.allclose(beta_s[i], beta, rtol=0, atol=1e-14)
            assert np.allclose(alpha_s[i], alpha, rtol=0, atol=1e-14)

    def test_rejects_nonpositive_frequency(self):
        state = DirectState(np.array([1.0 + 0j]), np.array([0j]), 0.0)
        with pytest.raises(ValueError):
            extract_slow_amplitudes(state, np.array([0.0]))


class TestParticleNumberSeries:
    def test_zero_at_start_and_without_drive(self, sys2, silent):
        runs = [integrate_full(sys2, silent, p, 10.0, 0.005, 100) for p in (M111, M121)]
        ns = particle_number_series(runs, M111)
        assert ns.values[0] <= 1e-25
        assert np.max(ns.values) <= 1e-20
        assert np.array_equal(ns.tau, 0.0 * ns.t)

    def test_pump_bookkeeping_errors(self, sys2, drive, trio):
        r1 = integrate_full(sys2, drive, M111, 5.0, 0.005, 10)
        r2 = integrate_full(sys2, drive, M121, 5.0, 0.005, 10)
        with pytest.raises(ValueError, match="duplicate"):
            particle_number_series([r1, r1], M111)
        with pytest.raises(ValueError, match="missing"):
            particle_number_series([r1, r2], M111, pumps=trio)
        short = integrate_full(sys2, drive, M121, 4.0, 0.005, 10)
        with pytest.raises(ValueError, match="sample grid"):
            particle_number_series([r1, short], M111)
        with pytest.raises(ValueError):
            particle_number_series([], M111)

    def test_constant_acceleration_needs_explicit_scale(self, sys2):
        prof = RotationProfile.constant_acceleration(1e-5)
        r = integrate_full(sys2, prof, M111, 5.0, 0.005, 10)
        with pytest.raises(ValueError, match="slow_scale"):
            particle_number_series([r], M111)
        ns = particle_number_series([r], M111, slow_scale=0.01)
        assert np.array_equal(ns.tau, 0.01 * ns.t)

    def test_difference_drive_transfers_without_creating(self):
        # drive at the frequency gap: population moves between the modes
        # while the creation amplitudes stay at the percent level, so the
        # vacuum is not pumped
        om_diff = (math.sqrt(6) - math.sqrt(3)) * math.pi
        sys2 = build_coupled_system(2, 1)
        prof = RotationProfile.sinusoidal(0.01, om_diff)
        r = integrate_full(sys2, prof, M111, 100.0, 0.002, sample_every=100)
        ns = particle_number_series([r], M111)
        assert np.max(ns.values) < 1e-3
        _, alpha = slow_amplitude_series(r)
        transferred = np.abs(alpha[:, sys2.index_of(M121)]).max()
        assert transferred > 0.1  # comparable to the initial amplitude 0.303


class TestFitGrowthRate:
    def test_exact_for_generated_sinh_square(self):
        lam = 2.156952
        tau = np.linspace(0, 2.5, 400)
        series = ParticleNumberSeries(M111, tau / 0.01, tau, np.sinh(lam * tau) ** 2)
        fit = fit_growth_rate(series, (0.5, 2.0))
        assert fit.lambda_fit == pytest.approx(lam, abs=1e-6)
        assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
        assert fit.window == (0.5, 2.0)

    def test_zero_series(self):
        tau = np.linspace(0, 2, 50)
        series = ParticleNumberSeries(M111, tau, tau, np.zeros_like(tau))
        fit = fit_growth_rate(series, (0.2, 1.8))
        assert fit.lambda_fit == 0.0
        assert fit.r_squared == 1.0

    def test_window_validation(self):
        tau = np.linspace(0, 2, 50)
        series = ParticleNumberSeries(M111, tau, tau, np.ones_like(tau))
        with pytest.raises(ValueError, match="at least 3"):
            fit_growth_rate(series, (1.0, 1.05))
        with pytest.raises(ValueError):
            fit_growth_rate(series, (1.5, 0.5))

    def test_rejects_negative_values(self):
        tau = np.linspace(0, 2, 50)
        series = ParticleNumberSeries(M111, tau, tau, np.full_like(tau, -1e-3))
        with pytest.raises(ValueError, match="nonnegative"):
            fit_growth_rate(series, (0.5, 1.5))

    def test_r_squared_bounded_for_noisy_series(self):
        rng = np.random.default_rng(3)
        tau = np.linspace(0, 2, 200)
        series = ParticleNumberSeries(M111, tau, tau, rng.uniform(0, 1, tau.size))
        fit = fit_growth_rate(series, (0.0, 2.0))
        assert 0.0 <= fit.r_squared <= 1.0
