"""Acceptance gate: quantitative and property-based checks, one test per
criterion, each printing a PASS line with its measured value (visible with
``pytest -rA`` or ``-s``).

Three checks are EXPECTED TO FAIL at the reference drive amplitude 0.01
(criteria 3, 4 and the truncation-stability invariant): the coupled-mode
model itself deviates from its own first-order slow-time prediction by
more than the stated tolerances there.  Off-resonant partners shift the
resonant-pair frequencies by an amplitude-squared amount, which detunes
the pumping and suppresses the growth; the effect shrinks like the
square of the amplitude and every one of those checks passes at
amplitude 0.0025, inside the small-wall-speed regime.  The scaling
diagnostic at the bottom of this module demonstrates exactly that.  The
tolerances are asserted as stated rather than loosened; see README.
"""

import math
import time

import numpy as np
import pytest

from casimir_swing import (
    ModeIndex,
    RotationProfile,
    axis_coupling,
    build_coupled_system,
    build_slow_system,
    find_resonant_pairs,
    fit_growth_rate,
    integrate_full,
    integrate_reduced,
    oscillator_energy,
    particle_number_series,
    particle_numbers,
    solve_three_mode_analytic,
    three_mode_lambda_squared,
)

M111 = ModeIndex(1, 1, 1)
M121 = ModeIndex(1, 2, 1)
M211 = ModeIndex(2, 1, 1)
TRIO = [M111, M121, M211]

EPS = 0.01          # reference drive amplitude
NMAX = 5            # reference truncation
TF = 200.0          # tau = 2
DT = 0.005
SAMPLE = 20
WINDOW = (0.5, 2.0)
LAMBDA_REF = 2.156952  # quoted growth rate of the fundamental trio


def trio_runs(eps, n_max, t_f, omega, dt=DT, sample=SAMPLE):
    system = build_coupled_system(n_max, 1)
    profile = RotationProfile.sinusoidal(eps, omega)
    return [integrate_full(system, profile, p, t_f, dt, sample) for p in TRIO]


def n_series(runs, mode, eps):
    return particle_number_series(runs, mode, pumps=TRIO, slow_scale=eps)


def window_mask(tau):
    return (tau >= WINDOW[0]) & (tau <= WINDOW[1])


@pytest.fixture(scope="module")
def reference_runs(omega_res):
    trio_runs(EPS, 2, 1.0, omega_res)  # absorb one-time kernel compilation
    t0 = time.time()
    runs = trio_runs(EPS, NMAX, TF, omega_res)
    return runs, time.time() - t0


def test_criterion_1_three_mode_rate_squared(omega_res):
    lam2 = three_mode_lambda_squared(omega_res)
    target = math.sqrt(2.0) * math.pi**2 / 3.0
    rel = abs(lam2 - target) / target
    assert rel <= 1e-12, f"lambda^2 = {lam2!r} vs sqrt(2)*pi^2/3 = {target!r}"
    print(f"ACCEPTANCE 1 PASS: lambda^2 rel err = {rel:.2e} (tol 1e-12)")


def test_criterion_2_particle_number_ratios(omega_res, lam):
    worst = 0.0
    for tau_f in (0.5, 1.0, 2.0):
        n = particle_numbers(solve_three_mode_analytic(omega_res, 1.0, tau_f))
        ref = math.sinh(lam * tau_f) ** 2
        worst = max(
            worst,
            abs(n[0] - ref) / ref,
            abs(n[1] - ref / 2) / (ref / 2),
            abs(n[2] - ref / 2) / (ref / 2),
            abs(n[0] - 2 * n[1]) / n[0],
            abs(n[0] - 2 * n[2]) / n[0],
        )
    assert worst <= 1e-10, f"worst ratio error {worst:.3e}"
    print(f"ACCEPTANCE 2 PASS: sinh^2 ratios, worst rel err = {worst:.2e} (tol 1e-10)")


def test_criterion_3_direct_tracks_slow_prediction(reference_runs, lam):
    runs, elapsed = reference_runs
    assert elapsed < 60.0, f"reference run took {elapsed:.1f}s (budget 60s)"
    ns = n_series(runs, M111, EPS)
    mask = window_mask(ns.tau)
    ref = np.sinh(lam * ns.tau[mask]) ** 2
    rel = np.abs(ns.values[mask] - ref) / ref
    fit = fit_growth_rate(ns, WINDOW)
    lam_rel = abs(fit.lambda_fit - LAMBDA_REF) / LAMBDA_REF
    print(
        f"ACCEPTANCE 3: max |N_111/sinh^2 - 1| = {rel.max():.4f} (tol 0.05); "
        f"lambda_fit = {fit.lambda_fit:.6f}, rel err = {lam_rel:.4f} (tol 0.05); "
        f"runtime {elapsed:.1f}s"
    )
    assert rel.max() <= 0.05, (
        f"N_111 deviates from sinh^2(lambda*tau) by up to {rel.max():.1%} on "
        f"tau in {WINDOW} (tol 5%); the deviation is the amplitude-squared "
        "detuning systematic, see the scaling diagnostic"
    )
    assert lam_rel <= 0.05, (
        f"lambda_fit = {fit.lambda_fit:.6f} is {lam_rel:.2%} from {LAMBDA_REF} "
        "(tol 5%); amplitude-squared systematic, see the scaling diagnostic"
    )
    print("ACCEPTANCE 3 PASS")


def test_criterion_4_mode_ratio_in_direct_run(reference_runs):
    runs, _ = reference_runs
    n111 = n_series(runs, M111, EPS).values[-1]
    n121 = n_series(runs, M121, EPS).values[-1]
    ratio = n111 / n121
    print(f"ACCEPTANCE 4: N_111/N_121 at tau=2 is {ratio:.4f} (tol [1.9, 2.1])")
    assert 1.9 <= ratio <= 2.1, (
        f"N_111/N_121 = {ratio:.4f} at tau = 2; the excess over 2 shrinks "
        "with amplitude^2, see the scaling diagnostic"
    )
    print("ACCEPTANCE 4 PASS")


def test_criterion_5_off_resonance_null(omega_res, lam):
    runs = trio_runs(EPS, NMAX, TF, 1.1 * omega_res)
    fit = fit_growth_rate(n_series(runs, M111, EPS), WINDOW)
    assert abs(fit.lambda_fit) < 0.1 * lam, f"off-resonance lambda_fit = {fit.lambda_fit}"
    print(
        f"ACCEPTANCE 5 PASS: off-resonance lambda_fit = {fit.lambda_fit:.2e} "
        f"< {0.1 * lam:.3f}"
    )


def test_criterion_6_constant_acceleration_null(omega_res, lam):
    # matched peak angular speed: alpha * t_f = eps * Omega
    system = build_coupled_system(NMAX, 1)
    profile = RotationProfile.constant_acceleration(EPS * omega_res / TF)
    runs = [integrate_full(system, profile, p, TF, DT, SAMPLE) for p in TRIO]
    ns = particle_number_series(runs, M111, pumps=TRIO, slow_scale=EPS)
    fit = fit_growth_rate(ns, WINDOW)
    assert abs(fit.lambda_fit) < 0.1 * lam, f"constant-acceleration lambda_fit = {fit.lambda_fit}"
    print(
        f"ACCEPTANCE 6 PASS: constant-acceleration lambda_fit = "
        f"{fit.lambda_fit:.2e} < {0.1 * lam:.3f}"
    )


def test_criterion_7a_coupling_antisymmetry_and_parity():
    for n in range(1, 51):
        for m in range(1, 51):
            g = axis_coupling(n, m)
            assert g == -axis_coupling(m, n)
            if (n + m) % 2 == 0:
                assert g == 0.0
            else:
                assert g != 0.0
    print("ACCEPTANCE 7a PASS: coupling antisymmetry and parity, indices <= 50")


def test_criterion_7b_energy_conservation_without_drive(omega_res):
    system = build_coupled_system(2, 1)
    profile = RotationProfile.sinusoidal(0.0, omega_res)
    run = integrate_full(system, profile, M111, 100.0, 5e-4, sample_every=2000)
    en = oscillator_energy(run)
    drift = float(np.max(np.abs(en / en[0] - 1.0)))
    assert drift <= 1e-10, f"energy drift {drift:.3e}"
    print(f"ACCEPTANCE 7b PASS: drive-off energy drift over t=100 is {drift:.2e} (tol 1e-10)")


def test_criterion_7c_bogoliubov_form_conserved(omega_res):
    pairs = find_resonant_pairs(omega_res, 1.0, 3)
    system = build_slow_system(pairs, omega_res)
    traj = integrate_reduced(system, 2.0, 1e-4)
    w = traj.omegas[None, :, None]
    form = np.sum(2 * w * (np.abs(traj.alpha) ** 2 - np.abs(traj.beta) ** 2), axis=1)
    drift = float(np.max(np.abs(form - 1.0)))
    assert drift <= 1e-8, f"Bogoliubov form drift {drift:.3e}"
    print(f"ACCEPTANCE 7c PASS: Bogoliubov form drift over tau in [0,2] is {drift:.2e} (tol 1e-8)")


def test_criterion_7d_truncation_stability(omega_res):
    n4 = n_series(trio_runs(EPS, 4, TF, omega_res), M111, EPS).values[-1]
    n6 = n_series(trio_runs(EPS, 6, TF, omega_res), M111, EPS).values[-1]
    change = abs(n6 - n4) / n4
    print(f"ACCEPTANCE 7d: N_111(tau=2) change from n_max 4 -> 6 is {change:.4f} (tol 0.01)")
    assert change < 0.01, (
        f"truncation 4 -> 6 changes N_111(tau=2) by {change:.1%}; off-resonant "
        "partners contribute an amplitude-squared detuning that converges only "
        "logarithmically with the truncation, see the scaling diagnostic"
    )
    print("ACCEPTANCE 7d PASS")


def test_criterion_7e_fourth_order_convergence(omega_res):
    system = build_coupled_system(NMAX, 1)
    profile = RotationProfile.sinusoidal(EPS, omega_res)

    def end_state(dt):
        r = integrate_full(system, profile, M111, 50.0, dt, sample_every=10**9)
        return np.concatenate([r.c[-1], r.cdot[-1]])

    ref = end_state(0.00125)
    e1 = np.linalg.norm(end_state(0.01) - ref)
    e2 = np.linalg.norm(end_state(0.005) - ref)
    ratio = e1 / e2
    assert 12.0 <= ratio <= 20.0, f"convergence ratio {ratio:.2f}"
    print(f"ACCEPTANCE 7e PASS: dt-halving error ratio = {ratio:.2f} (tol 16 +- 4)")


def test_criterion_8_resonance_detection(omega_res):
    for max_index in (2, 3):
        pairs = find_resonant_pairs(omega_res, 1.0, max_index)
        got = [(p.lo, p.hi) for p in pairs]
        assert got == [(M111, M121), (M111, M211)], f"max_index={max_index}: {got}"
    print("ACCEPTANCE 8 PASS: exactly the two fundamental pairs at max_index <= 3")


def test_scaling_diagnostic_small_amplitude_regime(omega_res, lam):
    """The criterion 3/4/7d deviations are finite-amplitude systematics of
    the model, not implementation error: they shrink like amplitude^2, and
    at amplitude 0.0025 every affected clause meets its stated tolerance."""
    deficits = {}
    finals = {}
    for eps in (0.01, 0.005, 0.0025):
        runs = trio_runs(eps, NMAX, 2.0 / eps, omega_res)
        ns = n_series(runs, M111, eps)
        fit = fit_growth_rate(ns, WINDOW)
        deficits[eps] = (lam - fit.lambda_fit) / lam
        finals[eps] = (ns, n_series(runs, M121, eps))
    print(
        "DIAGNOSTIC: growth-rate deficit vs amplitude: "
        + ", ".join(f"eps={e}: {d:.5f}" for e, d in deficits.items())
    )
    # quadratic scaling: each halving of eps cuts the deficit ~4x
    assert deficits[0.01] > deficits[0.005] > deficits[0.0025] > 0
    for big, small in ((0.01, 0.005), (0.005, 0.0025)):
        ratio = deficits[big] / deficits[small]
        assert 2.5 <= ratio <= 6.0, f"deficit ratio {ratio:.2f} not ~4"

    ns111, ns121 = finals[0.0025]
    mask = window_mask(ns111.tau)
    ref = np.sinh(lam * ns111.tau[mask]) ** 2
    rel = np.abs(ns111.values[mask] - ref) / ref
    fit = fit_growth_rate(ns111, WINDOW)
    lam_rel = abs(fit.lambda_fit - LAMBDA_REF) / LAMBDA_REF
    ratio = ns111.values[-1] / ns121.values[-1]
    print(
        f"DIAGNOSTIC at eps=0.0025: max |N/sinh^2 - 1| = {rel.max():.4f}, "
        f"lambda rel err = {lam_rel:.5f}, N_111/N_121 = {ratio:.4f}"
    )
    assert rel.max() <= 0.05
    assert lam_rel <= 0.05
    assert 1.9 <= ratio <= 2.1
    print("DIAGNOSTIC PASS: all criterion 3/4 clauses met at amplitude 0.0025")
