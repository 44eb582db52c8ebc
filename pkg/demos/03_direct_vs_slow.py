"""Direct integration of the coupled-mode system versus the slow-time law.

Ground truth here is the fixed-step fourth-order integration of the full
truncated system (25 modes, no slow-time approximation).  From each run
the Bogoliubov-like amplitudes are extracted and the created quanta are
compared against sinh^2(lambda*tau).

At swing amplitude 0.0025 the agreement is percent-level.  At the larger
amplitude 0.01 the direct result visibly lags the slow-time prediction:
off-resonant partners shift the resonant frequencies by an
amplitude-squared amount, detuning the pump.  The deficit of the fitted
growth rate shrinks ~4x per halving of the amplitude, which is how one
tells a finite-amplitude systematic from an implementation error.
"""
import math

import numpy as np

from casimir_swing import (
    ModeIndex,
    RotationProfile,
    build_coupled_system,
    fit_growth_rate,
    integrate_full,
    particle_number_series,
    three_mode_lambda_squared,
    three_mode_omega,
)

Om = three_mode_omega()
lam = math.sqrt(three_mode_lambda_squared(Om))
trio = [ModeIndex(1, 1, 1), ModeIndex(1, 2, 1), ModeIndex(2, 1, 1)]
system = build_coupled_system(5, 1)
print(f"Basis: {system.size} modes (nx, ny <= 5, nz = 1); drive Omega = {Om:.6f}")

for eps in (0.01, 0.0025):
    t_f = 2.0 / eps  # slow horizon tau = 2
    profile = RotationProfile.sinusoidal(eps, Om)
    runs = [integrate_full(system, profile, p, t_f, 0.005, sample_every=40) for p in trio]
    ns = particle_number_series(runs, trio[0], pumps=trio, slow_scale=eps)

    print(f"\nswing amplitude eps = {eps} (t_f = {t_f:.0f}, 3 pump runs):")
    print(f"{'tau':>5} {'N_111 direct':>14} {'sinh^2':>12} {'rel':>8}")
    for tau_mark in (0.5, 1.0, 1.5, 2.0):
        i = int(np.argmin(np.abs(ns.tau - tau_mark)))
        ref = math.sinh(lam * ns.tau[i]) ** 2
        print(f"{ns.tau[i]:5.2f} {ns.values[i]:14.4f} {ref:12.4f} "
              f"{ns.values[i] / ref - 1:+8.1%}")
    fit = fit_growth_rate(ns, (0.5, 2.0))
    print(f"  fitted growth rate: {fit.lambda_fit:.6f} "
          f"(slow-time value {lam:.6f}, deficit {1 - fit.lambda_fit / lam:+.2%}, "
          f"r^2 = {fit.r_squared:.6f})")
    n121 = particle_number_series(runs, trio[1], pumps=trio, slow_scale=eps)
    print(f"  N_111/N_121 at tau=2: {ns.values[-1] / n121.values[-1]:.4f} "
          f"(slow-time value 2)")

print("\nTruncation matters through the same mechanism: each extra shell of")
print("off-resonant partners nudges the effective detuning, so convergence")
print("with n_max is slow at eps = 0.01 and fast at smaller amplitudes.")
for nmax in (2, 4, 6):
    sysn = build_coupled_system(nmax, 1)
    profile = RotationProfile.sinusoidal(0.01, Om)
    runs = [integrate_full(sysn, profile, p, 200.0, 0.005, sample_every=200) for p in trio]
    ns = particle_number_series(runs, trio[0], pumps=trio, slow_scale=0.01)
    print(f"  n_max = {nmax}: N_111(tau=2) = {ns.values[-1]:9.3f}")
