"""Resonant particle creation in a cavity swinging about its z-axis.

A cubic Dirichlet cavity rocked sinusoidally about its axis pumps pairs
of vacuum modes whose frequencies sum to the drive frequency.  The
package integrates the truncated coupled-mode equations directly,
reduces them to a slow-time linear system on resonance, and provides the
closed-form three-mode solution for cross-validation.
"""

from .spectrum import (
    CavityConfig,
    ModeIndex,
    ResonantPair,
    find_resonant_pairs,
    mode_frequency,
)
from .coupling import (
    CoupledSystem,
    RotationProfile,
    axis_coupling,
    build_coupled_system,
    coupling_weight,
    cross_coupling,
    mode_accelerations,
    rotation_state,
    slow_coupling,
)
from .msa import (
    SlowAmplitudes,
    SlowSystem,
    SlowTrajectory,
    build_slow_system,
    dominant_growth_rate,
    integrate_reduced,
    particle_number,
    particle_numbers,
    solve_single_pair_analytic,
    solve_three_mode_analytic,
    three_mode_lambda_squared,
    three_mode_omega,
)
from .direct import (
    DirectSeries,
    DirectState,
    GrowthFit,
    ParticleNumberSeries,
    extract_slow_amplitudes,
    fit_growth_rate,
    integrate_full,
    max_timestep,
    oscillator_energy,
    particle_number_series,
    slow_amplitude_series,
)

__version__ = "0.1.0"

__all__ = [
    "CavityConfig",
    "ModeIndex",
    "ResonantPair",
    "find_resonant_pairs",
    "mode_frequency",
    "CoupledSystem",
    "RotationProfile",
    "axis_coupling",
    "build_coupled_system",
    "coupling_weight",
    "cross_coupling",
    "mode_accelerations",
    "rotation_state",
    "slow_coupling",
    "SlowAmplitudes",
    "SlowSystem",
    "SlowTrajectory",
    "build_slow_system",
    "dominant_growth_rate",
    "integrate_reduced",
    "particle_number",
    "particle_numbers",
    "solve_single_pair_analytic",
    "solve_three_mode_analytic",
    "three_mode_lambda_squared",
    "three_mode_omega",
    "DirectSeries",
    "DirectState",
    "GrowthFit",
    "ParticleNumberSeries",
    "extract_slow_amplitudes",
    "fit_growth_rate",
    "integrate_full",
    "max_timestep",
    "oscillator_energy",
    "particle_number_series",
    "slow_amplitude_series",
    "__version__",
]
