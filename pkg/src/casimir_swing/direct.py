"""Real-time integration of the truncated coupled-mode system.

This is the ground-truth side of the cross-validation: no slow-time
approximation, just a classical fixed-step fourth-order integration of
the second-order complex system in (c, cdot) phase-space form.  Fixed
stepping keeps runs bit-reproducible; the drive makes the system
non-autonomous, so no symplectic scheme is attempted.

Slow Bogoliubov-like amplitudes are recovered from a state by inverting
the two-frequency ansatz

    c_m = beta_m * exp(+i*omega_m*t) + alpha_m * exp(-i*omega_m*t),

which is exact whenever the slow derivatives vanish and first-order
accurate in the drive amplitude otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

from .coupling import CoupledSystem, RotationProfile
from .spectrum import ModeIndex

__all__ = [
    "DirectState",
    "DirectSeries",
    "GrowthFit",
    "ParticleNumberSeries",
    "integrate_full",
    "extract_slow_amplitudes",
    "slow_amplitude_series",
    "particle_number_series",
    "fit_growth_rate",
    "oscillator_energy",
    "max_timestep",
]

#: Required time resolution: at least this many steps per period of the
#: fastest oscillation (mode frequency or drive).
STEPS_PER_PERIOD = 20


@njit(cache=True)
def _rhs(W, om2, kind, p1, p2, t, y, out, scratch):
    # kind 0: sinusoidal (p1 = epsilon, p2 = Omega); kind 1: constant
    # angular acceleration (p1 = alpha).  Only thetadot/thetaddot enter.
    M = om2.shape[0]
    if kind == 0:
        th1 = p1 * p2 * math.cos(p2 * t)
        th2 = -p1 * p2 * p2 * math.sin(p2 * t)
    else:
        th1 = p1 * t
        th2 = p1
    for j in range(M):
        scratch[j] = th2 * y[j] + 2.0 * th1 * y[M + j]
    for a in range(M):
        acc = 0.0 + 0.0j
        for b in range(M):
            acc += W[a, b] * scratch[b]
        out[a] = y[M + a]
        out[M + a] = acc - om2[a] * y[a]


@njit(cache=True)
def _rk4_run(W, om2, y0, kind, p1, p2, dt, n_steps, sample_every, out_y, out_step):
    n = y0.shape[0]
    M = n // 2
    y = y0.copy()
    k1 = np.empty(n, np.complex128)
    k2 = np.empty(n, np.complex128)
    k3 = np.empty(n, np.complex128)
    k4 = np.empty(n, np.complex128)
    yt = np.empty(n, np.complex128)
    scratch = np.empty(M, np.complex128)

    idx = 0
    out_y[idx] = y
    out_step[idx] = 0
    idx += 1
    for i in range(n_steps):
        t = i * dt
        _rhs(W, om2, kind, p1, p2, t, y, k1, scratch)
        for j in range(n):
            yt[j] = y[j] + 0.5 * dt * k1[j]
        _rhs(W, om2, kind, p1, p2, t + 0.5 * dt, yt, k2, scratch)
        for j in range(n):
            yt[j] = y[j] + 0.5 * dt * k2[j]
        _rhs(W, om2, kind, p1, p2, t + 0.5 * dt, yt, k3, scratch)
        for j in range(n):
            yt[j] = y[j] + dt * k3[j]
        _rhs(W, om2, kind, p1, p2, t + dt, yt, k4, scratch)
        for j in range(n):
            y[j] = y[j] + (dt / 6.0) * (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j])
        if (i + 1) % sample_every == 0:
            out_y[idx] = y
            out_step[idx] = i + 1
            idx += 1
    if n_steps % sample_every != 0:
        out_y[idx] = y
        out_step[idx] = n_steps
        idx += 1
    return idx


@dataclass(frozen=True, eq=False)
class DirectState:
    """One snapshot of the coupled-mode integration."""

    c: np.ndarray
    cdot: np.ndarray
    t: float


@dataclass(frozen=True, eq=False)
class DirectSeries:
    """Sampled trajectory of one pump run."""

    system: CoupledSystem
    profile: RotationProfile
    pump: ModeIndex
    t: np.ndarray        # [samples]
    c: np.ndarray        # [samples, modes]
    cdot: np.ndarray     # [samples, modes]
    dt: float

    @property
    def n_samples(self) -> int:
        return len(self.t)

    def state(self, i: int) -> DirectState:
        return DirectState(self.c[i], self.cdot[i], float(self.t[i]))


def max_timestep(system: CoupledSystem, profile: RotationProfile) -> float:
    """Largest admissible dt: resolve the fastest oscillation with 20 steps."""
    fastest = float(np.max(system.omegas))
    if profile.kind == "sinusoidal":
        fastest = max(fastest, profile.Omega)
    return 2.0 * math.pi / (STEPS_PER_PERIOD * fastest)


def _profile_params(profile: RotationProfile) -> tuple[int, float, float]:
    if profile.kind == "sinusoidal":
        return 0, profile.epsilon, profile.Omega
    return 1, profile.alpha, 0.0


def integrate_full(
    system: CoupledSystem,
    profile: RotationProfile,
    pump: ModeIndex,
    t_f: float,
    dt: float,
    sample_every: int = 1,
) -> DirectSeries:
    """Integrate one pump run from its vacuum start to t_f.

    Starts mode ``pump`` with c = 1/sqrt(2*omega), cdot = -i*sqrt(omega/2)
    and everything else at rest; steps n = round(t_f/dt) times with fixed
    dt and records every sample_every-th step (plus start and end).
    Deterministic: identical inputs give bit-identical samples.
    """
    if dt <= 0:
        raise ValueError(f"dt must be > 0, got {dt}")
    if t_f < 0:
        raise ValueError(f"t_f must be >= 0, got {t_f}")
    if sample_every < 1:
        raise ValueError(f"sample_every must be >= 1, got {sample_every}")
    bound = max_timestep(system, profile)
    if dt > bound * (1 + 1e-12):
        raise ValueError(
            f"dt = {dt:.6g} is too coarse: the fastest oscillation needs "
            f"dt <= 2*pi/({STEPS_PER_PERIOD}*max(omega_max, Omega)) = {bound:.6g}"
        )
    k = system.index_of(pump)

    M = system.size
    y0 = np.zeros(2 * M, dtype=np.complex128)
    w_k = system.omegas[k]
    y0[k] = 1.0 / math.sqrt(2.0 * w_k)
    y0[M + k] = -1j * math.sqrt(w_k / 2.0)

    n_steps = int(round(t_f / dt))
    n_rec = n_steps // sample_every + 2
    out_y = np.empty((n_rec, 2 * M), dtype=np.complex128)
    out_step = np.empty(n_rec, dtype=np.int64)
    kind, p1, p2 = _profile_params(profile)
    count = _rk4_run(
        system.weight_matrix, system.omegas**2, y0,
        kind, p1, p2, dt, n_steps, sample_every, out_y, out_step,
    )
    t = out_step[:count] * dt
    return DirectSeries(system, profile, pump, t, out_y[:count, :M], out_y[:count, M:], dt)


def extract_slow_amplitudes(
    state: DirectState, omegas: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Invert the two-frequency ansatz at one instant; returns (beta, alpha)."""
    omegas = np.asarray(omegas)
    if np.any(omegas <= 0):
        raise ValueError("all mode frequencies must be > 0")
    rot = np.exp(-1j * omegas * state.t)
    half_minus = state.cdot / (1j * omegas)
    beta = 0.5 * (state.c + half_minus) * rot
    alpha = 0.5 * (state.c - half_minus) / rot
    return beta, alpha


def slow_amplitude_series(series: DirectSeries) -> tuple[np.ndarray, np.ndarray]:
    """(beta, alpha) arrays of shape [samples, modes] for a whole run."""
    om = series.system.omegas
    rot = np.exp(-1j * np.outer(series.t, om))
    half_minus = series.cdot / (1j * om)
    beta = 0.5 * (series.c + half_minus) * rot
    alpha = 0.5 * (series.c - half_minus) / rot
    return beta, alpha


@dataclass(frozen=True, eq=False)
class ParticleNumberSeries:
    """Created quanta in one mode versus time, summed over pump runs."""

    mode: ModeIndex
    t: np.ndarray
    tau: np.ndarray
    values: np.ndarray


def particle_number_series(
    runs: Sequence[DirectSeries],
    mode: ModeIndex,
    pumps: Sequence[ModeIndex] | None = None,
    slow_scale: float | None = None,
) -> ParticleNumberSeries:
    """N_mode(t) = 2*omega_mode * sum over pump runs of |beta_mode|^2.

    One run per pump; all runs must share the basis and the sample grid.
    ``pumps``, when given, asserts exactly which pump runs are expected.
    ``slow_scale`` sets tau = slow_scale*t; it defaults to the sinusoidal
    drive amplitude and must be passed explicitly for other profiles.
    """
    if not runs:
        raise ValueError("at least one pump run is required")
    base = runs[0]
    seen: list[ModeIndex] = []
    for r in runs:
        if r.system is not base.system and r.system.basis != base.system.basis:
            raise ValueError("all runs must share one truncated basis")
        if r.t.shape != base.t.shape or not np.array_equal(r.t, base.t):
            raise ValueError("all runs must share one sample grid")
        if r.pump in seen:
            raise ValueError(f"duplicate run for pump {r.pump}")
        seen.append(r.pump)
    if pumps is not None:
        missing = [p for p in pumps if p not in seen]
        extra = [p for p in seen if p not in pumps]
        if missing or extra:
            raise ValueError(
                f"pump runs do not match the requested pump set: "
                f"missing {missing}, unexpected {extra}"
            )
    i = base.system.index_of(mode)
    if slow_scale is None:
        kinds = {r.profile.kind for r in runs}
        if kinds != {"sinusoidal"}:
            raise ValueError(
                "slow_scale must be given explicitly for non-sinusoidal profiles"
            )
        scales = {r.profile.epsilon for r in runs}
        if len(scales) != 1:
            raise ValueError("runs have different drive amplitudes; pass slow_scale")
        slow_scale = scales.pop()

    w = base.system.omegas[i]
    total = np.zeros(len(base.t))
    for r in runs:
        beta, _ = slow_amplitude_series(r)
        total += 2.0 * w * np.abs(beta[:, i]) ** 2
    return ParticleNumberSeries(mode, base.t, slow_scale * base.t, total)


@dataclass(frozen=True)
class GrowthFit:
    """Least-squares exponential growth rate of a particle-number series."""

    lambda_fit: float
    r_squared: float
    window: tuple[float, float]


def fit_growth_rate(series: ParticleNumberSeries, window: tuple[float, float]) -> GrowthFit:
    """Slope of asinh(sqrt(N)) versus tau over the window.

    The model is exact for N = sinh^2(lambda*tau), where the transformed
    series is the straight line lambda*tau.
    """
    lo, hi = window
    if not lo < hi:
        raise ValueError(f"window must satisfy lo < hi, got {window}")
    mask = (series.tau >= lo) & (series.tau <= hi)
    n = int(mask.sum())
    if n < 3:
        raise ValueError(f"window {window} contains {n} samples; need at least 3")
    values = series.values[mask]
    if np.any(values < 0):
        raise ValueError("particle numbers must be nonnegative")
    x = series.tau[mask]
    y = np.arcsinh(np.sqrt(values))
    xm, ym = x.mean(), y.mean()
    dx = x - xm
    denom = float(np.dot(dx, dx))
    slope = float(np.dot(dx, y - ym)) / denom
    resid = y - (ym + slope * dx)
    ss_res = float(np.dot(resid, resid))
    ss_tot = float(np.dot(y - ym, y - ym))
    if ss_tot <= 1e-30:
        r2 = 1.0 if ss_res <= 1e-30 else 0.0
    else:
        r2 = 1.0 - ss_res / ss_tot
    return GrowthFit(slope, min(max(r2, 0.0), 1.0), (lo, hi))


def oscillator_energy(series: DirectSeries) -> np.ndarray:
    """Sum over modes of |cdot|^2 + omega^2 |c|^2 at every sample."""
    om2 = series.system.omegas**2
    return np.sum(np.abs(series.cdot) ** 2 + om2 * np.abs(series.c) ** 2, axis=1)
