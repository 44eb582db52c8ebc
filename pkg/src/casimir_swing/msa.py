"""Slow-time reduction of the resonantly driven mode equations.

On resonance (omega_a + omega_b = Omega) the fast dynamics factors out:
writing each amplitude as

    c_m(t) = beta_m(tau) * exp(+i*omega_m*t) + alpha_m(tau) * exp(-i*omega_m*t),

with tau = epsilon*t, the requirement that no secularly growing terms
appear at first order leaves a closed linear system for the Bogoliubov-like
amplitudes (alpha, beta) of the resonant set:

    d(beta_a)/dtau = sum_b K[a,b] * alpha_b,
    d(alpha_a)/dtau = sum_b K[a,b] * beta_b,

where K combines the drive frequency with the single-axis coupling
coefficients.  A growing beta signals particle creation out of the
vacuum; the mixing preserves sum_m 2*omega_m*(|alpha_m|^2 - |beta_m|^2)
exactly.

The drive frequency (sqrt(3)+sqrt(6))*pi/L couples the fundamental trio
(1,1,1)-(1,2,1) and (1,1,1)-(2,1,1); for that case closed-form solutions
are available and every particle number grows like sinh^2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .coupling import coupling_weight, pair_modes, slow_coupling
from .spectrum import ModeIndex, ResonantPair, mode_frequency

__all__ = [
    "three_mode_omega",
    "three_mode_lambda_squared",
    "SlowSystem",
    "SlowAmplitudes",
    "SlowTrajectory",
    "build_slow_system",
    "integrate_reduced",
    "solve_three_mode_analytic",
    "solve_single_pair_analytic",
    "particle_number",
    "particle_numbers",
    "dominant_growth_rate",
]

_TRIO = (ModeIndex(1, 1, 1), ModeIndex(1, 2, 1), ModeIndex(2, 1, 1))


def three_mode_omega(L: float = 1.0) -> float:
    """Drive frequency (sqrt(3)+sqrt(6))*pi/L that couples the fundamental trio."""
    if L <= 0:
        raise ValueError(f"cavity side L must be > 0, got {L}")
    return (math.sqrt(3.0) + math.sqrt(6.0)) * math.pi / L


def _require_three_mode_omega(Omega: float, L: float) -> None:
    ref = three_mode_omega(L)
    if abs(Omega - ref) > 1e-9 * ref:
        raise ValueError(
            f"Omega = {Omega!r} is not the three-mode resonance {ref!r} "
            "(only that drive frequency has the closed-form solution)"
        )


def three_mode_lambda_squared(Omega: float, L: float = 1.0) -> float:
    """Squared growth rate of the fundamental trio, from the slow couplings.

    Product combination of the four single-axis slow-coupling
    coefficients; analytically equal to sqrt(2)*pi^2/3 for L = 1.
    """
    _require_three_mode_omega(Omega, L)
    m111, m121, m211 = _TRIO
    return slow_coupling(m121, m111, Omega, L) * slow_coupling(m111, m121, Omega, L) + \
        slow_coupling(m211, m111, Omega, L) * slow_coupling(m111, m211, Omega, L)


@dataclass(frozen=True, eq=False)
class SlowSystem:
    """Closed linear slow-time system over a resonant mode set.

    ``coupling`` is the matrix K above; mode a's slow equations pick up
    K[a,b] times the opposite-type amplitude of partner b.  ``epsilon``
    is optional metadata fixing the slow-time scale tau = epsilon*t.
    """

    modes: tuple[ModeIndex, ...]
    omegas: np.ndarray
    Omega: float
    L: float
    coupling: np.ndarray
    epsilon: float | None = None

    @property
    def size(self) -> int:
        return len(self.modes)

    def index_of(self, mode: ModeIndex) -> int:
        try:
            return self.modes.index(mode)
        except ValueError:
            raise ValueError(f"mode {mode} is not in the resonant set") from None

    def full_matrix(self) -> np.ndarray:
        """First-order matrix on the stacked state [beta; alpha]."""
        M = self.size
        A = np.zeros((2 * M, 2 * M))
        A[:M, M:] = self.coupling
        A[M:, :M] = self.coupling
        return A


@dataclass(frozen=True, eq=False)
class SlowAmplitudes:
    """Bogoliubov-like amplitudes at one slow time, indexed [mode, pump].

    At tau = 0 every run starts from a single vacuum mode:
    alpha[m,k] = delta_mk / sqrt(2*omega_k) and beta = 0.
    """

    modes: tuple[ModeIndex, ...]
    pumps: tuple[ModeIndex, ...]
    omegas: np.ndarray
    beta: np.ndarray
    alpha: np.ndarray
    tau: float


@dataclass(frozen=True, eq=False)
class SlowTrajectory:
    modes: tuple[ModeIndex, ...]
    pumps: tuple[ModeIndex, ...]
    omegas: np.ndarray
    taus: np.ndarray
    beta: np.ndarray  # [sample, mode, pump]
    alpha: np.ndarray

    def at(self, i: int) -> SlowAmplitudes:
        return SlowAmplitudes(
            self.modes, self.pumps, self.omegas,
            self.beta[i], self.alpha[i], float(self.taus[i]),
        )

    @property
    def final(self) -> SlowAmplitudes:
        return self.at(len(self.taus) - 1)


def build_slow_system(
    pairs: Sequence[ResonantPair],
    Omega: float,
    L: float = 1.0,
    epsilon: float | None = None,
) -> SlowSystem:
    """Assemble the slow coupling matrix from a consistent resonant pair set.

    Every pair must be a sum match at this Omega and may differ along a
    single transverse axis only; cross-coupled (xy) pairs are outside the
    slow-coupling formula's domain.  An empty pair list yields the
    trivial system.
    """
    if Omega <= 0:
        raise ValueError(f"Omega must be > 0, got {Omega}")
    seen: set[tuple] = set()
    for p in pairs:
        if p.kind != "sum":
            raise ValueError(
                f"pair {p.lo}-{p.hi} is a difference match; only sum resonances "
                "pump the vacuum and enter the slow system"
            )
        if p.coupled_axis == "xy":
            raise ValueError(
                f"pair {p.lo}-{p.hi} differs along both x and y; "
                "cross-coupled pairs are unsupported in the slow reduction"
            )
        mismatch = mode_frequency(p.lo, L) + mode_frequency(p.hi, L) - Omega
        if abs(mismatch) > 1e-6 * Omega:
            raise ValueError(
                f"pair {p.lo}-{p.hi} is detuned by {mismatch:.3g} from Omega = {Omega:.6g}; "
                "the slow system assumes exact resonance"
            )
        key = (p.lo.astuple(), p.hi.astuple())
        if key in seen:
            raise ValueError(f"pair {p.lo}-{p.hi} appears more than once")
        seen.add(key)

    modes = tuple(pair_modes(pairs))
    M = len(modes)
    omegas = np.array([mode_frequency(m, L) for m in modes])
    K = np.zeros((M, M))
    for p in pairs:
        for row, col in ((p.lo, p.hi), (p.hi, p.lo)):
            a, b = modes.index(row), modes.index(col)
            K[a, b] = (2.0 * omegas[a] - Omega) * Omega / (4.0 * omegas[a]) * \
                coupling_weight(row, col)
    return SlowSystem(modes, omegas, Omega, L, K, epsilon)


def _initial_state(modes: Sequence[ModeIndex], omegas: np.ndarray) -> np.ndarray:
    """Stacked [beta; alpha] start: one vacuum mode per pump column."""
    M = len(modes)
    X = np.zeros((2 * M, M), dtype=complex)
    X[M:, :] = np.diag(1.0 / np.sqrt(2.0 * omegas))
    return X


def integrate_reduced(system: SlowSystem, tau_f: float, dtau: float = 1e-4) -> SlowTrajectory:
    """Fixed-step fourth-order integration of the slow system.

    All pump columns evolve together.  For this constant linear system the
    classical fourth-order step is exactly the degree-4 Taylor polynomial
    of the step propagator, which is precomputed once.
    """
    if dtau <= 0:
        raise ValueError(f"dtau must be > 0, got {dtau}")
    if tau_f < 0:
        raise ValueError(f"tau_f must be >= 0, got {tau_f}")
    M = system.size
    A = system.full_matrix().astype(complex)
    X = _initial_state(system.modes, system.omegas)

    def taylor4_step(h: float) -> np.ndarray:
        hA = h * A
        P = np.eye(2 * M, dtype=complex)
        term = np.eye(2 * M, dtype=complex)
        for k in range(1, 5):
            term = term @ hA / k
            P = P + term
        return P

    n_full = int(math.floor(tau_f / dtau + 1e-12))
    rem = tau_f - n_full * dtau
    if rem < 1e-12 * max(dtau, 1.0):
        rem = 0.0

    n_samples = n_full + (2 if rem else 1)
    taus = np.empty(n_samples)
    beta = np.empty((n_samples, M, M), dtype=complex)
    alpha = np.empty((n_samples, M, M), dtype=complex)

    def record(i: int, tau: float, X: np.ndarray) -> None:
        taus[i] = tau
        beta[i] = X[:M]
        alpha[i] = X[M:]

    record(0, 0.0, X)
    P = taylor4_step(dtau)
    for i in range(n_full):
        X = P @ X
        record(i + 1, (i + 1) * dtau, X)
    if rem:
        X = taylor4_step(rem) @ X
        record(n_full + 1, tau_f, X)
    return SlowTrajectory(system.modes, system.modes, system.omegas, taus, beta, alpha)


def solve_three_mode_analytic(Omega: float, L: float = 1.0, tau_f: float = 1.0) -> SlowAmplitudes:
    """Closed-form slow amplitudes of the fundamental trio at slow time tau_f.

    The four creation-type amplitudes grow like sinh; the surviving
    annihilation-type entries follow by direct integration of the slow
    equations from the vacuum start (pure cosh for the fundamental pump,
    (1 +- cosh)/2 combinations for the side pumps).
    """
    _require_three_mode_omega(Omega, L)
    if tau_f < 0:
        raise ValueError(f"tau_f must be >= 0, got {tau_f}")
    m111, m121, m211 = _TRIO
    modes = _TRIO
    omegas = np.array([mode_frequency(m, L) for m in modes])
    w1, w2, w3 = omegas

    g_up_121 = slow_coupling(m121, m111, Omega, L)   # in the (1,1,1) equations
    g_up_211 = slow_coupling(m211, m111, Omega, L)
    g_dn_121 = slow_coupling(m111, m121, Omega, L)   # in the (1,2,1) equations
    g_dn_211 = slow_coupling(m111, m211, Omega, L)

    lam2 = g_up_121 * g_dn_121 + g_up_211 * g_dn_211
    lam = math.sqrt(lam2)
    sh, ch = math.sinh(lam * tau_f), math.cosh(lam * tau_f)

    beta = np.zeros((3, 3), dtype=complex)
    alpha = np.zeros((3, 3), dtype=complex)

    # pump (1,1,1): creation in the two side modes, cosh in the pump itself
    beta[1, 0] = g_dn_121 / (lam * math.sqrt(2 * w1)) * sh
    beta[2, 0] = -g_dn_211 / (lam * math.sqrt(2 * w1)) * sh
    alpha[0, 0] = ch / math.sqrt(2 * w1)

    # pump (1,2,1): creation in the fundamental, mixing between the side modes
    beta[0, 1] = g_up_121 / (lam * math.sqrt(2 * w2)) * sh
    alpha[1, 1] = (1.0 + ch) / (2.0 * math.sqrt(2 * w2))
    alpha[2, 1] = -(ch - 1.0) / (2.0 * math.sqrt(2 * w2))

    # pump (2,1,1): mirror image of the (1,2,1) pump
    beta[0, 2] = -g_up_211 / (lam * math.sqrt(2 * w3)) * sh
    alpha[2, 2] = (1.0 + ch) / (2.0 * math.sqrt(2 * w3))
    alpha[1, 2] = -(ch - 1.0) / (2.0 * math.sqrt(2 * w3))

    return SlowAmplitudes(modes, modes, omegas, beta, alpha, tau_f)


def solve_single_pair_analytic(system: SlowSystem, tau_f: float) -> SlowAmplitudes:
    """Closed-form solution for a slow system built from exactly one pair.

    With kappa_ab = K[a,b] the squared rate is kappa_ab*kappa_ba.  A
    negative square (never realized by single-axis sum resonances, whose
    rate square is provably positive, but supported for completeness)
    turns sinh/cosh into sin/cos: a non-amplifying resonance.
    """
    if system.size != 2:
        raise ValueError(f"single-pair solver needs exactly 2 modes, got {system.size}")
    if tau_f < 0:
        raise ValueError(f"tau_f must be >= 0, got {tau_f}")
    k01, k10 = system.coupling[0, 1], system.coupling[1, 0]
    lam = cmath.sqrt(complex(k01 * k10))
    if lam == 0:
        sh_over_lam = complex(tau_f)
        ch = complex(1.0)
    else:
        sh_over_lam = cmath.sinh(lam * tau_f) / lam
        ch = cmath.cosh(lam * tau_f)
    w = system.omegas
    beta = np.zeros((2, 2), dtype=complex)
    alpha = np.zeros((2, 2), dtype=complex)
    # pump 0 drives beta of mode 1 and vice versa; each pump's own alpha
    # follows the cosh (or cos) envelope
    beta[1, 0] = k10 * sh_over_lam / math.sqrt(2 * w[0])
    beta[0, 1] = k01 * sh_over_lam / math.sqrt(2 * w[1])
    alpha[0, 0] = ch / math.sqrt(2 * w[0])
    alpha[1, 1] = ch / math.sqrt(2 * w[1])
    return SlowAmplitudes(system.modes, system.modes, system.omegas, beta, alpha, tau_f)


def dominant_growth_rate(system: SlowSystem) -> float:
    """Largest real part over the slow-system spectrum; 0 for a non-amplifying set."""
    if system.size == 0:
        return 0.0
    eig = np.linalg.eigvals(system.full_matrix())
    rate = float(np.max(eig.real))
    scale = max(1.0, float(np.max(np.abs(system.coupling), initial=0.0)))
    return rate if rate > 1e-9 * scale else 0.0


def particle_number(
    amps: SlowAmplitudes, mode: ModeIndex, omegas: np.ndarray | None = None
) -> float:
    """Created quanta in one mode: 2*omega_m * sum over pumps of |beta|^2."""
    try:
        i = amps.modes.index(mode)
    except ValueError:
        raise ValueError(f"mode {mode} is not in the amplitude set") from None
    w = (omegas if omegas is not None else amps.omegas)[i]
    return float(2.0 * w * np.sum(np.abs(amps.beta[i, :]) ** 2))


def particle_numbers(amps: SlowAmplitudes) -> np.ndarray:
    """Created quanta for every mode in the set."""
    return 2.0 * amps.omegas * np.sum(np.abs(amps.beta) ** 2, axis=1)
