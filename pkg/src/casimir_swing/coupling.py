"""Coupling coefficients and right-hand side of the rotating-cavity mode equations.

In the frame co-rotating with the cavity the field obeys a wave equation
with an extra angular-momentum drive term.  Projected onto the static
sine basis (one nz block at a time; rotation about z never mixes nz),
the expansion coefficients satisfy

    d2c_m/dt2 + omega_m^2 c_m = sum_n W[m,n] * (2*thetadot*dc_n/dt + thetaddot*c_n)

where W combines three contributions: a cross term when the pair differs
along both transverse axes, and single-axis terms when it differs along
x only or y only.  All coefficients below are the printed closed forms;
the 0/0 at coincident indices is resolved by their stated zero value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .spectrum import ModeIndex, mode_frequency

__all__ = [
    "axis_coupling",
    "cross_coupling",
    "coupling_weight",
    "RotationProfile",
    "rotation_state",
    "CoupledSystem",
    "build_coupled_system",
    "mode_accelerations",
    "slow_coupling",
]


def axis_coupling(n: int, m: int) -> float:
    """Velocity-coupling coefficient between sine modes n and m on one axis.

    Equal to (1 - (-1)^(m+n)) * m*n / (m^2 - n^2): antisymmetric under
    n <-> m and zero whenever n+m is even (in particular for n = m).
    """
    if n < 1 or m < 1:
        raise ValueError(f"axis indices must be >= 1, got ({n}, {m})")
    if (n + m) % 2 == 0:
        return 0.0
    return 2.0 * m * n / (m * m - n * n)


def cross_coupling(nx: int, mx: int, ny: int, my: int) -> float:
    """Two-axis coupling coefficient; zero when nx = mx or ny = my.

    (1/pi^2) * (1/(mx^2-nx^2) - 1/(my^2-ny^2)) * axis_coupling(nx,mx) * axis_coupling(ny,my)
    """
    for v in (nx, mx, ny, my):
        if v < 1:
            raise ValueError(f"axis indices must be >= 1, got ({nx},{mx},{ny},{my})")
    if nx == mx or ny == my:
        return 0.0
    return (
        (1.0 / math.pi**2)
        * (1.0 / (mx * mx - nx * nx) - 1.0 / (my * my - ny * ny))
        * axis_coupling(nx, mx)
        * axis_coupling(ny, my)
    )


def coupling_weight(m: ModeIndex, n: ModeIndex) -> float:
    """Weight of partner mode n in the equation of motion for mode m.

    Zero across nz blocks and for m = n.  The single-axis terms enter
    with opposite signs (+ along x, - along y), the cross term with a
    factor 8; with the first index of axis_coupling taken from the
    partner and the second from the equation's own mode.
    """
    if m.nz != n.nz:
        return 0.0
    dx = m.nx != n.nx
    dy = m.ny != n.ny
    if dx and dy:
        return 8.0 * cross_coupling(n.nx, m.nx, n.ny, m.ny)
    if dx:
        return axis_coupling(n.nx, m.nx)
    if dy:
        return -axis_coupling(n.ny, m.ny)
    return 0.0


@dataclass(frozen=True)
class RotationProfile:
    """Time dependence of the cavity orientation angle theta(t).

    kind "sinusoidal": theta = epsilon*sin(Omega*t);
    kind "constant-acceleration": theta = alpha*t^2/2 (starts at rest).
    """

    kind: str
    epsilon: float = 0.0
    Omega: float = 0.0
    alpha: float = 0.0

    def __post_init__(self):
        if self.kind == "sinusoidal":
            if self.epsilon < 0:
                raise ValueError(f"epsilon must be >= 0, got {self.epsilon}")
            if self.Omega <= 0:
                raise ValueError(f"Omega must be > 0, got {self.Omega}")
        elif self.kind == "constant-acceleration":
            pass  # any alpha, including 0, is meaningful
        else:
            raise ValueError(
                f"kind must be 'sinusoidal' or 'constant-acceleration', got {self.kind!r}"
            )

    @classmethod
    def sinusoidal(cls, epsilon: float, Omega: float) -> "RotationProfile":
        return cls("sinusoidal", epsilon=epsilon, Omega=Omega)

    @classmethod
    def constant_acceleration(cls, alpha: float) -> "RotationProfile":
        return cls("constant-acceleration", alpha=alpha)


def rotation_state(profile: RotationProfile, t: float) -> tuple[float, float, float]:
    """(theta, thetadot, thetaddot) at time t."""
    if profile.kind == "sinusoidal":
        eps, Om = profile.epsilon, profile.Omega
        s, c = math.sin(Om * t), math.cos(Om * t)
        return (eps * s, eps * Om * c, -eps * Om * Om * s)
    a = profile.alpha
    return (0.5 * a * t * t, a * t, a)


@dataclass(frozen=True, eq=False)
class CoupledSystem:
    """Truncated mode basis of one nz block with precomputed couplings.

    ``weights`` holds the nonzero W[m,n] keyed by (row, column) basis
    positions; ``weight_matrix`` is the same data densified for fast
    right-hand-side evaluation.  Immutable after construction and safe to
    share across concurrent integrations.
    """

    basis: tuple[ModeIndex, ...]
    omegas: np.ndarray
    weights: dict[tuple[int, int], float]
    weight_matrix: np.ndarray
    L: float
    n_z: int

    @property
    def size(self) -> int:
        return len(self.basis)

    def index_of(self, mode: ModeIndex) -> int:
        try:
            return self.basis.index(mode)
        except ValueError:
            raise ValueError(f"mode {mode} is not in the truncated basis") from None


def build_coupled_system(n_max: int, n_z: int, L: float = 1.0) -> CoupledSystem:
    """Assemble the nz-block basis (nx, ny <= n_max) and its couplings.

    The parity selection rules make the weight matrix sparse: only
    O(n_max^3) of the n_max^4 ordered pairs couple.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_z < 1:
        raise ValueError(f"n_z must be >= 1, got {n_z}")
    if L <= 0:
        raise ValueError(f"cavity side L must be > 0, got {L}")
    basis = tuple(
        ModeIndex(nx, ny, n_z)
        for nx in range(1, n_max + 1)
        for ny in range(1, n_max + 1)
    )
    omegas = np.array([mode_frequency(m, L) for m in basis])
    M = len(basis)
    weights: dict[tuple[int, int], float] = {}
    dense = np.zeros((M, M))
    for i, m in enumerate(basis):
        for j, n in enumerate(basis):
            if i == j:
                continue
            w = coupling_weight(m, n)
            if w != 0.0:
                weights[(i, j)] = w
                dense[i, j] = w
    return CoupledSystem(basis, omegas, weights, dense, L, n_z)


def mode_accelerations(
    system: CoupledSystem,
    profile: RotationProfile,
    t: float,
    c: np.ndarray,
    cdot: np.ndarray,
) -> np.ndarray:
    """Exact second derivatives of the mode amplitudes at time t.

    Linear in (c, cdot); no slow-time approximation.  The drive enters
    only through thetadot and thetaddot, so small amplitudes never cause
    cancellation: nothing here divides by the drive amplitude.
    """
    c = np.asarray(c)
    cdot = np.asarray(cdot)
    if c.shape != (system.size,) or cdot.shape != (system.size,):
        raise ValueError(
            f"state vectors must have shape ({system.size},); "
            f"got c {c.shape}, cdot {cdot.shape}"
        )
    _, th1, th2 = rotation_state(profile, t)
    drive = system.weight_matrix @ (th2 * c + 2.0 * th1 * cdot)
    return drive - system.omegas**2 * c


def slow_coupling(m: ModeIndex, k: ModeIndex, Omega: float, L: float = 1.0) -> float:
    """Slow-time coupling coefficient between two resonant modes.

    The coefficient that multiplies partner mode m's amplitude in the
    slow equation of mode k, for a pair with omega_m + omega_k = Omega:

        (2*omega_m - Omega) * Omega / (4*omega_k) * axis_coupling(m_i, k_i)

    with i the single transverse axis along which the pair differs.  Pairs
    differing along both x and y (cross-coupled) or along z, and identical
    modes, are outside this formula's domain and raise ValueError.
    """
    if m.nz != k.nz:
        raise ValueError(f"modes {m} and {k} differ in nz; no slow coupling exists")
    dx = m.nx != k.nx
    dy = m.ny != k.ny
    if dx and dy:
        raise ValueError(
            f"modes {m} and {k} differ along both x and y; the single-axis "
            "slow-coupling formula does not cover cross-coupled pairs"
        )
    if not (dx or dy):
        raise ValueError(f"modes {m} and {k} are identical; self-coupling vanishes")
    g = axis_coupling(m.nx, k.nx) if dx else axis_coupling(m.ny, k.ny)
    w_m = mode_frequency(m, L)
    w_k = mode_frequency(k, L)
    return (2.0 * w_m - Omega) * Omega / (4.0 * w_k) * g


def pair_modes(pairs: Iterable) -> list[ModeIndex]:
    """Distinct modes appearing in a pair list, in (nz, nx, ny) order."""
    seen: set[ModeIndex] = set()
    for p in pairs:
        seen.update(p.modes)
    return sorted(seen, key=lambda m: (m.nz, m.nx, m.ny))
