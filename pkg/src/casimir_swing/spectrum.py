"""Mode bookkeeping for a cubic Dirichlet cavity.

The static cavity of side L has sine modes labelled by a triple of
positive integers, with frequencies (c = 1)

    omega = pi/L * sqrt(nx^2 + ny^2 + nz^2).

Because the spectrum is nonequidistant, an external drive at frequency
Omega can bring only finitely many mode pairs into resonance
(omega_m + omega_n = Omega).  This module finds those pairs.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

__all__ = [
    "ModeIndex",
    "CavityConfig",
    "ResonantPair",
    "mode_frequency",
    "find_resonant_pairs",
]

#: Default frequency-match tolerance, in units of pi/L.  The cavity
#: frequencies are irrational multiples of pi/L, so exact float matching
#: is hopeless; anything far below typical level spacings works.
DEFAULT_TOL_FACTOR = 1e-9

#: Wall speed (epsilon * Omega * L) above which a warning is emitted: the
#: small-velocity expansion behind the coupled-mode equations starts to
#: pick up visible O((eps*Omega)^2) systematics around here.
SPEED_WARN = 0.1

#: Hard validity limit on epsilon * Omega * L.
SPEED_LIMIT = 0.5


@dataclass(frozen=True, order=True)
class ModeIndex:
    """Cavity mode label (nx, ny, nz), all components >= 1."""

    nx: int
    ny: int
    nz: int

    def __post_init__(self):
        for name in ("nx", "ny", "nz"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"mode component {name} must be an integer, got {v!r}")
            if v < 1:
                raise ValueError(f"mode component {name} must be >= 1, got {v}")

    def astuple(self) -> tuple[int, int, int]:
        return (self.nx, self.ny, self.nz)

    @property
    def label(self) -> str:
        """Compact text form, e.g. ``"1-2-1"``; used in CSV headers."""
        return f"{self.nx}-{self.ny}-{self.nz}"

    @classmethod
    def from_label(cls, text: str) -> "ModeIndex":
        parts = text.replace(",", "-").split("-")
        if len(parts) != 3:
            raise ValueError(f"cannot parse mode label {text!r}")
        return cls(*(int(p) for p in parts))

    def __str__(self) -> str:
        return f"({self.nx},{self.ny},{self.nz})"


def mode_frequency(mode: ModeIndex, L: float = 1.0) -> float:
    """Frequency pi/L * sqrt(nx^2 + ny^2 + nz^2) of a static-cavity mode."""
    if L <= 0:
        raise ValueError(f"cavity side L must be > 0, got {L}")
    return math.pi / L * math.sqrt(mode.nx**2 + mode.ny**2 + mode.nz**2)


@dataclass(frozen=True)
class CavityConfig:
    """Cavity geometry and drive parameters (natural units, c = 1).

    ``epsilon`` is the swing amplitude in radians for the sinusoidal
    profile theta(t) = epsilon*sin(Omega*t).  The product
    epsilon*Omega*L is the peak wall speed in units of c; it must stay
    well below 1 for the small-velocity mode equations to make sense.
    """

    L: float = 1.0
    epsilon: float = 0.01
    Omega: float = field(default=(math.sqrt(3) + math.sqrt(6)) * math.pi)
    profile: str = "sinusoidal"

    def __post_init__(self):
        if self.L <= 0:
            raise ValueError(f"cavity side L must be > 0, got {self.L}")
        if self.epsilon < 0:
            # zero is allowed: the drive-off limit is a useful null case
            raise ValueError(f"drive amplitude epsilon must be >= 0, got {self.epsilon}")
        if self.Omega <= 0:
            raise ValueError(f"drive frequency Omega must be > 0, got {self.Omega}")
        if self.profile not in ("sinusoidal", "constant-acceleration"):
            raise ValueError(
                f"profile must be 'sinusoidal' or 'constant-acceleration', got {self.profile!r}"
            )
        speed = self.epsilon * self.Omega * self.L
        if speed >= SPEED_LIMIT:
            raise ValueError(
                f"peak wall speed epsilon*Omega*L = {speed:.4g} exceeds the "
                f"validity limit {SPEED_LIMIT}; reduce epsilon or Omega"
            )
        if speed > SPEED_WARN:
            warnings.warn(
                f"peak wall speed epsilon*Omega*L = {speed:.4g} is above "
                f"{SPEED_WARN}; expect O((eps*Omega)^2) deviations from the "
                "slow-time predictions",
                stacklevel=2,
            )

    @property
    def drive_period(self) -> float:
        return 2 * math.pi / self.Omega


@dataclass(frozen=True)
class ResonantPair:
    """Unordered mode pair matched to the drive frequency.

    ``detuning`` is omega_lo + omega_hi - Omega for sum matches
    (``kind == "sum"``) and |omega_hi - omega_lo| - Omega for the
    exploratory difference matches.  ``coupled_axis`` records along which
    axes the indices differ ("x", "y" or "xy"); pairs differing along an
    axis with an even index sum never appear since their coupling
    vanishes.
    """

    lo: ModeIndex
    hi: ModeIndex
    detuning: float
    coupled_axis: str
    kind: str = "sum"

    def __post_init__(self):
        if self.lo.nz != self.hi.nz:
            raise ValueError("paired modes must share nz; rotation about z never mixes nz")
        if self.coupled_axis not in ("x", "y", "xy"):
            raise ValueError(f"coupled_axis must be 'x', 'y' or 'xy', got {self.coupled_axis!r}")
        if self.kind not in ("sum", "difference"):
            raise ValueError(f"kind must be 'sum' or 'difference', got {self.kind!r}")

    @property
    def modes(self) -> tuple[ModeIndex, ModeIndex]:
        return (self.lo, self.hi)


def _coupled_axis(a: ModeIndex, b: ModeIndex) -> str | None:
    """Axis tag for a potentially coupled pair, or None if uncoupled.

    The rotation couples two modes only if they share nz and, along every
    axis where the indices differ, the index sum is odd (the parity factor
    1-(-1)^(n+m) in the coupling coefficients).
    """
    if a.nz != b.nz:
        return None
    dx = a.nx != b.nx
    dy = a.ny != b.ny
    if not (dx or dy):
        return None  # identical modes: self-coupling vanishes
    if dx and (a.nx + b.nx) % 2 == 0:
        return None
    if dy and (a.ny + b.ny) % 2 == 0:
        return None
    return "xy" if (dx and dy) else ("x" if dx else "y")


def find_resonant_pairs(
    Omega: float,
    L: float = 1.0,
    max_index: int = 5,
    tol: float | None = None,
    include_difference: bool = False,
) -> list[ResonantPair]:
    """All coupled mode pairs whose frequencies match the drive.

    Scans unordered pairs with every component <= max_index, one nz block
    at a time (blocks are exactly independent), keeping pairs with
    |omega_m + omega_n - Omega| <= tol and a nonvanishing coupling.  With
    ``include_difference`` the exploratory condition
    ||omega_m - omega_n| - Omega| <= tol is scanned as well; such pairs
    exchange quanta but do not pump the vacuum.

    Near-resonances inside the tolerance are reported with their actual
    detuning rather than dropped.  Result is sorted by |detuning|, then
    lexicographically; an empty list simply means no resonance.
    """
    if Omega <= 0:
        raise ValueError(f"Omega must be > 0, got {Omega}")
    if L <= 0:
        raise ValueError(f"cavity side L must be > 0, got {L}")
    if max_index < 1:
        raise ValueError(f"max_index must be >= 1, got {max_index}")
    if tol is None:
        tol = DEFAULT_TOL_FACTOR * math.pi / L
    if tol <= 0:
        raise ValueError(f"tolerance must be > 0, got {tol}")

    pairs: list[ResonantPair] = []
    for nz in range(1, max_index + 1):
        block = [
            ModeIndex(nx, ny, nz)
            for nx in range(1, max_index + 1)
            for ny in range(1, max_index + 1)
        ]
        freqs = [mode_frequency(m, L) for m in block]
        for i, a in enumerate(block):
            for j in range(i + 1, len(block)):
                b = block[j]
                axis = _coupled_axis(a, b)
                if axis is None:
                    continue
                lo, hi = (a, b) if a.astuple() <= b.astuple() else (b, a)
                det_sum = freqs[i] + freqs[j] - Omega
                if abs(det_sum) <= tol:
                    pairs.append(ResonantPair(lo, hi, det_sum, axis, "sum"))
                if include_difference:
                    det_diff = abs(freqs[i] - freqs[j]) - Omega
                    if abs(det_diff) <= tol:
                        pairs.append(ResonantPair(lo, hi, det_diff, axis, "difference"))

    pairs.sort(key=lambda p: (abs(p.detuning), p.lo.astuple(), p.hi.astuple()))
    return pairs
