"""Command-line runner: spectrum tables, resonance scans, slow-time and
direct runs, cross-validation reports and drive-frequency sweeps.

All numeric output is plot-ready CSV (17 significant digits, exact float
round-trip) plus JSON summaries validating against the schema shipped in
``schemas/summary.schema.json``.  Exit codes: 0 success, 1 configuration
or domain error, 2 cross-validation tolerance breach.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields, replace
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np

from .coupling import RotationProfile, build_coupled_system
from .direct import (
    DirectSeries,
    fit_growth_rate,
    integrate_full,
    max_timestep,
    particle_number_series,
    slow_amplitude_series,
)
from .msa import (
    build_slow_system,
    dominant_growth_rate,
    integrate_reduced,
    solve_three_mode_analytic,
    three_mode_lambda_squared,
    three_mode_omega,
)
from .spectrum import CavityConfig, ModeIndex, find_resonant_pairs, mode_frequency

THREADS_ENV = "CASIMIR_SWING_THREADS"


def _fmt(x: float) -> str:
    """Decimal form with 17 significant digits; parses back to the same float."""
    return format(float(x), ".17g")


@dataclass
class RunConfig:
    """Validated run parameters; defaults reproduce the three-mode example."""

    L: float = 1.0
    epsilon: float = 0.01
    Omega: float = field(default_factory=three_mode_omega)
    profile: str = "sinusoidal"
    n_max: int = 5
    n_z: int = 1
    pumps: list[ModeIndex] | None = None
    t_f: float = 200.0
    dt: float = 0.005
    sample_every: int = 20
    tau_f: float = 2.0
    dtau: float = 1e-4
    msa_sample_every: int = 10
    tol: float | None = None
    fit_window: tuple[float, float] = (0.5, 2.0)
    n_tolerance: float = 0.05
    lambda_tolerance: float = 0.05
    omega_min: float | None = None
    omega_max: float | None = None
    sweep_steps: int = 5

    def cavity(self) -> CavityConfig:
        return CavityConfig(self.L, self.epsilon, self.Omega, self.profile)

    def validate(self) -> None:
        self.cavity()  # L / epsilon / Omega / profile bounds live there
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        if self.n_z < 1:
            raise ValueError(f"n_z must be >= 1, got {self.n_z}")
        if self.t_f <= 0:
            raise ValueError(f"t_f must be > 0, got {self.t_f}")
        if self.dt <= 0:
            raise ValueError(f"dt must be > 0, got {self.dt}")
        if self.sample_every < 1:
            raise ValueError(f"sample_every must be >= 1, got {self.sample_every}")
        if self.tau_f < 0:
            raise ValueError(f"tau_f must be >= 0, got {self.tau_f}")
        if self.dtau <= 0:
            raise ValueError(f"dtau must be > 0, got {self.dtau}")
        if self.msa_sample_every < 1:
            raise ValueError(f"msa_sample_every must be >= 1, got {self.msa_sample_every}")
        if self.tol is not None and self.tol <= 0:
            raise ValueError(f"tol must be > 0, got {self.tol}")
        lo, hi = self.fit_window
        if not lo < hi:
            raise ValueError(f"fit_window must satisfy lo < hi, got {self.fit_window}")
        if self.n_tolerance <= 0 or self.lambda_tolerance <= 0:
            raise ValueError("comparison tolerances must be > 0")
        if self.sweep_steps < 1:
            raise ValueError(f"sweep_steps must be >= 1, got {self.sweep_steps}")
        if self.pumps is not None:
            for p in self.pumps:
                if p.nz != self.n_z:
                    raise ValueError(f"pump {p} has nz != configured n_z = {self.n_z}")
                if p.nx > self.n_max or p.ny > self.n_max:
                    raise ValueError(f"pump {p} lies outside the n_max = {self.n_max} basis")

    def parameters_dict(self) -> dict:
        return {
            "L": self.L,
            "epsilon": self.epsilon,
            "Omega": self.Omega,
            "profile": self.profile,
            "n_max": self.n_max,
            "n_z": self.n_z,
        }


_CONFIG_KEYS = {f.name for f in fields(RunConfig)}


def _mode_from_json(v) -> ModeIndex:
    if isinstance(v, str):
        return ModeIndex.from_label(v)
    if isinstance(v, (list, tuple)) and len(v) == 3:
        return ModeIndex(int(v[0]), int(v[1]), int(v[2]))
    raise ValueError(f"cannot parse mode {v!r}; use [nx, ny, nz]")


def load_config(path: str | Path | None, overrides: dict) -> RunConfig:
    """Config file (JSON object) merged with flag overrides (flags win)."""
    data: dict = {}
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValueError(f"config file {path} is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ValueError(f"config file {path} must contain a JSON object")
        unknown = set(data) - _CONFIG_KEYS
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
    data.update({k: v for k, v in overrides.items() if v is not None})
    if "pumps" in data and data["pumps"] is not None:
        data["pumps"] = [_mode_from_json(p) for p in data["pumps"]]
    if "fit_window" in data:
        lo, hi = data["fit_window"]
        data["fit_window"] = (float(lo), float(hi))
    cfg = RunConfig(**data)
    cfg.validate()
    return cfg


def _resolved_pumps(cfg: RunConfig) -> list[ModeIndex]:
    """Configured pumps, else the resonant set at Omega, else the block fundamental."""
    if cfg.pumps:
        return list(cfg.pumps)
    pairs = find_resonant_pairs(cfg.Omega, cfg.L, cfg.n_max, cfg.tol)
    modes = sorted(
        {m for p in pairs for m in p.modes if m.nz == cfg.n_z},
        key=lambda m: (m.nz, m.nx, m.ny),
    )
    return modes or [ModeIndex(1, 1, cfg.n_z)]


def _effective_tf(cfg: RunConfig) -> float:
    """Whole number of drive periods (sinusoidal): the cavity must return
    to its initial orientation before counting quanta."""
    if cfg.profile != "sinusoidal":
        return cfg.t_f
    period = 2.0 * math.pi / cfg.Omega
    k = math.floor(cfg.t_f / period + 1e-9)
    if k < 1:
        raise ValueError(
            f"t_f = {cfg.t_f} is shorter than one drive period {period:.6g}"
        )
    return k * period


def _rotation_profile(cfg: RunConfig) -> RotationProfile:
    if cfg.profile == "sinusoidal":
        return RotationProfile.sinusoidal(cfg.epsilon, cfg.Omega)
    # matched peak angular speed: alpha * t_f equals epsilon * Omega
    return RotationProfile.constant_acceleration(cfg.epsilon * cfg.Omega / cfg.t_f)


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _schema() -> dict:
    text = resources.files("casimir_swing").joinpath("schemas/summary.schema.json").read_text()
    return json.loads(text)


def _emit_summary(summary: dict, out: Path | None, name: str) -> None:
    jsonschema.validate(summary, _schema())
    text = json.dumps(summary, indent=2)
    if out is None:
        print(text)
    else:
        out.mkdir(parents=True, exist_ok=True)
        (out / name).write_text(text + "\n", encoding="utf-8")
        print(f"wrote {out / name}")


def _mode_json(m: ModeIndex) -> list[int]:
    return [m.nx, m.ny, m.nz]


def _pair_json(p) -> dict:
    return {
        "lo": _mode_json(p.lo),
        "hi": _mode_json(p.hi),
        "detuning": p.detuning,
        "axis": p.coupled_axis,
    }


# ---------------------------------------------------------------------------
# subcommands


def cmd_spectrum(cfg: RunConfig, out: Path | None, fmt: str) -> int:
    modes = [
        ModeIndex(nx, ny, cfg.n_z)
        for nx in range(1, cfg.n_max + 1)
        for ny in range(1, cfg.n_max + 1)
    ]
    rows = sorted(
        ((m, mode_frequency(m, cfg.L)) for m in modes),
        key=lambda r: (r[1], r[0].astuple()),
    )
    if fmt == "csv":
        header = ["mode", "omega"]
        table = [[m.label, _fmt(w)] for m, w in rows]
        if out is None:
            print(",".join(header))
            for r in table:
                print(",".join(r))
        else:
            out.mkdir(parents=True, exist_ok=True)
            _write_csv(out / "spectrum.csv", header, table)
            print(f"wrote {out / 'spectrum.csv'}")
        return 0
    summary = {
        "command": "spectrum",
        "parameters": cfg.parameters_dict(),
        "rows": [{"mode": _mode_json(m), "omega": w} for m, w in rows],
    }
    _emit_summary(summary, out, "spectrum_summary.json")
    return 0


def cmd_resonances(cfg: RunConfig, out: Path | None, fmt: str) -> int:
    pairs = find_resonant_pairs(cfg.Omega, cfg.L, cfg.n_max, cfg.tol)
    if fmt == "csv":
        header = ["lo", "hi", "detuning", "axis"]
        table = [[p.lo.label, p.hi.label, _fmt(p.detuning), p.coupled_axis] for p in pairs]
        if out is None:
            print(",".join(header))
            for r in table:
                print(",".join(r))
        else:
            out.mkdir(parents=True, exist_ok=True)
            _write_csv(out / "resonances.csv", header, table)
            print(f"wrote {out / 'resonances.csv'}")
        return 0
    summary = {
        "command": "resonances",
        "parameters": cfg.parameters_dict(),
        "rows": [_pair_json(p) for p in pairs],
    }
    _emit_summary(summary, out, "resonances_summary.json")
    return 0


def _amplitude_header(modes, pumps) -> list[str]:
    header = ["tau"]
    for k in pumps:
        for m in modes:
            tag = f"{m.label}_p{k.label}"
            header += [f"beta_re_{tag}", f"beta_im_{tag}", f"alpha_re_{tag}", f"alpha_im_{tag}"]
    header += [f"n_{m.label}" for m in modes]
    return header


def _amplitude_row(tau, beta, alpha, omegas) -> list[str]:
    row = [_fmt(tau)]
    n_modes, n_pumps = beta.shape
    for k in range(n_pumps):
        for m in range(n_modes):
            row += [
                _fmt(beta[m, k].real), _fmt(beta[m, k].imag),
                _fmt(alpha[m, k].real), _fmt(alpha[m, k].imag),
            ]
    n = 2.0 * omegas * np.sum(np.abs(beta) ** 2, axis=1)
    row += [_fmt(v) for v in n]
    return row


def cmd_msa(cfg: RunConfig, out: Path | None) -> int:
    pairs = find_resonant_pairs(cfg.Omega, cfg.L, cfg.n_max, cfg.tol)
    system = build_slow_system(pairs, cfg.Omega, cfg.L, cfg.epsilon)
    traj = integrate_reduced(system, cfg.tau_f, cfg.dtau)
    keep = np.arange(0, len(traj.taus), cfg.msa_sample_every)
    if keep[-1] != len(traj.taus) - 1:
        keep = np.append(keep, len(traj.taus) - 1)

    ref = three_mode_omega(cfg.L)
    analytic = abs(cfg.Omega - ref) <= 1e-9 * ref and system.size > 0
    if analytic:
        lam2 = three_mode_lambda_squared(cfg.Omega, cfg.L)
        lam = math.sqrt(lam2)
    else:
        lam = dominant_growth_rate(system)
        lam2 = lam * lam

    outputs: dict[str, str] = {}
    max_diff = None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        header = _amplitude_header(system.modes, system.modes)
        rows = [
            _amplitude_row(traj.taus[i], traj.beta[i], traj.alpha[i], system.omegas)
            for i in keep
        ]
        _write_csv(out / "msa_numeric.csv", header, rows)
        outputs["numeric_csv"] = str(out / "msa_numeric.csv")
    if analytic:
        diffs = []
        rows = []
        for i in keep:
            amps = solve_three_mode_analytic(cfg.Omega, cfg.L, float(traj.taus[i]))
            diffs.append(
                max(
                    float(np.max(np.abs(amps.beta - traj.beta[i]))),
                    float(np.max(np.abs(amps.alpha - traj.alpha[i]))),
                )
            )
            rows.append(_amplitude_row(traj.taus[i], amps.beta, amps.alpha, system.omegas))
        max_diff = max(diffs)
        if out is not None:
            _write_csv(out / "msa_analytic.csv", header, rows)
            outputs["analytic_csv"] = str(out / "msa_analytic.csv")

    final = traj.final
    n_final = 2.0 * system.omegas * np.sum(np.abs(final.beta) ** 2, axis=1)
    summary = {
        "command": "msa",
        "parameters": cfg.parameters_dict(),
        "tau_f": cfg.tau_f,
        "modes": [_mode_json(m) for m in system.modes],
        "pairs": [_pair_json(p) for p in pairs],
        "lambda_squared": lam2,
        "lambda": lam,
        "amplifying": bool(lam > 0),
        "analytic_available": bool(analytic),
        "max_analytic_numeric_diff": max_diff,
        "particle_numbers": [
            {"mode": _mode_json(m), "value": float(n)}
            for m, n in zip(system.modes, n_final)
        ],
        "outputs": outputs,
    }
    _emit_summary(summary, out, "msa_summary.json")
    return 0


def _direct_runs(cfg: RunConfig, pumps: list[ModeIndex]) -> tuple[list[DirectSeries], float]:
    system = build_coupled_system(cfg.n_max, cfg.n_z, cfg.L)
    profile = _rotation_profile(cfg)
    bound = max_timestep(system, profile)
    if cfg.dt > bound * (1 + 1e-12):
        raise ValueError(
            f"dt = {cfg.dt:.6g} too coarse for n_max = {cfg.n_max}, "
            f"Omega = {cfg.Omega:.6g}: need dt <= {bound:.6g}"
        )
    t_f = _effective_tf(cfg)
    runs = [
        integrate_full(system, profile, p, t_f, cfg.dt, cfg.sample_every) for p in pumps
    ]
    return runs, t_f


def _fit_window_for(cfg: RunConfig, tau: np.ndarray) -> tuple[float, float]:
    lo, hi = cfg.fit_window
    hi = min(hi, float(tau[-1]))
    if not lo < hi or int(((tau >= lo) & (tau <= hi)).sum()) < 3:
        raise ValueError(
            f"fit window {cfg.fit_window} does not contain 3 samples within "
            f"the integrated range tau <= {tau[-1]:.6g}"
        )
    return lo, hi


def cmd_direct(cfg: RunConfig, out: Path | None) -> int:
    if out is None:
        raise ValueError("direct needs --out to place its CSV time series")
    pumps = _resolved_pumps(cfg)
    runs, t_f = _direct_runs(cfg, pumps)
    system = runs[0].system
    out.mkdir(parents=True, exist_ok=True)
    outputs: dict[str, str] = {}

    for r in runs:
        beta, alpha = slow_amplitude_series(r)
        header = ["t", "tau"]
        for m in system.basis:
            lbl = m.label
            header += [
                f"abs_c_{lbl}", f"beta_re_{lbl}", f"beta_im_{lbl}",
                f"alpha_re_{lbl}", f"alpha_im_{lbl}",
            ]
        rows = []
        for i, t in enumerate(r.t):
            row = [_fmt(t), _fmt(cfg.epsilon * t)]
            for j in range(system.size):
                row += [
                    _fmt(abs(r.c[i, j])),
                    _fmt(beta[i, j].real), _fmt(beta[i, j].imag),
                    _fmt(alpha[i, j].real), _fmt(alpha[i, j].imag),
                ]
            rows.append(row)
        name = f"direct_p{r.pump.label}.csv"
        _write_csv(out / name, header, rows)
        outputs[f"pump_{r.pump.label}_csv"] = str(out / name)

    series = [
        particle_number_series(runs, m, pumps=pumps, slow_scale=cfg.epsilon)
        for m in system.basis
    ]
    header = ["t", "tau"] + [f"n_{m.label}" for m in system.basis]
    rows = [
        [_fmt(series[0].t[i]), _fmt(series[0].tau[i])] + [_fmt(s.values[i]) for s in series]
        for i in range(len(series[0].t))
    ]
    _write_csv(out / "direct_particles.csv", header, rows)
    outputs["particles_csv"] = str(out / "direct_particles.csv")

    window = _fit_window_for(cfg, series[0].tau)
    fits = []
    for p in pumps:
        s = series[system.index_of(p)]
        f = fit_growth_rate(s, window)
        fits.append(
            {
                "mode": _mode_json(p),
                "lambda_fit": f.lambda_fit,
                "r_squared": f.r_squared,
                "n_final": float(s.values[-1]),
            }
        )

    summary = {
        "command": "direct",
        "parameters": cfg.parameters_dict(),
        "pumps": [_mode_json(p) for p in pumps],
        "t_f_requested": cfg.t_f,
        "t_f_effective": t_f,
        "dt": cfg.dt,
        "fit_window": list(window),
        "fits": fits,
        "outputs": outputs,
    }
    _emit_summary(summary, out, "direct_summary.json")
    return 0


def cmd_compare(cfg: RunConfig, out: Path | None) -> int:
    pairs = find_resonant_pairs(cfg.Omega, cfg.L, cfg.n_max, cfg.tol)
    slow = build_slow_system(pairs, cfg.Omega, cfg.L, cfg.epsilon)
    msa_applicable = slow.size > 0

    pumps = _resolved_pumps(cfg)
    runs, t_f = _direct_runs(cfg, pumps)
    system = runs[0].system

    if cfg.epsilon == 0.0:
        # drive off: both sides predict exactly no created quanta
        worst = max(
            float(particle_number_series(runs, m, pumps=pumps, slow_scale=0.0).values.max())
            for m in (slow.modes or [pumps[0]])
        )
        summary = {
            "command": "compare",
            "parameters": cfg.parameters_dict(),
            "msa_applicable": msa_applicable,
            "window": list(cfg.fit_window),
            "tolerances": {"n_rel": cfg.n_tolerance, "lambda_rel": cfg.lambda_tolerance},
            "lambda_msa": None,
            "lambda_fit": None,
            "lambda_rel_err": None,
            "max_n_rel_err": worst,
            "per_mode": [
                {"mode": _mode_json(m), "max_rel_err": worst} for m in slow.modes
            ],
            "passed": bool(worst <= cfg.n_tolerance),
        }
        _emit_summary(summary, out, "compare_report.json")
        return 0 if summary["passed"] else 2

    tau_end = cfg.epsilon * t_f
    window = _fit_window_for(cfg, runs[0].t * cfg.epsilon)

    summary = {
        "command": "compare",
        "parameters": cfg.parameters_dict(),
        "msa_applicable": msa_applicable,
        "window": list(window),
        "tolerances": {"n_rel": cfg.n_tolerance, "lambda_rel": cfg.lambda_tolerance},
    }

    if not msa_applicable:
        summary.update(
            {
                "lambda_msa": None,
                "lambda_fit": None,
                "lambda_rel_err": None,
                "max_n_rel_err": None,
                "per_mode": [],
                "passed": True,
            }
        )
        _emit_summary(summary, out, "compare_report.json")
        return 0

    traj = integrate_reduced(slow, tau_end, cfg.dtau)
    n_slow = 2.0 * slow.omegas[None, :] * np.sum(np.abs(traj.beta) ** 2, axis=2)

    ref = three_mode_omega(cfg.L)
    if abs(cfg.Omega - ref) <= 1e-9 * ref:
        lam_msa = math.sqrt(three_mode_lambda_squared(cfg.Omega, cfg.L))
    else:
        lam_msa = dominant_growth_rate(slow)

    per_mode = []
    max_rel = 0.0
    dominant_mode = slow.modes[int(np.argmax(n_slow[-1]))]
    for j, m in enumerate(slow.modes):
        s = particle_number_series(runs, m, pumps=pumps, slow_scale=cfg.epsilon)
        mask = (s.tau >= window[0]) & (s.tau <= window[1])
        predicted = np.interp(s.tau[mask], traj.taus, n_slow[:, j])
        rel = np.abs(s.values[mask] - predicted) / np.maximum(np.abs(predicted), 1e-12)
        worst = float(rel.max())
        per_mode.append({"mode": _mode_json(m), "max_rel_err": worst})
        max_rel = max(max_rel, worst)

    fit = fit_growth_rate(
        particle_number_series(runs, dominant_mode, pumps=pumps, slow_scale=cfg.epsilon),
        window,
    )
    lam_rel = abs(fit.lambda_fit - lam_msa) / lam_msa if lam_msa > 0 else 0.0
    passed = bool(max_rel <= cfg.n_tolerance and lam_rel <= cfg.lambda_tolerance)
    summary.update(
        {
            "lambda_msa": lam_msa,
            "lambda_fit": fit.lambda_fit,
            "lambda_rel_err": lam_rel,
            "max_n_rel_err": max_rel,
            "per_mode": per_mode,
            "passed": passed,
        }
    )
    _emit_summary(summary, out, "compare_report.json")
    return 0 if passed else 2


def _sweep_workers() -> int:
    raw = os.environ.get(THREADS_ENV, "0")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"{THREADS_ENV} must be >= 0, got {n}")
    return n or (os.cpu_count() or 1)


def cmd_sweep(cfg: RunConfig, out: Path | None) -> int:
    if out is None:
        raise ValueError("sweep needs --out to place its CSV")
    lo = cfg.omega_min if cfg.omega_min is not None else 0.9 * cfg.Omega
    hi = cfg.omega_max if cfg.omega_max is not None else 1.1 * cfg.Omega
    if not 0 < lo <= hi:
        raise ValueError(f"sweep range must satisfy 0 < omega_min <= omega_max, got [{lo}, {hi}]")
    grid = np.linspace(lo, hi, cfg.sweep_steps)
    pumps = _resolved_pumps(cfg)
    fundamental = ModeIndex(1, 1, cfg.n_z)

    def one(omega: float) -> tuple[float, float, float]:
        point = replace(cfg, Omega=float(omega), pumps=pumps)
        runs, _ = _direct_runs(point, pumps)
        s = particle_number_series(runs, fundamental, pumps=pumps, slow_scale=cfg.epsilon)
        f = fit_growth_rate(s, _fit_window_for(point, s.tau))
        return f.lambda_fit, f.r_squared, float(s.values[-1])

    with ThreadPoolExecutor(max_workers=_sweep_workers()) as pool:
        results = list(pool.map(one, grid))

    out.mkdir(parents=True, exist_ok=True)
    header = ["omega", "lambda_fit", "r_squared", "n_fundamental"]
    rows = [
        [_fmt(w), _fmt(lam), _fmt(r2), _fmt(n)]
        for w, (lam, r2, n) in zip(grid, results)
    ]
    _write_csv(out / "sweep.csv", header, rows)

    summary = {
        "command": "sweep",
        "parameters": cfg.parameters_dict(),
        "pumps": [_mode_json(p) for p in pumps],
        "rows": [
            {"omega": float(w), "lambda_fit": lam, "r_squared": r2, "n_fundamental": n}
            for w, (lam, r2, n) in zip(grid, results)
        ],
        "outputs": {"sweep_csv": str(out / "sweep.csv")},
    }
    _emit_summary(summary, out, "sweep_summary.json")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir-swing",
        description="Resonant particle creation in a cavity swinging about its axis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("spectrum", "mode frequencies of the static cavity"),
        ("resonances", "mode pairs matching the drive frequency"),
        ("msa", "slow-time reduction: amplitudes and particle numbers"),
        ("direct", "direct integration of the coupled-mode system"),
        ("compare", "cross-validate direct integration against the slow-time prediction"),
        ("sweep", "scan the drive frequency and fit growth rates"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", type=str, default=None, help="JSON config file")
        p.add_argument("--out", type=str, default=None, help="output directory")
        p.add_argument("--format", choices=["csv", "json"], default="csv",
                       help="table format for spectrum/resonances")
        p.add_argument("--omega", type=float, default=None, help="drive frequency")
        p.add_argument("--epsilon", type=float, default=None, help="swing amplitude (rad)")
        p.add_argument("--nmax", type=int, default=None, help="per-axis mode truncation")
        p.add_argument("--nz", type=int, default=None, help="axial mode number of the block")
        p.add_argument("--tf", type=float, default=None, help="integration time")
        p.add_argument("--dt", type=float, default=None, help="integrator step")
        p.add_argument("--tol", type=float, default=None, help="resonance match tolerance")
        p.add_argument("--tauf", type=float, default=None, help="slow-time horizon")
        p.add_argument("--dtau", type=float, default=None, help="slow-time step")
        p.add_argument("--profile", choices=["sinusoidal", "constant-acceleration"],
                       default=None, help="rotation profile")
        p.add_argument("--pump", action="append", default=None, metavar="NX,NY,NZ",
                       help="pump mode (repeatable)")
        p.add_argument("--sample-every", type=int, default=None, dest="sample_every",
                       help="record every k-th step")
        if name == "sweep":
            p.add_argument("--omega-min", type=float, default=None, dest="omega_min")
            p.add_argument("--omega-max", type=float, default=None, dest="omega_max")
            p.add_argument("--sweep-steps", type=int, default=None, dest="sweep_steps")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1

    overrides = {
        "Omega": args.omega,
        "epsilon": args.epsilon,
        "n_max": args.nmax,
        "n_z": args.nz,
        "t_f": args.tf,
        "dt": args.dt,
        "tol": args.tol,
        "tau_f": args.tauf,
        "dtau": args.dtau,
        "profile": args.profile,
        "sample_every": args.sample_every,
        "pumps": args.pump,
        "omega_min": getattr(args, "omega_min", None),
        "omega_max": getattr(args, "omega_max", None),
        "sweep_steps": getattr(args, "sweep_steps", None),
    }
    out = Path(args.out) if args.out else None
    try:
        cfg = load_config(args.config, overrides)
        if args.command == "spectrum":
            return cmd_spectrum(cfg, out, args.format)
        if args.command == "resonances":
            return cmd_resonances(cfg, out, args.format)
        if args.command == "msa":
            return cmd_msa(cfg, out)
        if args.command == "direct":
            return cmd_direct(cfg, out)
        if args.command == "compare":
            return cmd_compare(cfg, out)
        if args.command == "sweep":
            return cmd_sweep(cfg, out)
        raise ValueError(f"unknown command {args.command!r}")
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
