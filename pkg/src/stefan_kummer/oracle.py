"""Fixed-grid enthalpy solver used as ground truth for the closed form.

The scheme shares no code with the similarity solution: it integrates the
heat equation explicitly on a cell-centered grid and tracks the melting
front through a per-cell latent-heat budget.  Cell i (center x_i, width
dx) carries a per-area heat content H_i; the first gamma * x_i**alpha * dx
of it melts the cell (midpoint rule for the position-dependent latent
heat) and the excess is sensible heat with volumetric capacity k/d.
Partially melted cells sit at the phase-change temperature 0, which also
blocks conduction past the front, as befits a one-phase model.  The front
position is the melted length: fully melted cells plus the liquid
fraction of the first partial cell.

The time-dependent boundary data are singular at t = 0, so integration
starts at t0 = start_fraction * t_end with the closed-form state as the
initial condition; the comparison therefore validates propagation, not
initialization.  Set ``cold_start=True`` to start from an all-solid state
instead (independent of the closed form, but with an initialization
transient).

Explicit stepping with dt = dt_safety * dx**2 / d; the update is
conservative, so the energy-balance drift it reports measures bookkeeping
consistency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .stefan import Convective, ProblemSpec, SimilaritySolution, Temperature, solve_front

__all__ = [
    "OracleConfig",
    "OracleResult",
    "ComparisonReport",
    "run_oracle",
    "compare_to_closed_form",
]


@dataclass(frozen=True)
class OracleConfig:
    """Grid, horizon and stepping controls.

    domain_length should be at least ~4x the expected final front position
    so the zero-flux far end never matters; ``run_oracle`` raises if the
    front gets close to it.
    """

    domain_length: float
    t_end: float
    nx: int = 2000
    dt_safety: float = 0.4
    liquid_fraction_tol: float = 1e-10
    start_fraction: float = 0.01
    cold_start: bool = False
    n_front_records: int = 200
    n_snapshots: int = 10

    def __post_init__(self):
        if self.domain_length <= 0.0:
            raise ValueError("domain_length must be positive")
        if self.t_end <= 0.0:
            raise ValueError("t_end must be positive")
        if self.nx < 50:
            raise ValueError("nx must be at least 50")
        if not 0.0 < self.dt_safety <= 0.5:
            raise ValueError("dt_safety must lie in (0, 0.5]")
        if not 0.0 < self.liquid_fraction_tol < 1e-2:
            raise ValueError("liquid_fraction_tol must lie in (0, 1e-2)")
        if not 0.0 < self.start_fraction <= 1.0:
            raise ValueError("start_fraction must lie in (0, 1]")
        if self.n_front_records < 2 or self.n_snapshots < 1:
            raise ValueError("need at least 2 front records and 1 snapshot")


@dataclass(frozen=True)
class OracleResult:
    problem: ProblemSpec
    config: OracleConfig
    x_centers: np.ndarray
    times: np.ndarray
    front_positions: np.ndarray
    temperature_snapshots: tuple[tuple[float, np.ndarray], ...]
    energy_balance_drift: float


@dataclass(frozen=True)
class ComparisonReport:
    max_front_err: float
    max_field_err: float


def _boundary_flux(problem: ProblemSpec, dx: float):
    """Inward heat flux through the fixed face as a function of time and
    of the first cell's temperature (half-cell conduction included)."""
    alpha, k = problem.alpha, problem.k
    b = problem.boundary
    if isinstance(b, Convective):
        def q_in(t: float, u0: float) -> float:
            resistance = math.sqrt(t) / b.h0 + dx / (2.0 * k)
            return (b.t_inf * t ** (alpha / 2.0) - u0) / resistance

    elif isinstance(b, Temperature):
        conductance = 2.0 * k / dx

        def q_in(t: float, u0: float) -> float:
            return (b.t0 * t ** (alpha / 2.0) - u0) * conductance

    else:
        def q_in(t: float, u0: float) -> float:
            return b.c * t ** ((alpha - 1.0) / 2.0)

    return q_in


def _front_position(H: np.ndarray, lam: np.ndarray, dx: float, tol: float) -> tuple[float, int]:
    phi = np.clip(H / lam, 0.0, 1.0)
    full = int(np.count_nonzero(phi >= 1.0 - tol))
    partial = float(phi[full]) if full < phi.size else 0.0
    return (full + partial) * dx, full


def run_oracle(problem: ProblemSpec, cfg: OracleConfig) -> OracleResult:
    """Integrate the enthalpy scheme and record front history and
    temperature snapshots."""
    nx = cfg.nx
    dx = cfg.domain_length / nx
    x_centers = (np.arange(nx) + 0.5) * dx
    lam = problem.gamma * x_centers**problem.alpha * dx
    heat_capacity = problem.k / problem.d  # per volume
    t0 = cfg.start_fraction * cfg.t_end

    H = np.zeros(nx)
    if not cfg.cold_start:
        sol = solve_front(problem)
        s0 = sol.front_position(t0)
        if s0 >= cfg.domain_length - 2.0 * dx:
            raise RuntimeError(
                "initial front already at the domain end; enlarge domain_length"
            )
        n_full = int(s0 / dx)  # cells with right edge below s0
        for i in range(n_full):
            H[i] = lam[i] + heat_capacity * dx * sol.temperature(x_centers[i], t0)
        if n_full < nx:
            H[n_full] = (s0 / dx - n_full) * lam[n_full]

    if cfg.start_fraction == 1.0:
        n_steps = 0
        dt = 0.0
    else:
        dt = cfg.dt_safety * dx * dx / problem.d
        n_steps = max(1, math.ceil((cfg.t_end - t0) / dt))
        dt = (cfg.t_end - t0) / n_steps

    # Record schedules as step indices (0 = initial state).
    def _steps_for(n: int) -> list[int]:
        if n_steps == 0:
            return [0]
        targets = np.linspace(t0, cfg.t_end, n)
        idx = np.rint((targets - t0) / dt).astype(int)
        return sorted(set(int(i) for i in np.clip(idx, 0, n_steps)))

    front_steps = _steps_for(cfg.n_front_records)
    snap_steps = _steps_for(cfg.n_snapshots + 1)[1:] if n_steps else [0]

    q_in = _boundary_flux(problem, dx)
    tol = cfg.liquid_fraction_tol
    energy_start = float(H.sum())
    energy_in = 0.0

    times: list[float] = []
    fronts: list[float] = []
    snapshots: list[tuple[float, np.ndarray]] = []

    u = np.empty(nx)
    qi = np.empty(nx - 1)
    core = np.empty(nx - 2)
    sens_scale = problem.d / (problem.k * dx)
    k_over_dx = problem.k / dx

    def record(step: int) -> None:
        t_now = t0 + step * dt
        s_now, full = _front_position(H, lam, dx, tol)
        if full >= nx - 2:
            raise RuntimeError(
                f"front reached the domain end at t={t_now}; enlarge domain_length"
            )
        times.append(t_now)
        fronts.append(s_now)

    front_ptr = 0
    snap_ptr = 0
    if front_steps[0] == 0:
        record(0)
        front_ptr = 1
    if snap_steps and snap_steps[0] == 0:
        np.clip(H, 0.0, lam, out=u)
        np.subtract(H, u, out=u)
        u *= sens_scale
        snapshots.append((t0, u.copy()))
        snap_ptr = 1

    for step in range(n_steps):
        t = t0 + step * dt
        # sensible temperature from enthalpy
        np.clip(H, 0.0, lam, out=u)
        np.subtract(H, u, out=u)
        u *= sens_scale
        # interior face fluxes k (u_i - u_{i+1}) / dx
        np.subtract(u[:-1], u[1:], out=qi)
        qi *= k_over_dx
        q0 = q_in(t, float(u[0]))
        # conservative update
        np.subtract(qi[:-1], qi[1:], out=core)
        core *= dt
        H[1:-1] += core
        H[0] += dt * (q0 - qi[0])
        H[-1] += dt * qi[-1]
        energy_in += q0 * dt

        done = step + 1
        if front_ptr < len(front_steps) and done == front_steps[front_ptr]:
            record(done)
            front_ptr += 1
        if snap_ptr < len(snap_steps) and done == snap_steps[snap_ptr]:
            np.clip(H, 0.0, lam, out=u)
            np.subtract(H, u, out=u)
            u *= sens_scale
            snapshots.append((t0 + done * dt, u.copy()))
            snap_ptr += 1

    drift_scale = max(abs(energy_in), abs(energy_start), 1e-300)
    drift = abs(float(H.sum()) - energy_start - energy_in) / drift_scale
    return OracleResult(
        problem=problem,
        config=cfg,
        x_centers=x_centers,
        times=np.asarray(times),
        front_positions=np.asarray(fronts),
        temperature_snapshots=tuple(snapshots),
        energy_balance_drift=drift,
    )


def compare_to_closed_form(
    result: OracleResult,
    sol: SimilaritySolution,
    t_window: tuple[float, float] | None = None,
) -> ComparisonReport:
    """Sup-norm relative errors of the front trajectory and of the
    temperature snapshots over the melted region.

    The field error at each snapshot is normalized by the largest
    closed-form temperature at that time (pointwise relative error is
    meaningless next to the front, where both fields vanish).
    """
    if result.problem != sol.problem:
        raise ValueError("oracle result and closed form describe different problems")
    if t_window is None:
        lo, hi = float(result.times[0]), float(result.times[-1])
    else:
        lo, hi = t_window

    max_front_err = 0.0
    for t, s_fd in zip(result.times, result.front_positions):
        if not (lo <= t <= hi and t > 0.0):
            continue
        s_cf = sol.front_position(float(t))
        if s_cf > 0.0:
            max_front_err = max(max_front_err, abs(float(s_fd) - s_cf) / s_cf)

    dx = result.config.domain_length / result.config.nx
    max_field_err = 0.0
    for t, u in result.temperature_snapshots:
        if not (lo <= t <= hi):
            continue
        s_cf = sol.front_position(t)
        inside = result.x_centers < s_cf - dx
        if not inside.any():
            continue
        ref = np.array([sol.temperature(float(x), t) for x in result.x_centers[inside]])
        scale = float(np.abs(ref).max())
        if scale == 0.0:
            continue
        err = float(np.abs(u[inside] - ref).max())
        max_field_err = max(max_field_err, err / scale)

    return ComparisonReport(max_front_err=max_front_err, max_field_err=max_field_err)
