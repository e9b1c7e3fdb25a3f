"""Maps between the convective, temperature and flux boundary families.

The three boundary variants are equivalent in the sense that, given a
solved problem of one family, there is a boundary datum for another family
whose solution has the same front coefficient and the same temperature
field.  The datum of the target family is read off the solved source at
the fixed face: the face temperature supplies the temperature datum, the
face flux supplies the flux datum, and the convective datum is whatever
transfer coefficient makes the convective balance hold.

Each map solves its source internally, so a caller cannot pass a stale or
wrong front coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .kummer import kummer_m
from .stefan import (
    Convective,
    Flux,
    ProblemSpec,
    RootSolverConfig,
    Temperature,
    solve_front,
)

__all__ = [
    "EquivalenceReport",
    "convective_to_temperature",
    "temperature_to_convective",
    "convective_to_flux",
    "flux_to_convective",
    "equivalence_report",
]


@dataclass(frozen=True)
class EquivalenceReport:
    source_spec: ProblemSpec
    target_spec: ProblemSpec
    nu_source: float
    nu_target: float
    max_temperature_gap: float


def _require_family(problem: ProblemSpec, family, op: str) -> None:
    if not isinstance(problem.boundary, family):
        raise ValueError(f"{op} requires a {family.__name__} source, got "
                         f"{type(problem.boundary).__name__}")


def _basis_at_front(problem: ProblemSpec, nu: float) -> tuple[float, float]:
    z = -nu * nu
    return (
        kummer_m(-problem.alpha / 2.0, 0.5, z),
        kummer_m(-problem.alpha / 2.0 + 0.5, 1.5, z),
    )


def convective_to_temperature(
    problem: ProblemSpec, cfg: RootSolverConfig | None = None
) -> ProblemSpec:
    """Temperature-family problem with the same solution as the convective one.

    The datum is the solved face temperature coefficient u(0,t)/t^{alpha/2};
    it is always strictly below the bulk coefficient t_inf.
    """
    _require_family(problem, Convective, "convective_to_temperature")
    sol = solve_front(problem, cfg)
    return ProblemSpec(
        alpha=problem.alpha,
        boundary=Temperature(t0=sol.coeff_even),
        gamma=problem.gamma,
        d=problem.d,
        k=problem.k,
    )


def temperature_to_convective(
    problem: ProblemSpec, t_inf: float, cfg: RootSolverConfig | None = None
) -> ProblemSpec:
    """Convective-family problem with the same solution as the temperature one.

    Needs a bulk coefficient t_inf strictly above the face datum t0; at
    t_inf = t0 the required transfer coefficient diverges.
    """
    _require_family(problem, Temperature, "temperature_to_convective")
    t0 = problem.boundary.t0
    if not (math.isfinite(t_inf) and t_inf > t0):
        raise ValueError(
            f"bulk coefficient t_inf={t_inf} must exceed the face datum "
            f"t0={t0} (threshold {t0})"
        )
    sol = solve_front(problem, cfg)
    m_even, m_odd = _basis_at_front(problem, sol.nu)
    h0 = (
        -problem.k
        * t0
        * m_even
        / (2.0 * math.sqrt(problem.d) * (t0 - t_inf) * sol.nu * m_odd)
    )
    return ProblemSpec(
        alpha=problem.alpha,
        boundary=Convective(h0=h0, t_inf=t_inf),
        gamma=problem.gamma,
        d=problem.d,
        k=problem.k,
    )


def convective_to_flux(
    problem: ProblemSpec, cfg: RootSolverConfig | None = None
) -> ProblemSpec:
    """Flux-family problem with the same solution as the convective one.

    The datum is the solved inward face flux coefficient
    -k u_x(0,t)/t^{(alpha-1)/2}, which is positive for melting data.
    """
    _require_family(problem, Convective, "convective_to_flux")
    sol = solve_front(problem, cfg)
    c = -problem.k * sol.coeff_odd / (2.0 * math.sqrt(problem.d))
    return ProblemSpec(
        alpha=problem.alpha,
        boundary=Flux(c=c),
        gamma=problem.gamma,
        d=problem.d,
        k=problem.k,
    )


def flux_threshold(problem: ProblemSpec, cfg: RootSolverConfig | None = None) -> float:
    """Smallest bulk coefficient compatible with a convective match of the
    given flux problem (the face temperature coefficient of its solution)."""
    _require_family(problem, Flux, "flux_threshold")
    sol = solve_front(problem, cfg)
    m_even, m_odd = _basis_at_front(problem, sol.nu)
    return (
        2.0 * problem.boundary.c * math.sqrt(problem.d) / problem.k
        * sol.nu * m_odd / m_even
    )


def flux_to_convective(
    problem: ProblemSpec, t_inf: float, cfg: RootSolverConfig | None = None
) -> ProblemSpec:
    """Convective-family problem with the same solution as the flux one.

    Needs t_inf strictly above the solved face temperature coefficient
    (see ``flux_threshold``); at the threshold the transfer coefficient
    diverges.
    """
    _require_family(problem, Flux, "flux_to_convective")
    sol = solve_front(problem, cfg)
    m_even, m_odd = _basis_at_front(problem, sol.nu)
    c = problem.boundary.c
    sqrt_d = math.sqrt(problem.d)
    threshold = 2.0 * c * sqrt_d / problem.k * sol.nu * m_odd / m_even
    if not (math.isfinite(t_inf) and t_inf > threshold):
        raise ValueError(
            f"bulk coefficient t_inf={t_inf} must exceed the face "
            f"temperature of the flux solution (threshold {threshold})"
        )
    h0 = -c * m_even / (
        2.0 * c * sqrt_d / problem.k * sol.nu * m_odd - t_inf * m_even
    )
    return ProblemSpec(
        alpha=problem.alpha,
        boundary=Convective(h0=h0, t_inf=t_inf),
        gamma=problem.gamma,
        d=problem.d,
        k=problem.k,
    )


def equivalence_report(
    source: ProblemSpec,
    target: ProblemSpec,
    nx: int = 20,
    nt: int = 20,
    t_span: tuple[float, float] = (0.1, 2.0),
    cfg: RootSolverConfig | None = None,
) -> EquivalenceReport:
    """Solve both problems and measure the largest temperature mismatch on
    an nx-by-nt grid spanning the melted region of the source."""
    sol_s = solve_front(source, cfg)
    sol_t = solve_front(target, cfg)
    t_lo, t_hi = t_span
    gap = 0.0
    for i in range(nt):
        t = t_lo + (t_hi - t_lo) * (i + 1.0) / nt
        s_t = sol_s.front_position(t)
        for j in range(nx):
            x = s_t * (j + 0.5) / nx
            gap = max(gap, abs(sol_s.temperature(x, t) - sol_t.temperature(x, t)))
    return EquivalenceReport(
        source_spec=source,
        target_spec=target,
        nu_source=sol_s.nu,
        nu_target=sol_t.nu,
        max_temperature_gap=gap,
    )
