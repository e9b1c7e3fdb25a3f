"""One-phase melting with latent heat growing as a power of position.

The liquid occupies 0 < x < s(t) of a semi-infinite slab, the solid sits
at the phase-change temperature 0, and melting material at position x
absorbs latent heat gamma * x**alpha per unit volume.  Heat enters at the
fixed face x = 0 through one of three boundary conditions:

* ``Convective``  k u_x(0,t) = h0 t^{-1/2} (u(0,t) - t_inf t^{alpha/2})
* ``Temperature`` u(0,t) = t0 t^{alpha/2}
* ``Flux``        k u_x(0,t) = -c t^{(alpha-1)/2}

Each variant admits a similarity solution

    u(x, t) = t^{alpha/2} [ A M(-alpha/2, 1/2, -eta^2)
                            + B eta M(-alpha/2 + 1/2, 3/2, -eta^2) ],
    s(t) = 2 nu sqrt(d t),      eta = x / (2 sqrt(d t)),

where the front coefficient nu is the unique positive root of a variant-
specific transcendental equation.  ``solve_front`` finds nu with a
bracketed, bisection-safeguarded Newton iteration and returns the fully
determined closed form.

Only the melting case is modelled (all data positive).  The freezing case
maps onto it by flipping the signs of gamma and of the boundary datum, so
it is rejected at construction rather than duplicated.

All quantities are treated as consistent, nondimensionalized reals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .kummer import NonConvergenceError, e_n, f_n, gamma_fn, kummer_m

__all__ = [
    "BracketNotFoundError",
    "Convective",
    "Temperature",
    "Flux",
    "ProblemSpec",
    "RootSolverConfig",
    "SolverReport",
    "SimilaritySolution",
    "front_equation_lhs",
    "front_equation_residual",
    "residual_derivative",
    "solve_front",
    "front_equation_integer_alpha",
    "temperature_integer_alpha",
]

# Relative residual accepted at the solved front coefficient.
_RESIDUAL_RTOL = 1e-12


class BracketNotFoundError(RuntimeError):
    """No sign change found for the front equation (invalid problem data)."""


def _require_positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0.0):
        raise ValueError(f"{name} must be a positive finite real, got {value}")


@dataclass(frozen=True)
class Convective:
    """Heat exchange with a bulk at temperature t_inf * t^{alpha/2},
    transfer coefficient h0 * t^{-1/2}."""

    h0: float
    t_inf: float

    def __post_init__(self):
        _require_positive("h0", self.h0)
        _require_positive("t_inf", self.t_inf)


@dataclass(frozen=True)
class Temperature:
    """Imposed face temperature t0 * t^{alpha/2}."""

    t0: float

    def __post_init__(self):
        _require_positive("t0", self.t0)


@dataclass(frozen=True)
class Flux:
    """Imposed inward face heat flux c * t^{(alpha-1)/2}."""

    c: float

    def __post_init__(self):
        _require_positive("c", self.c)


Boundary = Convective | Temperature | Flux


@dataclass(frozen=True)
class ProblemSpec:
    """Physical data for one melting problem.

    alpha is the latent-heat exponent (>= 0), gamma the latent-heat
    coefficient, d the diffusivity and k the conductivity.  Negative gamma
    or negative boundary data (the freezing case) are rejected; freezing
    is the mirror image obtained by negating gamma and the boundary datum.
    """

    alpha: float
    boundary: Boundary
    gamma: float = 1.0
    d: float = 1.0
    k: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha >= 0.0):
            raise ValueError(f"alpha must be a finite real >= 0, got {self.alpha}")
        _require_positive("gamma", self.gamma)
        _require_positive("d", self.d)
        _require_positive("k", self.k)
        if not isinstance(self.boundary, (Convective, Temperature, Flux)):
            raise ValueError(f"unsupported boundary condition {self.boundary!r}")


@dataclass(frozen=True)
class RootSolverConfig:
    abs_step_tol: float = 1e-15
    max_newton_iters: int = 100
    bracket_growth: float = 2.0
    max_bracket: float = 1e3

    def __post_init__(self):
        _require_positive("abs_step_tol", self.abs_step_tol)
        if self.max_newton_iters <= 0:
            raise ValueError("max_newton_iters must be positive")
        if self.bracket_growth <= 1.0:
            raise ValueError("bracket_growth must exceed 1")
        _require_positive("max_bracket", self.max_bracket)


@dataclass(frozen=True)
class SolverReport:
    iterations: int
    residual: float
    bracket: tuple[float, float]


def _prefactor(problem: ProblemSpec) -> float:
    """Constant multiplying the shape factor on the left of the front equation."""
    alpha, gamma, d, k = problem.alpha, problem.gamma, problem.d, problem.k
    b = problem.boundary
    if isinstance(b, Convective):
        return b.h0 * b.t_inf / (gamma * 2.0**alpha * d ** ((alpha + 1.0) / 2.0))
    if isinstance(b, Temperature):
        return k * b.t0 / (2.0 ** (alpha + 1.0) * d ** (alpha / 2.0 + 1.0) * gamma)
    return b.c / (gamma * 2.0**alpha * d ** ((alpha + 1.0) / 2.0))


def _shape_factor(problem: ProblemSpec, x: float) -> float:
    """Decreasing factor f(x) in the front equation lhs = prefactor * f(x)."""
    alpha, d, k = problem.alpha, problem.d, problem.k
    z = x * x
    b = problem.boundary
    if isinstance(b, Convective):
        denom = kummer_m(alpha / 2.0 + 0.5, 0.5, z) + (
            2.0 * math.sqrt(d) * b.h0 / k
        ) * x * kummer_m(alpha / 2.0 + 1.0, 1.5, z)
    elif isinstance(b, Temperature):
        denom = x * kummer_m(alpha / 2.0 + 1.0, 1.5, z)
    else:
        denom = kummer_m(alpha / 2.0 + 0.5, 0.5, z)
    return 1.0 / denom


def _shape_factor_derivative(problem: ProblemSpec, x: float) -> float:
    """d/dx of the shape factor, via d/dz M(a,b,z) = (a/b) M(a+1,b+1,z) and
    d/dx [x M(a, 3/2, x^2)] = M(a, 1/2, x^2)."""
    alpha, d, k = problem.alpha, problem.d, problem.k
    z = x * x
    f = _shape_factor(problem, x)
    b = problem.boundary
    if isinstance(b, Convective):
        inner = 2.0 * (alpha + 1.0) * x * kummer_m(alpha / 2.0 + 1.5, 1.5, z) + (
            2.0 * math.sqrt(d) * b.h0 / k
        ) * kummer_m(alpha / 2.0 + 1.0, 0.5, z)
    elif isinstance(b, Temperature):
        inner = kummer_m(alpha / 2.0 + 1.0, 0.5, z)
    else:
        inner = 2.0 * (alpha + 1.0) * x * kummer_m(alpha / 2.0 + 1.5, 1.5, z)
    return -f * f * inner


def front_equation_lhs(problem: ProblemSpec, x: float) -> float:
    """Left-hand side of the variant's front equation, a strictly
    decreasing function of x > 0."""
    if not (math.isfinite(x) and x > 0.0):
        raise ValueError(f"x must be positive, got {x}")
    return _prefactor(problem) * _shape_factor(problem, x)


def front_equation_residual(problem: ProblemSpec, x: float) -> float:
    """lhs(x) - x**(alpha+1): positive left of the root, negative right."""
    return front_equation_lhs(problem, x) - x ** (problem.alpha + 1.0)


def residual_derivative(problem: ProblemSpec, x: float) -> float:
    """Derivative of ``front_equation_residual`` in x (negative for x > 0)."""
    if not (math.isfinite(x) and x > 0.0):
        raise ValueError(f"x must be positive, got {x}")
    alpha = problem.alpha
    return _prefactor(problem) * _shape_factor_derivative(problem, x) - (
        alpha + 1.0
    ) * x**alpha


def _find_bracket(problem: ProblemSpec, cfg: RootSolverConfig) -> tuple[float, float]:
    lo = 1e-8
    if not front_equation_residual(problem, lo) > 0.0:
        raise BracketNotFoundError(
            f"residual not positive at x={lo}; problem data admits no melting front"
        )
    hi = 1.0
    while front_equation_residual(problem, hi) > 0.0:
        lo = hi
        hi *= cfg.bracket_growth
        if hi > cfg.max_bracket:
            raise BracketNotFoundError(
                f"no sign change of the front equation below x={cfg.max_bracket}"
            )
    return lo, hi


def _coefficients(problem: ProblemSpec, nu: float) -> tuple[float, float]:
    """Series coefficients (even, odd) that satisfy the boundary condition
    and zero temperature at the front."""
    alpha, d, k = problem.alpha, problem.d, problem.k
    z = -nu * nu
    m_even = kummer_m(-alpha / 2.0, 0.5, z)
    m_odd = kummer_m(-alpha / 2.0 + 0.5, 1.5, z)
    if m_even <= 0.0:
        raise NonConvergenceError(
            f"even basis function nonpositive ({m_even}) at nu={nu}; "
            "solution coefficients are not defined"
        )
    b = problem.boundary
    if isinstance(b, Convective):
        denom = k * m_even + 2.0 * math.sqrt(d) * b.h0 * nu * m_odd
        coeff_odd = -2.0 * b.h0 * math.sqrt(d) * b.t_inf * m_even / denom
        coeff_even = -nu * m_odd / m_even * coeff_odd
    elif isinstance(b, Temperature):
        coeff_even = b.t0
        coeff_odd = -b.t0 * m_even / (nu * m_odd)
    else:
        coeff_odd = -2.0 * b.c * math.sqrt(d) / k
        coeff_even = -nu * m_odd / m_even * coeff_odd
    return coeff_even, coeff_odd


@dataclass(frozen=True)
class SimilaritySolution:
    """Solved closed form: front coefficient plus field evaluators.

    ``temperature`` evaluates the similarity formula as written, also for
    x > s(t); callers that want the physical field mask those points to 0.
    """

    problem: ProblemSpec
    nu: float
    coeff_even: float
    coeff_odd: float
    solver_report: SolverReport

    def front_position(self, t: float) -> float:
        """s(t) = 2 nu sqrt(d t)."""
        if t < 0.0:
            raise ValueError(f"t must be >= 0, got {t}")
        return 2.0 * self.nu * math.sqrt(self.problem.d * t)

    def front_speed(self, t: float) -> float:
        """ds/dt = nu sqrt(d / t)."""
        if t <= 0.0:
            raise ValueError(f"t must be > 0, got {t}")
        return self.nu * math.sqrt(self.problem.d / t)

    def temperature(self, x: float, t: float) -> float:
        """Similarity temperature at (x, t), t > 0."""
        if t <= 0.0:
            raise ValueError(f"t must be > 0, got {t}")
        if x < 0.0:
            raise ValueError(f"x must be >= 0, got {x}")
        alpha = self.problem.alpha
        eta = x / (2.0 * math.sqrt(self.problem.d * t))
        z = -eta * eta
        return t ** (alpha / 2.0) * (
            self.coeff_even * kummer_m(-alpha / 2.0, 0.5, z)
            + self.coeff_odd * eta * kummer_m(-alpha / 2.0 + 0.5, 1.5, z)
        )

    def temperature_flux(self, x: float, t: float) -> float:
        """Spatial derivative of the similarity temperature at (x, t).

        The conductive heat flux is -k times this value."""
        if t <= 0.0:
            raise ValueError(f"t must be > 0, got {t}")
        if x < 0.0:
            raise ValueError(f"x must be >= 0, got {x}")
        alpha = self.problem.alpha
        eta = x / (2.0 * math.sqrt(self.problem.d * t))
        z = -eta * eta
        return (
            t ** ((alpha - 1.0) / 2.0)
            / math.sqrt(self.problem.d)
            * (
                self.coeff_even * alpha * eta * kummer_m(-alpha / 2.0 + 1.0, 1.5, z)
                + 0.5 * self.coeff_odd * kummer_m(-alpha / 2.0 + 0.5, 0.5, z)
            )
        )


def solve_front(
    problem: ProblemSpec, cfg: RootSolverConfig | None = None
) -> SimilaritySolution:
    """Solve the variant's front equation for nu and assemble the closed form.

    Newton's iteration starts from the midpoint of a sign-change bracket
    (found by doubling from [1e-8, 1]); any step that would leave the
    current bracket is replaced by bisection, so the proven monotonicity
    of the residual guarantees convergence.  Stops when the step falls
    below ``abs_step_tol`` or the residual below 1e-12 * max(1, lhs),
    whichever happens first after at least two iterations.
    """
    if cfg is None:
        cfg = RootSolverConfig()
    lo, hi = _find_bracket(problem, cfg)
    bracket = (lo, hi)
    alpha = problem.alpha
    x = 0.5 * (lo + hi)
    iterations = 0
    converged = False
    residual = math.inf
    for it in range(1, cfg.max_newton_iters + 1):
        iterations = it
        residual = front_equation_residual(problem, x)
        if residual > 0.0:
            lo = x
        elif residual < 0.0:
            hi = x
        lhs_scale = max(1.0, abs(residual + x ** (alpha + 1.0)))
        if it >= 2 and abs(residual) <= _RESIDUAL_RTOL * lhs_scale:
            # Polish with the final Newton correction: the residual stop
            # alone can leave |F|/|F'| of slack in the root itself.
            slope = residual_derivative(problem, x)
            if slope < 0.0:
                trial = x - residual / slope
                if lo < trial < hi:
                    x = trial
                    residual = front_equation_residual(problem, x)
            converged = True
            break
        slope = residual_derivative(problem, x)
        trial = x - residual / slope if slope < 0.0 else 0.5 * (lo + hi)
        if not (lo < trial < hi):
            trial = 0.5 * (lo + hi)
        step = abs(trial - x)
        x = trial
        if it >= 2 and step < cfg.abs_step_tol:
            residual = front_equation_residual(problem, x)
            converged = True
            break
    if not converged:
        raise NonConvergenceError(
            f"front-coefficient iteration did not converge in "
            f"{cfg.max_newton_iters} iterations (last residual {residual})"
        )
    lhs_scale = max(1.0, abs(residual + x ** (alpha + 1.0)))
    if abs(residual) > _RESIDUAL_RTOL * lhs_scale:
        raise NonConvergenceError(
            f"front-coefficient residual {residual} above tolerance at nu={x}"
        )
    coeff_even, coeff_odd = _coefficients(problem, x)
    report = SolverReport(iterations=iterations, residual=residual, bracket=bracket)
    return SimilaritySolution(
        problem=problem,
        nu=x,
        coeff_even=coeff_even,
        coeff_odd=coeff_odd,
        solver_report=report,
    )


def _integer_exponent(problem: ProblemSpec) -> int:
    n = problem.alpha
    if n != math.floor(n):
        raise ValueError(f"alpha={n} is not a non-negative integer")
    return int(n)


def front_equation_integer_alpha(problem: ProblemSpec, x: float) -> float:
    """Residual of the integer-exponent front equation for the convective
    variant, written with the even/odd repeated-erfc combinations.

    Its positive root coincides with ``solve_front``'s nu; the two forms
    are linked by M(-n/2, 1/2, -y^2) = 2^n Gamma(n/2+1) E_n(y) and
    y M(-n/2+1/2, 3/2, -y^2) = 2^{n-1} Gamma(n/2+1/2) F_n(y).
    """
    if not isinstance(problem.boundary, Convective):
        raise ValueError("integer-exponent front equation applies to the convective variant")
    if not (math.isfinite(x) and x > 0.0):
        raise ValueError(f"x must be positive, got {x}")
    n = _integer_exponent(problem)
    b = problem.boundary
    d, k, gamma = problem.d, problem.k, problem.gamma
    denom = (
        gamma
        * d ** ((n + 1.0) / 2.0)
        * 2.0 ** (2 * n)
        * (
            gamma_fn(n / 2.0 + 1.0) * e_n(n, x)
            + math.sqrt(d) * b.h0 / k * gamma_fn(n / 2.0 + 0.5) * f_n(n, x)
        )
    )
    return b.h0 * b.t_inf / denom - x ** (n + 1.0) * math.exp(x * x)


def temperature_integer_alpha(sol: SimilaritySolution, x: float, t: float) -> float:
    """Convective-variant temperature in even/odd repeated-erfc form.

    Valid only for integer alpha; used as an independent cross-check of
    ``SimilaritySolution.temperature``.
    """
    problem = sol.problem
    if not isinstance(problem.boundary, Convective):
        raise ValueError("integer-exponent temperature applies to the convective variant")
    if t <= 0.0:
        raise ValueError(f"t must be > 0, got {t}")
    n = _integer_exponent(problem)
    b = problem.boundary
    d, k = problem.d, problem.k
    eta = x / (2.0 * math.sqrt(d * t))
    nu = sol.nu
    g_half = gamma_fn(n / 2.0 + 0.5)
    g_one = gamma_fn(n / 2.0 + 1.0)
    numerator = (
        -(t ** (n / 2.0))
        * 2.0**n
        * b.h0
        * b.t_inf
        * math.sqrt(d)
        * g_half
        * g_one
        * (f_n(n, eta) * e_n(n, nu) - f_n(n, nu) * e_n(n, eta))
    )
    denominator = k * g_one * e_n(n, nu) + math.sqrt(d) * b.h0 * g_half * f_n(n, nu)
    return numerator / denominator
