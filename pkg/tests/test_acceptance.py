"""Acceptance gate: every release criterion at its pinned tolerance.

Each criterion is one test; run the module as a script to get one
PASS/FAIL line per criterion:

    python tests/test_acceptance.py
"""

import itertools
import math
import sys
import tempfile
import time
from pathlib import Path

from stefan_kummer import (
    Convective,
    OracleConfig,
    ProblemSpec,
    Temperature,
    compare_to_closed_form,
    convective_to_flux,
    convective_to_temperature,
    e_n,
    equivalence_report,
    f_n,
    flux_threshold,
    flux_to_convective,
    gamma_fn,
    kummer_m,
    kummer_m_derivative,
    run_limit_study,
    run_oracle,
    solve_front,
    temperature_to_convective,
)
from stefan_kummer.cli import main as cli_main

from _oracles import (
    bisect,
    bisect_front,
    classical_convective_residual,
    classical_convective_temperature,
    direct_series_m,
)

GRID_ALPHA = (0.0, 0.4, 1.0, 2.0, 5.5)
GRID_H0 = (0.1, 1.0, 10.0)
GRID_TINF = (0.5, 1.0)
T_SAMPLES = (0.25, 1.0, 4.0)
X_FRACTIONS = (0.25, 0.5, 0.75)

FIG9 = ProblemSpec(alpha=0.4, boundary=Convective(h0=0.5, t_inf=1.0))


def _grid_specs():
    return [
        ProblemSpec(alpha=a, boundary=Convective(h0=h, t_inf=t))
        for a, h, t in itertools.product(GRID_ALPHA, GRID_H0, GRID_TINF)
    ]


def criterion_1_closed_form_residuals():
    """Interface, boundary, front-balance and heat-equation residuals of the
    solved convective closed form on the 30-spec grid; under 30 s."""
    start = time.monotonic()
    specs = _grid_specs()
    assert len(specs) == 30
    for p in specs:
        sol = solve_front(p)
        b = p.boundary
        for t in T_SAMPLES:
            s = sol.front_position(t)
            assert abs(sol.temperature(s, t)) <= 1e-9
            bc = p.k * sol.temperature_flux(0.0, t) - b.h0 * t**-0.5 * (
                sol.temperature(0.0, t) - b.t_inf * t ** (p.alpha / 2.0)
            )
            assert abs(bc) <= 1e-9
            stefan = p.k * sol.temperature_flux(s, t) + p.gamma * s**p.alpha * sol.front_speed(t)
            assert abs(stefan) <= 1e-6
            hx = 1e-4 * 2.0 * math.sqrt(p.d * t)
            ht = 1e-5 * t
            for frac in X_FRACTIONS:
                x = frac * s
                psi = sol.temperature(x, t)
                psi_t = (sol.temperature(x, t + ht) - sol.temperature(x, t - ht)) / (2.0 * ht)
                psi_xx = (
                    sol.temperature(x + hx, t) - 2.0 * psi + sol.temperature(x - hx, t)
                ) / (hx * hx)
                assert abs(psi_t - p.d * psi_xx) <= 1e-5 * max(1.0, abs(psi))
    assert time.monotonic() - start < 30.0


def criterion_2_root_correctness():
    """Solver front coefficient within 1e-12 of a 200-step bisection on the
    30-spec grid, converging within 25 iterations."""
    for p in _grid_specs():
        sol = solve_front(p)
        assert abs(sol.nu - bisect_front(p, iters=200)) <= 1e-12
        assert sol.solver_report.iterations <= 25


def criterion_3_identity_suite():
    """Reflection, bridge and derivative identities of the special-function
    layer at their pinned tolerances."""
    a_grid = (-2.5, -0.2, 0.7, 1.5)
    b_grid = (0.5, 1.5)
    z_grid = [0.5 * i for i in range(-18, 19)]
    for a in a_grid:
        for b in b_grid:
            for z in z_grid:
                mine = kummer_m(a, b, z)
                # production-route reflection consistency
                assert abs(mine - math.exp(z) * kummer_m(b - a, b, -z)) <= 1e-11 * max(
                    1.0, abs(mine)
                )
                # against direct term-by-term summation
                ref = direct_series_m(a, b, z)
                assert abs(mine - ref) <= 1e-10 * max(1.0, abs(ref))
    for n in range(5):
        for i in range(13):
            z = 0.25 * i
            lhs = kummer_m(-n / 2.0, 0.5, -z * z)
            rhs = 2.0**n * gamma_fn(n / 2.0 + 1.0) * e_n(n, z)
            assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(rhs))
            lhs = z * kummer_m(-n / 2.0 + 0.5, 1.5, -z * z)
            rhs = 2.0 ** (n - 1) * gamma_fn(n / 2.0 + 0.5) * f_n(n, z)
            assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(rhs), 1e-300)
    h = 1e-6
    for a in a_grid:
        for b in b_grid:
            for z in (-2.0, -1.3, -0.6, -0.25, 0.09, 0.7, 1.4, 2.0):
                fd = (kummer_m(a, b, z + h) - kummer_m(a, b, z - h)) / (2.0 * h)
                assert abs(kummer_m_derivative(a, b, z) - fd) <= 1e-7


def criterion_4_classical_reduction():
    """alpha = 0 solution matches the erf-form temperature and front
    equation to 1e-12."""
    for h0, t_inf in ((1.0, 1.0), (0.5, 1.0), (10.0, 0.5)):
        p = ProblemSpec(alpha=0.0, boundary=Convective(h0=h0, t_inf=t_inf))
        sol = solve_front(p)
        root = bisect(
            lambda x: classical_convective_residual(x, h0, t_inf), 1e-8, 4.0, iters=220
        )
        assert abs(sol.nu - root) <= 1e-12
        for t in (0.2, 1.0, 3.0):
            s = sol.front_position(t)
            for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
                x = frac * s
                ref = classical_convective_temperature(x, t, sol.nu, h0, t_inf)
                assert abs(sol.temperature(x, t) - ref) <= 1e-12 * max(1.0, abs(ref))


def criterion_5_family_equivalence():
    """Family conversions preserve the front coefficient and field, round
    trips recover the transfer coefficient, and inadmissible bulk
    coefficients are rejected."""
    for p in (
        FIG9,
        ProblemSpec(alpha=2.0, boundary=Convective(h0=10.0, t_inf=0.5)),
        ProblemSpec(alpha=0.0, boundary=Convective(h0=1.0, t_inf=1.0)),
    ):
        sol = solve_front(p)
        scale = max(1.0, sol.temperature(0.0, 2.0))
        for target in (convective_to_temperature(p), convective_to_flux(p)):
            rep = equivalence_report(p, target)
            assert abs(rep.nu_source - rep.nu_target) <= 1e-10
            assert rep.max_temperature_gap <= 1e-8 * scale
        h0 = p.boundary.h0
        back_t = temperature_to_convective(convective_to_temperature(p), p.boundary.t_inf)
        back_f = flux_to_convective(convective_to_flux(p), p.boundary.t_inf)
        assert abs(back_t.boundary.h0 - h0) <= 1e-8 * h0
        assert abs(back_f.boundary.h0 - h0) <= 1e-8 * h0
    temp = ProblemSpec(alpha=1.0, boundary=Temperature(t0=1.0))
    for bad in (1.0, 0.8):
        try:
            temperature_to_convective(temp, bad)
        except ValueError:
            pass
        else:
            raise AssertionError("inadmissible bulk coefficient accepted")
    flux = convective_to_flux(FIG9)
    try:
        flux_to_convective(flux, flux_threshold(flux))
    except ValueError:
        pass
    else:
        raise AssertionError("threshold bulk coefficient accepted")


def criterion_6_large_h0_limit():
    """Front coefficients increase strictly in h0, stay below the limit
    coefficient, and land within 1e-3 of it at h0 = 1e6; under 10 s."""
    start = time.monotonic()
    grid = tuple(10.0**i for i in range(7))
    for alpha in (0.4, 2.0):
        base = ProblemSpec(alpha=alpha, boundary=Convective(h0=1.0, t_inf=1.0))
        study = run_limit_study(base, grid)
        assert all(a < b for a, b in zip(study.nu_values, study.nu_values[1:]))
        assert all(v < study.nu_infinity for v in study.nu_values)
        assert abs(study.nu_values[-1] - study.nu_infinity) <= 1e-3
    assert time.monotonic() - start < 10.0


def criterion_7_oracle_cross_validation():
    """Enthalpy oracle at nx = 2000 reproduces the closed form: front
    within 1% on [0.1, 1], field within 2%, energy drift within 0.5%;
    under 60 s."""
    start = time.monotonic()
    sol = solve_front(FIG9)
    cfg = OracleConfig(domain_length=4.0 * sol.front_position(1.0), t_end=1.0, nx=2000)
    result = run_oracle(FIG9, cfg)
    report = compare_to_closed_form(result, sol, t_window=(0.1, 1.0))
    assert report.max_front_err <= 1e-2
    assert report.max_field_err <= 2e-2
    assert result.energy_balance_drift <= 5e-3
    # pointwise check in the interior of the melted region at the horizon
    t_last, u_last = result.temperature_snapshots[-1]
    i = min(range(len(result.x_centers)), key=lambda j: abs(result.x_centers[j] - 0.1))
    ref = sol.temperature(float(result.x_centers[i]), t_last)
    assert abs(float(u_last[i]) - ref) <= 1e-2 * abs(ref)
    assert time.monotonic() - start < 60.0


def criterion_8_figure_data_reproduction():
    """Emitted sweep curves rise and saturate toward the limit coefficient
    and the emitted field grid heats up monotonically after melting."""
    with tempfile.TemporaryDirectory() as tmp:
        sweep_path = Path(tmp) / "sweep.csv"
        values = ",".join(repr(10.0 ** (0.5 * i)) for i in range(-2, 9))
        code = cli_main(
            ["sweep", "--vary", "h0", "--values", values, "--alpha", "0.4",
             "--tinf", "1", "--include-limit", "--out", str(sweep_path)]
        )
        assert code == 0
        lines = sweep_path.read_text().strip().split("\n")
        assert lines[0] == "param,nu,nu_infinity"
        rows = [[float(c) for c in line.split(",")] for line in lines[1:]]
        nus = [r[1] for r in rows]
        nu_inf = rows[0][2]
        assert all(a < b for a, b in zip(nus, nus[1:]))
        assert all(nu < nu_inf for nu in nus)
        gaps = [nu_inf - nu for nu in nus]
        assert gaps[-1] < 0.01 * gaps[0]

        field_path = Path(tmp) / "field.csv"
        code = cli_main(
            ["field", "--alpha", "0.4", "--h0", "0.5", "--tinf", "1",
             "--nx", "50", "--nt", "50", "--tmax", "1", "--out", str(field_path)]
        )
        assert code == 0
        lines = field_path.read_text().strip().split("\n")
        assert lines[0] == "x,t,psi,s_of_t,melted_flag"
        by_x: dict[float, list[tuple[float, float, float]]] = {}
        for line in lines[1:]:
            x, t, psi, s_t, flag = (float(c) for c in line.split(","))
            if flag == 0.0:
                assert psi == 0.0 and x >= s_t
            by_x.setdefault(x, []).append((t, psi, flag))
        for entries in by_x.values():
            entries.sort()
            melted = [(t, psi) for t, psi, flag in entries if flag == 1.0]
            assert all(p1 <= p2 + 1e-12 for (_, p1), (_, p2) in zip(melted, melted[1:]))


CRITERIA = [
    ("C1 closed-form residual suite", criterion_1_closed_form_residuals),
    ("C2 root correctness vs bisection", criterion_2_root_correctness),
    ("C3 special-function identity suite", criterion_3_identity_suite),
    ("C4 classical alpha=0 reduction", criterion_4_classical_reduction),
    ("C5 boundary-family equivalence", criterion_5_family_equivalence),
    ("C6 large-h0 limit convergence", criterion_6_large_h0_limit),
    ("C7 oracle cross-validation", criterion_7_oracle_cross_validation),
    ("C8 figure-data reproduction", criterion_8_figure_data_reproduction),
]


def _run(name, fn) -> bool:
    start = time.monotonic()
    try:
        fn()
    except Exception as exc:  # noqa: BLE001 - gate reports any failure
        print(f"ACCEPTANCE {name}: FAIL ({exc})")
        return False
    print(f"ACCEPTANCE {name}: PASS ({time.monotonic() - start:.1f}s)")
    return True


def test_criterion_1():
    assert _run(*CRITERIA[0])


def test_criterion_2():
    assert _run(*CRITERIA[1])


def test_criterion_3():
    assert _run(*CRITERIA[2])


def test_criterion_4():
    assert _run(*CRITERIA[3])


def test_criterion_5():
    assert _run(*CRITERIA[4])


def test_criterion_6():
    assert _run(*CRITERIA[5])


def test_criterion_7():
    assert _run(*CRITERIA[6])


def test_criterion_8():
    assert _run(*CRITERIA[7])


if __name__ == "__main__":
    results = [_run(name, fn) for name, fn in CRITERIA]
    sys.exit(0 if all(results) else 1)
