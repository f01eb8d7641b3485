"""Cross-checks between the oracle pipeline and the closed forms.

Each check sweeps a parameter grid, records the worst absolute error and
the inputs that produced it, and passes when the worst error stays within
its tolerance.  Reports serialise to the JSON shape used by the command
line: one object per check with hyphenated field names.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .analytic import (
    e_general,
    monogamy_residual,
    peak_dilaton,
    sum_rule_linear,
    sum_rule_quadratic,
)
from .errors import InvalidParams
from .gme import gme_xstate, pair_entanglement
from .hawking import BlackHoleParams, bogoliubov
from .modes_state import ScenarioSpec, scenario_density
from .xstate import build_block_matrix, extract_xstate

__all__ = [
    "VerificationCheck",
    "VerificationReport",
    "GridPoint",
    "default_oracle_grid",
    "oracle_compare",
    "relationship_suite",
    "monotonicity_scan",
]

GridPoint = tuple[ScenarioSpec, BlackHoleParams]

ORACLE_TOL = 1e-10
ENTRYWISE_TOL = 1e-13
RELATION_TOL = 1e-12

_DEFAULT_THETAS = (math.pi / 12, math.pi / 6, math.pi / 4, 0.4 * math.pi)
_DEFAULT_DILATONS = (0.0, 0.3, 0.6, 0.9, 1.0)


@dataclass(frozen=True)
class VerificationCheck:
    name: str
    grid_size: int
    max_abs_error: float
    tolerance: float
    status: str
    worst_case_inputs: Optional[dict]

    def as_json_dict(self) -> dict:
        return {
            "name": self.name,
            "grid-size": self.grid_size,
            "max-abs-error": self.max_abs_error,
            "tolerance": self.tolerance,
            "status": self.status,
            "worst-case-inputs": self.worst_case_inputs,
        }


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[VerificationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.status == "pass" for check in self.checks)

    def as_json(self) -> list[dict]:
        return [check.as_json_dict() for check in self.checks]

    def merged_with(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.checks + other.checks)


def _check(
    name: str,
    grid_size: int,
    max_abs_error: float,
    tolerance: float,
    worst_case_inputs: Optional[dict],
) -> VerificationCheck:
    status = "pass" if max_abs_error <= tolerance else "fail"
    return VerificationCheck(name, grid_size, max_abs_error, tolerance, status, worst_case_inputs)


class _Worst:
    """Track the largest absolute error and the inputs that caused it."""

    def __init__(self) -> None:
        self.error = 0.0
        self.inputs: Optional[dict] = None

    def update(self, error: float, inputs: dict) -> None:
        error = abs(error)
        if self.inputs is None or error > self.error:
            self.error = error
            self.inputs = inputs


def _describe(spec: ScenarioSpec, params: BlackHoleParams) -> dict:
    return {
        "n-parties": spec.n_parties,
        "n-horizon": spec.n_horizon,
        "n-out-kept": spec.n_out_kept,
        "n-in-kept": spec.n_in_kept,
        "theta": spec.theta,
        "mass": params.mass,
        "dilaton": params.dilaton,
        "omega": params.omega,
    }


def default_oracle_grid(
    mass: float = 1.0,
    omega: float = 1.0,
    max_parties: int = 6,
    max_horizon: int = 4,
    thetas: Sequence[float] = _DEFAULT_THETAS,
    dilatons: Sequence[float] = _DEFAULT_DILATONS,
) -> list[GridPoint]:
    """Every scenario with N <= max_parties, n <= max_horizon, all splits."""
    grid: list[GridPoint] = []
    for n_parties in range(2, max_parties + 1):
        for n_horizon in range(1, min(max_horizon, n_parties - 1) + 1):
            for n_out in range(n_horizon + 1):
                for theta in thetas:
                    for dilaton in dilatons:
                        spec = ScenarioSpec(
                            n_parties=n_parties,
                            n_horizon=n_horizon,
                            n_out_kept=n_out,
                            n_in_kept=n_horizon - n_out,
                            theta=theta,
                        )
                        grid.append((spec, BlackHoleParams(mass, dilaton * mass, omega)))
    return grid


def oracle_compare(grid: Optional[Iterable[GridPoint]] = None) -> VerificationReport:
    """Exact pipeline vs. closed form, plus the dual block construction.

    Check ``oracle-vs-analytic`` compares the entanglement from the
    simulated reduced state against ``sin(2 theta) alpha**p beta**q``;
    ``dual-construction`` compares that state's triplets entry by entry
    against :func:`build_block_matrix`.
    """
    points = list(default_oracle_grid() if grid is None else grid)
    worst_e = _Worst()
    worst_dual = _Worst()
    for spec, params in points:
        pair = bogoliubov(params)
        rho = scenario_density(spec, pair)
        from_oracle = extract_xstate(rho)
        e_oracle = gme_xstate(from_oracle)
        e_closed = e_general(spec.theta, pair, spec.n_out_kept, spec.n_in_kept)
        worst_e.update(e_oracle - e_closed, _describe(spec, params))
        from_blocks = build_block_matrix(spec, pair)
        entry_error = max(
            max(abs(x - y) for x, y in zip(from_oracle.a, from_blocks.a)),
            max(abs(x - y) for x, y in zip(from_oracle.b, from_blocks.b)),
            max(abs(x - y) for x, y in zip(from_oracle.c, from_blocks.c)),
        )
        worst_dual.update(entry_error, _describe(spec, params))
    return VerificationReport(
        (
            _check("oracle-vs-analytic", len(points), worst_e.error, ORACLE_TOL, worst_e.inputs),
            _check("dual-construction", len(points), worst_dual.error, ENTRYWISE_TOL, worst_dual.inputs),
        )
    )


def relationship_suite(
    grid: Optional[Iterable[GridPoint]] = None,
    max_horizon: int = 16,
    mass: float = 1.0,
    omega: float = 1.0,
    dilatons: Sequence[float] = (0.0, 0.5, 0.9, 1.0),
    thetas: Sequence[float] = (math.pi / 12, math.pi / 6, math.pi / 4),
) -> VerificationReport:
    """Distribution and monogamy identities.

    * ``sum-rule-quadratic`` / ``sum-rule-linear``: binomial identities
      over mode splits, evaluated purely from the closed form.
    * ``pairwise-zero``: every two-party reduction of every oracle-grid
      state (three or more parties) carries no entanglement.
    * ``monogamy``: the full E**2 minus the squared pair terms matches
      the closed-form residual.
    """
    worst_quad = _Worst()
    worst_lin = _Worst()
    for dilaton in dilatons:
        params = BlackHoleParams(mass, dilaton * mass, omega)
        pair = bogoliubov(params)
        for theta in thetas:
            for n_horizon in range(1, max_horizon + 1):
                inputs = {
                    "n-horizon": n_horizon,
                    "theta": theta,
                    "mass": mass,
                    "dilaton": params.dilaton,
                    "omega": omega,
                }
                lhs, rhs = sum_rule_quadratic(theta, pair, n_horizon)
                worst_quad.update(lhs - rhs, inputs)
                if n_horizon % 2 == 0:
                    lhs, rhs = sum_rule_linear(theta, pair, n_horizon)
                    worst_lin.update(lhs - rhs, inputs)
    quad_size = len(dilatons) * len(thetas) * max_horizon
    lin_size = len(dilatons) * len(thetas) * (max_horizon // 2)

    points = [
        (spec, params)
        for spec, params in (default_oracle_grid() if grid is None else grid)
        if spec.n_parties >= 3
    ]
    worst_pair = _Worst()
    worst_mono = _Worst()
    for spec, params in points:
        pair = bogoliubov(params)
        rho = scenario_density(spec, pair)
        kept = spec.kept_modes()
        e_oracle = gme_xstate(extract_xstate(rho))
        first = kept[0]
        pair_sq = []
        for i, mode_i in enumerate(kept):
            for mode_j in kept[i + 1 :]:
                e_pair = pair_entanglement(rho.reduce((mode_i, mode_j)))
                worst_pair.update(e_pair, _describe(spec, params))
                if mode_i == first:
                    pair_sq.append(e_pair * e_pair)
        residual = monogamy_residual(spec.theta, pair, spec.n_out_kept, spec.n_in_kept)
        deficit = e_oracle * e_oracle - math.fsum(pair_sq)
        worst_mono.update(deficit - residual, _describe(spec, params))

    return VerificationReport(
        (
            _check("sum-rule-quadratic", quad_size, worst_quad.error, RELATION_TOL, worst_quad.inputs),
            _check("sum-rule-linear", lin_size, worst_lin.error, RELATION_TOL, worst_lin.inputs),
            _check("pairwise-zero", len(points), worst_pair.error, RELATION_TOL, worst_pair.inputs),
            _check("monogamy", len(points), worst_mono.error, RELATION_TOL, worst_mono.inputs),
        )
    )


def _classify(values: Sequence[float]) -> str:
    signs = []
    for prev, cur in zip(values, values[1:]):
        if cur > prev:
            signs.append(1)
        elif cur < prev:
            signs.append(-1)
    collapsed = [signs[0]] if signs else []
    for s in signs[1:]:
        if s != collapsed[-1]:
            collapsed.append(s)
    if not collapsed:
        return "constant"
    if collapsed == [1]:
        return "increasing"
    if collapsed == [-1]:
        return "decreasing"
    if collapsed == [1, -1]:
        return "single-peaked"
    return "irregular"


def _expected_shape(
    n_out: int, n_in: int, mass: float, omega: float, d_min: float, d_max: float
) -> str:
    if n_in == 0:
        return "decreasing"
    if n_out == 0 or n_out <= n_in:
        return "increasing"
    d_star = peak_dilaton(mass, omega, n_out, n_in)
    if d_star is None or d_star <= d_min:
        return "decreasing"
    if d_star >= d_max:
        return "increasing"
    return "single-peaked"


def monotonicity_scan(
    n_out: int,
    n_in: int,
    mass: float = 1.0,
    omega: float = 1.0,
    d_min: float = 0.0,
    d_max: Optional[float] = None,
    steps: int = 2001,
) -> VerificationReport:
    """Shape of E over a dilaton sweep at theta = pi/4.

    Classifies the sampled curve as increasing / decreasing /
    single-peaked and compares with what the closed form predicts from
    the sign of ``p - q``.  When an interior peak is expected, a second
    check requires the sampled argmax to sit within one grid step of the
    predicted ``D*``.
    """
    if d_max is None:
        d_max = mass
    if steps < 3:
        raise InvalidParams(f"need at least 3 steps for a shape scan, got {steps}")
    if not 0.0 <= d_min < d_max <= mass:
        raise InvalidParams(
            f"need 0 <= d_min < d_max <= mass, got [{d_min}, {d_max}] with mass {mass}"
        )
    theta = math.pi / 4
    step = (d_max - d_min) / (steps - 1)
    ds = [d_min + i * step for i in range(steps - 1)] + [d_max]
    es = []
    for d in ds:
        pair = bogoliubov(BlackHoleParams(mass, d, omega))
        es.append(e_general(theta, pair, n_out, n_in))
    observed = _classify(es)
    expected = _expected_shape(n_out, n_in, mass, omega, d_min, d_max)
    scan_inputs = {
        "n-out-kept": n_out,
        "n-in-kept": n_in,
        "theta": theta,
        "mass": mass,
        "omega": omega,
        "d-min": d_min,
        "d-max": d_max,
        "steps": steps,
        "expected-shape": expected,
        "observed-shape": observed,
    }
    checks = [
        _check(
            f"monotonicity-p{n_out}-q{n_in}",
            steps,
            0.0 if observed == expected else 1.0,
            0.0,
            scan_inputs,
        )
    ]
    if expected == "single-peaked":
        d_star = peak_dilaton(mass, omega, n_out, n_in)
        argmax = max(range(steps), key=es.__getitem__)
        checks.append(
            _check(
                f"peak-location-p{n_out}-q{n_in}",
                steps,
                abs(ds[argmax] - d_star),
                step,
                dict(scan_inputs, **{"d-argmax": ds[argmax], "d-star": d_star}),
            )
        )
    return VerificationReport(tuple(checks))
