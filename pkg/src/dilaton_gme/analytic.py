"""Closed-form entanglement of GHZ states shared across the horizon.

With ``p`` kept outside modes and ``q`` kept inside modes (``p + q = n``
horizon parties), the genuine multipartite entanglement of the reduced
N-party state is

    E = sin(2 theta) * alpha**p * beta**q.

The party count drops out entirely, and theta enters only through
``sin(2 theta)``.  Everything else here follows from that one line:
derivative in theta, extreme-limit value, location of the thermal peak
in the dilaton parameter, distribution identities over mode splits, and
the monogamy deficit.
"""

from __future__ import annotations

import math

from .errors import InvalidParams, InvalidSpec, OddN
from .hawking import BogoliubovPair, coeff_power

__all__ = [
    "e_general",
    "e_accessible",
    "e_inaccessible",
    "theta_derivative",
    "extreme_limit",
    "peak_dilaton",
    "sum_rule_quadratic",
    "sum_rule_linear",
    "monogamy_residual",
]


def _check_theta(theta: float) -> None:
    if not (isinstance(theta, (int, float)) and math.isfinite(theta)):
        raise InvalidSpec(f"theta must be a finite number, got {theta!r}")
    if not 0.0 <= theta <= math.pi / 2:
        raise InvalidSpec(f"theta must lie in [0, pi/2], got {theta}")


def _check_split(n_out: int, n_in: int) -> None:
    for name, value in (("n_out", n_out), ("n_in", n_in)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise InvalidSpec(f"{name} must be a non-negative integer, got {value!r}")
    if n_out + n_in < 1:
        raise InvalidSpec("at least one horizon mode is needed")


def e_general(theta: float, pair: BogoliubovPair, n_out: int, n_in: int) -> float:
    """``sin(2 theta) * alpha**n_out * beta**n_in``."""
    _check_theta(theta)
    _check_split(n_out, n_in)
    return math.sin(2.0 * theta) * coeff_power(pair, n_out, n_in)


def e_accessible(theta: float, pair: BogoliubovPair, n_horizon: int) -> float:
    """All horizon parties keep their outside mode (``q = 0``)."""
    return e_general(theta, pair, n_horizon, 0)


def e_inaccessible(theta: float, pair: BogoliubovPair, n_horizon: int) -> float:
    """All horizon parties keep their inside mode (``p = 0``)."""
    return e_general(theta, pair, 0, n_horizon)


def theta_derivative(theta: float, pair: BogoliubovPair, n_out: int, n_in: int) -> float:
    """``dE/dtheta = 2 cos(2 theta) * alpha**n_out * beta**n_in``."""
    _check_theta(theta)
    _check_split(n_out, n_in)
    return 2.0 * math.cos(2.0 * theta) * coeff_power(pair, n_out, n_in)


def extreme_limit(theta: float, n_horizon: int) -> float:
    """Value of E when alpha = beta = 1/sqrt(2): ``sin(2 theta) / 2**(n/2)``."""
    _check_theta(theta)
    _check_split(n_horizon, 0)
    return math.sin(2.0 * theta) * 2.0 ** (-0.5 * n_horizon)


def peak_dilaton(mass: float, omega: float, n_out: int, n_in: int):
    """Dilaton value where E is stationary, or None.

    Solving ``dE/dD = 0`` gives ``D* = M - ln(p/q) / (8 pi omega)``.  A
    stationary point needs both mode counts positive; the result is
    returned only when it falls inside ``[0, M]`` (for ``p < q`` it lies
    above ``M``, so E is monotone over the physical range and the answer
    is None).
    """
    if not (mass > 0.0) or not math.isfinite(mass):
        raise InvalidParams(f"mass must be a positive finite number, got {mass}")
    if not (omega > 0.0) or not math.isfinite(omega):
        raise InvalidParams(f"omega must be a positive finite number, got {omega}")
    _check_split(n_out, n_in)
    if n_out == 0 or n_in == 0:
        return None
    d_star = mass - math.log(n_out / n_in) / (8.0 * math.pi * omega)
    if 0.0 <= d_star <= mass:
        return d_star
    return None


def sum_rule_quadratic(
    theta: float, pair: BogoliubovPair, n_horizon: int
) -> tuple[float, float]:
    """Binomially weighted sum of E**2 over all splits of ``n`` modes.

    Returns ``(lhs, rhs)`` with ``lhs = sum_p C(n, p) E(p, n-p)**2`` and
    ``rhs = sin(2 theta)**2``; the two agree because
    ``(alpha**2 + beta**2)**n = 1``.
    """
    _check_theta(theta)
    _check_split(n_horizon, 0)
    terms = []
    for p in range(n_horizon + 1):
        e = e_general(theta, pair, p, n_horizon - p)
        terms.append(math.comb(n_horizon, p) * e * e)
    rhs = math.sin(2.0 * theta) ** 2
    return math.fsum(terms), rhs


def sum_rule_linear(
    theta: float, pair: BogoliubovPair, n_horizon: int
) -> tuple[float, float]:
    """Binomially weighted sum of E itself over even splits.

    For even ``n``, ``sum_k C(n/2, k) E(n - 2k, 2k) = sin(2 theta)``;
    each term trades two outside modes for two inside ones, so the sum
    telescopes through ``(alpha**2 + beta**2)**(n/2)``.  Returns
    ``(lhs, rhs)``; odd ``n`` raises :class:`OddN`.
    """
    _check_theta(theta)
    _check_split(n_horizon, 0)
    if n_horizon % 2:
        raise OddN(f"the linear sum rule needs an even mode count, got {n_horizon}")
    half = n_horizon // 2
    terms = [
        math.comb(half, k) * e_general(theta, pair, n_horizon - 2 * k, 2 * k)
        for k in range(half + 1)
    ]
    return math.fsum(terms), math.sin(2.0 * theta)


def monogamy_residual(
    theta: float, pair: BogoliubovPair, n_out: int, n_in: int
) -> float:
    """Multipartite remainder ``E**2 - sum of squared pair terms``.

    Every two-party reduction of the scenario state is separable, so the
    remainder is the full ``E**2 = sin(2 theta)**2 * alpha**(2p) * beta**(2q)``.
    """
    _check_theta(theta)
    _check_split(n_out, n_in)
    return math.sin(2.0 * theta) ** 2 * coeff_power(pair, 2 * n_out, 2 * n_in)
