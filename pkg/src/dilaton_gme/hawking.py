"""Hawking-effect mode mixing outside a static dilaton black hole.

For a Dirac field of frequency ``omega``, the thermal character of the
horizon mixes particle and antiparticle modes.  The mixing is fixed by a
single pair of coefficients ``(alpha, beta)`` with ``alpha**2 + beta**2 = 1``:

    alpha = [exp(-8*pi*(M - D)*omega) + 1] ** (-1/2)
    beta  = [exp(+8*pi*(M - D)*omega) + 1] ** (-1/2)

where ``M`` is the black-hole mass and ``D`` the dilaton parameter.  Only the
combination ``(M - D) * omega`` matters; the extreme limit ``D -> M`` gives
``alpha = beta = 1/sqrt(2)``, while ``D -> 0`` at ``M = omega = 1`` leaves the
mixing exponentially weak (``beta ~ 3.5e-6``).

High powers of ``beta`` underflow double precision very quickly, so the
module also provides log-domain and underflow-safe evaluation of monomials
``alpha**p * beta**q``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateCoefficient, InvalidParams

__all__ = [
    "BlackHoleParams",
    "BogoliubovPair",
    "bogoliubov",
    "log_power",
    "coeff_power",
]

# Direct products alpha**p * beta**q stay exactly representable while the
# log-domain value is above roughly log(DBL_MIN); past that we fall back to
# exp() so the result degrades gracefully through the subnormals.
_LOG_DIRECT_FLOOR = -700.0


@dataclass(frozen=True)
class BlackHoleParams:
    """Static dilaton black hole probed by a field mode.

    Parameters
    ----------
    mass : float
        Black-hole mass ``M``.  Must be positive.
    dilaton : float
        Dilaton parameter ``D``.  Must satisfy ``0 <= D <= M``.
    omega : float
        Frequency of the Dirac mode.  Must be positive.
    """

    mass: float
    dilaton: float
    omega: float

    def __post_init__(self):
        if not (self.mass > 0.0) or not math.isfinite(self.mass):
            raise InvalidParams(f"mass must be a positive finite number, got {self.mass}")
        if not math.isfinite(self.dilaton) or not (0.0 <= self.dilaton <= self.mass):
            raise InvalidParams(
                f"dilaton must lie in [0, mass] = [0, {self.mass}], got {self.dilaton}"
            )
        if not (self.omega > 0.0) or not math.isfinite(self.omega):
            raise InvalidParams(f"omega must be a positive finite number, got {self.omega}")

    @classmethod
    def from_charge(cls, mass: float, charge: float, omega: float) -> "BlackHoleParams":
        """Build parameters from the black-hole charge ``Q``.

        The dilaton parameter is ``D = Q**2 / (2 M)``.  The charge must not
        exceed the extreme value ``|Q| = sqrt(2) * M`` (at which ``D = M``);
        squaring a charge given as ``sqrt(2) * M`` overshoots ``M`` by a few
        ulp, so a relative slack of 1e-12 is clamped back to the extreme.
        """
        if not (mass > 0.0) or not math.isfinite(mass):
            raise InvalidParams(f"mass must be a positive finite number, got {mass}")
        if not math.isfinite(charge):
            raise InvalidParams(f"charge must be finite, got {charge}")
        dilaton = charge * charge / (2.0 * mass)
        if mass < dilaton <= mass * (1.0 + 1e-12):
            dilaton = mass
        if dilaton > mass:
            raise InvalidParams(
                f"charge {charge} exceeds the extreme value {math.sqrt(2.0) * mass:.6g} "
                f"for mass {mass}"
            )
        return cls(mass=mass, dilaton=dilaton, omega=omega)


@dataclass(frozen=True)
class BogoliubovPair:
    """Normalised mode-mixing coefficients ``(alpha, beta)``.

    ``alpha`` weighs the vacuum-preserving branch and ``beta`` the thermally
    excited one.  For the physical range of parameters ``alpha >= beta``,
    with equality only in the extreme limit.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        if not (0.0 < self.alpha <= 1.0):
            raise InvalidParams(f"alpha must lie in (0, 1], got {self.alpha}")
        if not (0.0 <= self.beta < 1.0):
            raise InvalidParams(f"beta must lie in [0, 1), got {self.beta}")
        if self.alpha < self.beta:
            raise InvalidParams(
                f"alpha must not be smaller than beta, got alpha={self.alpha}, beta={self.beta}"
            )
        norm = self.alpha * self.alpha + self.beta * self.beta
        if abs(norm - 1.0) > 1e-14:
            raise InvalidParams(
                f"alpha**2 + beta**2 must equal 1 within 1e-14, got {norm!r}"
            )


def bogoliubov(params: BlackHoleParams) -> BogoliubovPair:
    """Mode-mixing coefficients for the given black hole and frequency.

    Evaluated as ``alpha = 1/sqrt(1 + exp(-x))`` and
    ``beta = exp(-x/2) * alpha`` with ``x = 8*pi*(M - D)*omega >= 0``, which
    never overflows and keeps ``alpha**2 + beta**2 = 1`` to machine
    precision.  In the extreme limit ``x = 0`` the two coefficients are the
    identical float ``1/sqrt(2)``.
    """
    x = 8.0 * math.pi * (params.mass - params.dilaton) * params.omega
    alpha = 1.0 / math.sqrt(1.0 + math.exp(-x))
    beta = math.exp(-0.5 * x) * alpha
    return BogoliubovPair(alpha=alpha, beta=beta)


def _check_exponents(alpha_exp: int, beta_exp: int) -> None:
    if alpha_exp < 0 or beta_exp < 0:
        raise InvalidParams(
            f"exponents must be non-negative, got ({alpha_exp}, {beta_exp})"
        )


def log_power(pair: BogoliubovPair, alpha_exp: int, beta_exp: int) -> float:
    """Natural log of ``alpha**alpha_exp * beta**beta_exp``.

    Raises
    ------
    DegenerateCoefficient
        If ``beta == 0`` while ``beta_exp > 0`` (the log would be ``-inf``).
    InvalidParams
        If either exponent is negative.
    """
    _check_exponents(alpha_exp, beta_exp)
    if pair.beta == 0.0 and beta_exp > 0:
        raise DegenerateCoefficient(
            f"log of beta**{beta_exp} is undefined for beta = 0"
        )
    total = alpha_exp * math.log(pair.alpha)
    if beta_exp > 0:
        total += beta_exp * math.log(pair.beta)
    return total


def coeff_power(pair: BogoliubovPair, alpha_exp: int, beta_exp: int) -> float:
    """Underflow-safe value of ``alpha**alpha_exp * beta**beta_exp``.

    A vanishing ``beta`` raised to a positive power gives an exact ``0.0``.
    Otherwise the product is formed directly while it stays comfortably
    inside the normal double range and through ``exp`` of the log-domain
    value once it would underflow.
    """
    _check_exponents(alpha_exp, beta_exp)
    if pair.beta == 0.0 and beta_exp > 0:
        return 0.0
    log_value = log_power(pair, alpha_exp, beta_exp)
    if log_value > _LOG_DIRECT_FLOOR:
        return pair.alpha**alpha_exp * pair.beta**beta_exp
    return math.exp(log_value)
