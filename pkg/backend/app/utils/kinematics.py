"""
Conversions among velocity, Lorentz factor, rapidity and Bondi k-factor.

All functions work in natural units (c = 1). 1 - beta^2 is always formed as
(1 - beta)(1 + beta) using the deficit carried by `Beta`.
"""

from __future__ import annotations

import math
from typing import Union

from backend.app.models.errors import DomainError
from backend.app.models.kinematics import Beta, KinematicState
from backend.app.utils.stable_math import one_minus_exp, tanh_deficit

BetaLike = Union[Beta, float]


def kinematic_state(beta: BetaLike) -> KinematicState:
    """Consistent (beta, gamma, rapidity, k) bundle for one velocity."""
    b = Beta.of(beta)
    one_plus = 1.0 + b.value
    gamma = 1.0 / math.sqrt(b.deficit * one_plus)
    if b.value < 0.5:
        rapidity = math.atanh(b.value)
    else:
        # atanh(beta) = 0.5 * log((1 + beta) / (1 - beta)) with the exact deficit
        rapidity = 0.5 * (math.log1p(b.value) - math.log(b.deficit))
    k = math.sqrt(one_plus / b.deficit)
    return KinematicState(beta=b, gamma=gamma, rapidity=rapidity, k=k)


def gamma_of_beta(beta: BetaLike) -> float:
    """1 / sqrt((1 - beta)(1 + beta))."""
    b = Beta.of(beta)
    return 1.0 / math.sqrt(b.deficit * (1.0 + b.value))


def beta_of_k(k: float) -> Beta:
    """Inverse of the k-factor relation: beta = (k^2 - 1) / (k^2 + 1)."""
    if not math.isfinite(k) or k < 1.0:
        raise DomainError(f"k-factor must be >= 1, got {k}")
    denom = k * k + 1.0
    return Beta((k - 1.0) * (k + 1.0) / denom, deficit=2.0 / denom)


def beta_from_log_gamma(log_gamma: float) -> Beta:
    """
    Velocity whose Lorentz factor is exp(log_gamma), built in log space:
    1 - beta^2 = exp(-2 log_gamma).
    """
    if log_gamma < 0.0:
        raise DomainError(f"Lorentz factor below 1 (log gamma = {log_gamma})")
    s = -2.0 * log_gamma
    value = math.sqrt(one_minus_exp(s))
    return Beta(value, deficit=math.exp(s) / (1.0 + value))


def beta_from_rapidity(rapidity: float) -> Beta:
    """tanh(rapidity) with 1 - tanh computed directly."""
    if rapidity < 0.0:
        raise DomainError(f"negative rapidity {rapidity}; velocities are measured with u >= 0")
    return Beta(math.tanh(rapidity), deficit=tanh_deficit(rapidity))
