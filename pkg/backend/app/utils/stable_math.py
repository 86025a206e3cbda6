"""
Numerically stable scalar primitives.

Everything near beta -> 1 or near the rest frame goes through here so that no caller
writes 1 - beta**2, cosh(x) - 1 or log(1 + x) by hand.
"""

from __future__ import annotations

import math


def one_minus_exp(s: float) -> float:
    """1 - exp(s) without cancellation for s near 0."""
    return -math.expm1(s)


def cosh_minus_one(u: float) -> float:
    """cosh(u) - 1 = 2 sinh^2(u/2)."""
    h = math.sinh(0.5 * u)
    return 2.0 * h * h


def hypot_one_minus_one(x: float) -> float:
    """sqrt(1 + x^2) - 1, finite for every finite x."""
    return x / (math.hypot(1.0, x) + 1.0) * x


def acosh_one_plus(y: float) -> float:
    """acosh(1 + y) for y >= 0, accurate for small y."""
    return math.log1p(y + math.sqrt(y * (y + 2.0)))


def log_half_k_sum(k: float) -> float:
    """log(k/2 + 1/(2k)) = log1p((k - 1)^2 / (2k))."""
    km1 = k - 1.0
    return math.log1p(km1 * km1 / (2.0 * k))


def tanh_deficit(u: float) -> float:
    """1 - tanh(u) for u >= 0, without overflow."""
    e = math.exp(-2.0 * u)
    return 2.0 * e / (1.0 + e)


def rel_error(value: float, reference: float) -> float:
    """|value - reference| / |reference|; 0 when both are exactly zero."""
    diff = abs(value - reference)
    if diff == 0.0:
        return 0.0
    scale = abs(reference)
    if scale == 0.0:
        return math.inf
    return diff / scale
