"""Closed-form edge quantities and spacing lower bounds for L_n^(alpha) zeros.

Everything here is elementary algebra in U = sqrt(n+alpha+1) + sqrt(n) and
V = sqrt(n+alpha+1) - sqrt(n); all derived quantities are computed from U and
V once, so equivalent expressions cannot drift apart through cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError
from .laguerre import LaguerreParams, _check_point


@dataclass(frozen=True)
class EdgeParams:
    """U, V and their squares; (V^2, U^2) brackets every zero of L_n^(alpha)."""

    U: float
    V: float
    U2: float
    V2: float


@dataclass(frozen=True)
class BoundSet:
    """All spacing/window bounds for one (n, alpha), ready for reporting.

    range_lower and proof_range_lower are None when no admissible C was
    supplied; proof_range_lower carries the sharper constant
    sqrt(3/(2(C+1))) that the stated bound rounds down to 1/sqrt(C+1).
    """

    uniform_lower: float
    range_lower: float | None
    proof_range_lower: float | None
    range_constant: float | None
    krasikov_min_lower: float
    krasikov_max_upper: float
    delta_max: float
    x_star: float


def edge_params(params: LaguerreParams) -> EdgeParams:
    """Edge quantities; V is formed as (alpha+1)/U so that U*V = alpha+1 holds
    to a rounding error even when alpha+1 underflows the subtraction."""
    root_sum = math.sqrt(params.n + params.alpha + 1.0)
    root_n = math.sqrt(params.n)
    U = root_sum + root_n
    V = (params.alpha + 1.0) / U
    return EdgeParams(U=U, V=V, U2=U * U, V2=V * V)


def _width(params: LaguerreParams) -> float:
    # U^2 - V^2 without cancellation: (U-V)(U+V) = 2 sqrt(n) * 2 sqrt(n+alpha+1).
    return 4.0 * math.sqrt(params.n * (params.n + params.alpha + 1.0))


def delta(params: LaguerreParams, x: float) -> float:
    """(U^2 - x)(x - V^2) / (4 x^2): positive exactly on the zero window."""
    x = _check_point(x, positive=True)
    e = edge_params(params)
    return (e.U2 - x) * (x - e.V2) / (4.0 * x * x)


def delta_rational(params: LaguerreParams, x: float) -> float:
    """Cross-check form n/x - (x - alpha - 1)^2 / (4 x^2) of the same function."""
    x = _check_point(x, positive=True)
    t = x - params.alpha - 1.0
    return params.n / x - t * t / (4.0 * x * x)


def delta_extremum(params: LaguerreParams) -> tuple[float, float]:
    """The unique maximum of delta on (0, inf): location and value.

    x* = 2 U^2 V^2 / (U^2 + V^2) is the weighted harmonic mean of U^2 and
    V^2, so it always falls inside the window; the maximum value is
    (U^2 - V^2)^2 / (16 U^2 V^2).
    """
    e = edge_params(params)
    x_star = 2.0 * e.U2 * e.V2 / (e.U2 + e.V2)
    w = _width(params)
    delta_max = w * w / (16.0 * e.U2 * e.V2)
    return x_star, delta_max


def uniform_spacing_lower(params: LaguerreParams) -> float:
    """The uniform gap lower bound sqrt(3) (alpha+1) / sqrt(n (n+alpha+1))."""
    if params.n < 2:
        raise ParameterError(f"no spacings exist for degree {params.n}")
    return math.sqrt(3.0) * (params.alpha + 1.0) / math.sqrt(
        params.n * (params.n + params.alpha + 1.0)
    )


def resolve_range_constant(params: LaguerreParams, C) -> float:
    """Normalize the caller's C: a positive number, or "auto" for C = n/alpha."""
    if isinstance(C, str):
        if C != "auto":
            raise ParameterError(f"C must be a positive number or 'auto', got {C!r}")
        if params.alpha <= 0.0:
            raise ParameterError("auto C = n/alpha needs alpha > 0")
        return params.n / params.alpha
    C = float(C)
    if not math.isfinite(C) or C <= 0.0:
        raise ParameterError(f"C must be positive, got {C}")
    return C


def _require_range_regime(params: LaguerreParams, C: float) -> None:
    if params.alpha < params.n / C:
        raise ParameterError(
            f"alpha = {params.alpha} is below n/C = {params.n / C}; "
            "the large-alpha bound does not apply"
        )


def range_spacing_lower(params: LaguerreParams, C) -> float:
    """Gap lower bound (1/sqrt(C+1)) sqrt(alpha/n), valid when alpha >= n/C."""
    C = resolve_range_constant(params, C)
    _require_range_regime(params, C)
    return math.sqrt(params.alpha / params.n) / math.sqrt(C + 1.0)


def proof_range_spacing_lower(params: LaguerreParams, C) -> float:
    """The sharper constant sqrt(3/(2(C+1))) sqrt(alpha/n) behind the stated bound."""
    C = resolve_range_constant(params, C)
    _require_range_regime(params, C)
    return math.sqrt(1.5 / (C + 1.0)) * math.sqrt(params.alpha / params.n)


def telescoped_bracket(params: LaguerreParams, C) -> tuple[float, float]:
    """Two-sided bracket [sqrt(n alpha)/sqrt(C+1), 6 sqrt(C+1) sqrt(n alpha)]
    for the zero range x_max - x_min; the range also never exceeds U^2 - V^2."""
    if params.n < 2:
        raise ParameterError(f"no zero range exists for degree {params.n}")
    C = resolve_range_constant(params, C)
    _require_range_regime(params, C)
    root = math.sqrt(params.n * params.alpha)
    return root / math.sqrt(C + 1.0), 6.0 * math.sqrt(C + 1.0) * root


def krasikov_window(params: LaguerreParams) -> tuple[float, float]:
    """Sharpened extreme-zero window, one-sided bounds exactly as printed:
    V^2 + 3 V^(4/3) (U^2-V^2)^(-1/3) below, U^2 - 3 U^(4/3) (U^2-V^2)^(-1/3) + 2 above."""
    e = edge_params(params)
    w = _width(params)
    shrink = w ** (-1.0 / 3.0)
    min_lower = e.V2 + 3.0 * e.V ** (4.0 / 3.0) * shrink
    max_upper = e.U2 - 3.0 * e.U ** (4.0 / 3.0) * shrink + 2.0
    return min_lower, max_upper


def bound_set(params: LaguerreParams, C="auto") -> BoundSet:
    """Assemble every bound for one configuration.

    C may be a positive number, "auto" (C = n/alpha), or None to skip the
    large-alpha bounds; they are also skipped when alpha < n/C or when
    "auto" is requested with alpha <= 0.
    """
    x_star, delta_max = delta_extremum(params)
    kras_lo, kras_hi = krasikov_window(params)
    range_lower = proof_lower = range_constant = None
    if C == "auto" and params.alpha <= 0.0:
        C = None  # no admissible C when alpha <= 0
    if C is not None:
        resolved = resolve_range_constant(params, C)
        if params.alpha >= params.n / resolved:
            range_lower = range_spacing_lower(params, resolved)
            proof_lower = proof_range_spacing_lower(params, resolved)
            range_constant = resolved
    return BoundSet(
        uniform_lower=uniform_spacing_lower(params),
        range_lower=range_lower,
        proof_range_lower=proof_lower,
        range_constant=range_constant,
        krasikov_min_lower=kras_lo,
        krasikov_max_upper=kras_hi,
        delta_max=delta_max,
        x_star=x_star,
    )
