"""First-kind Bessel zeros and the small-zero limit of Laguerre spacings.

Zeros j_{alpha,k} are found by Newton iteration from the McMahon-type guess
(k + alpha/2 - 1/4) pi, with the ascending power series as the evaluator.
The series alternates with terms peaking near exp(x), so it is summed at a
working precision that grows with x; results are returned as doubles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from mpmath import mp

from .errors import ConvergenceError, DomainError, ParameterError
from .laguerre import LaguerreParams
from .solver import zeros as solve_zeros

MAX_RANK = 20

# Slack for flag comparisons between exact bounds and double arithmetic
# (the alpha = 1/2 gaps equal pi exactly and must not flip the flag).
_FLAG_SLACK = 1e-9


def _require_alpha(alpha: float) -> float:
    if not (isinstance(alpha, (int, float)) and math.isfinite(alpha)):
        raise DomainError(f"alpha must be a finite real, got {alpha!r}")
    if not -1.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (-1, 1], got {alpha}")
    return float(alpha)


def _working_dps(x: float) -> int:
    # The alternating sum cancels ~log10(e^x) = 0.434*x digits.
    return 30 + int(0.46 * max(x, 1.0))


def _series_j(alpha: float, x, dps: int):
    """J_alpha(x) for x > 0 by the ascending series at the given precision."""
    with mp.workdps(dps):
        xm = mp.mpf(x)
        am = mp.mpf(alpha)  # keep every coefficient at working precision:
        # double-precision ratios would leak eps-sized junk into terms of
        # size ~e^x that must cancel down to O(1)
        half = xm / 2
        z = half * half
        term = mp.rgamma(am + 1)
        total = term
        biggest = abs(term)
        cutoff = mp.mpf(10) ** (-dps - 10)
        m = 1
        while True:
            term = term * (-z) / (m * (m + am))
            total += term
            mag = abs(term)
            if mag > biggest:
                biggest = mag
            if m * (m + alpha) > z and mag < cutoff * biggest:
                break
            m += 1
            if m > 10000:
                raise ConvergenceError(f"series for J_{alpha}({x}) did not terminate")
        return total * half**am


def _j_and_derivative(alpha: float, x, dps: int):
    """(J_alpha, J_alpha') via J' = (alpha/x) J - J_{alpha+1}."""
    j = _series_j(alpha, x, dps)
    j_next = _series_j(alpha + 1.0, x, dps)
    with mp.workdps(dps):
        return j, (alpha / mp.mpf(x)) * j - j_next


def _newton_zero(alpha: float, start, dps: int):
    with mp.workdps(dps):
        x = mp.mpf(start)
        for _ in range(60):
            j, jp = _j_and_derivative(alpha, x, dps)
            if jp == 0:
                return None
            step = j / jp
            if abs(step) > 1:
                step = step / abs(step)  # clamp to unit step away from the basin edge
            x = x - step
            if x <= 0:
                return None
            if abs(step) < mp.mpf(10) ** (-25) * max(x, mp.mpf(1)):
                return x
        return None


def _bracket_scan(alpha: float, lo: float, dps: int):
    """First sign change of J_alpha above lo, bisected then Newton-polished."""
    with mp.workdps(dps):
        a = mp.mpf(lo)
        fa = _series_j(alpha, a, dps)
        step = mp.mpf(0.3)
        for _ in range(80):
            b = a + step
            fb = _series_j(alpha, b, dps)
            if fa * fb < 0:
                break
            a, fa = b, fb
        else:
            raise ConvergenceError(f"no sign change of J_{alpha} found above {lo}")
        for _ in range(60):
            mid = (a + b) / 2
            fm = _series_j(alpha, mid, dps)
            if fa * fm <= 0:
                b, fb = mid, fm
            else:
                a, fa = mid, fm
        refined = _newton_zero(alpha, (a + b) / 2, dps)
        return refined if refined is not None else (a + b) / 2


@lru_cache(maxsize=None)
def _zero_cached(alpha: float, k: int) -> float:
    prev = _zero_cached(alpha, k - 1) if k > 1 else 0.0
    guess = (k + alpha / 2.0 - 0.25) * math.pi
    guess -= (4.0 * alpha * alpha - 1.0) / (8.0 * guess)  # first McMahon correction
    dps = _working_dps(guess + 4.0)
    candidate = None
    if guess > prev:
        candidate = _newton_zero(alpha, guess, dps)
    # Consecutive zeros sit between ~2.5 and 2*pi apart on this alpha range;
    # a candidate outside that band means Newton picked the wrong zero.
    lo_ok = prev + 2.5 if k > 1 else 0.0
    hi_ok = prev + 2.0 * math.pi + 0.1 if k > 1 else 3.9
    if candidate is None or not lo_ok < candidate < hi_ok:
        start = prev + 0.05 if k > 1 else 1e-4
        candidate = _bracket_scan(alpha, start, dps)
    return float(candidate)


def bessel_zero(alpha: float, k: int) -> float:
    """The k-th positive zero of J_alpha for alpha in (-1, 1], 1 <= k <= 20."""
    alpha = _require_alpha(alpha)
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= MAX_RANK:
        raise DomainError(f"rank must be an integer in 1..{MAX_RANK}, got {k!r}")
    return _zero_cached(alpha, k)


def bessel_residual(alpha: float, x: float) -> float:
    """|J_alpha(x)| / max(1, |J_alpha'(x)| * x), at high working precision."""
    alpha = _require_alpha(alpha)
    dps = _working_dps(x)
    j, jp = _j_and_derivative(alpha, x, dps)
    with mp.workdps(dps):
        return float(abs(j) / max(1, abs(jp) * mp.mpf(x)))


@dataclass(frozen=True)
class BesselZeroTable:
    """The first K zeros of J_alpha, strictly increasing."""

    alpha: float
    zeros: np.ndarray
    K: int

    def __post_init__(self):
        z = np.asarray(self.zeros, dtype=float)
        z.setflags(write=False)
        object.__setattr__(self, "zeros", z)
        if z.size != self.K:
            raise ParameterError(f"expected {self.K} zeros, got {z.size}")
        if self.K > 1 and np.min(np.diff(z)) <= 0.0:
            raise ParameterError("zeros are not strictly increasing")


def bessel_zero_table(alpha: float, count: int) -> BesselZeroTable:
    """Tabulate j_{alpha,1} .. j_{alpha,count} (count <= 20)."""
    alpha = _require_alpha(alpha)
    if not isinstance(count, int) or not 1 <= count <= MAX_RANK:
        raise DomainError(f"count must be in 1..{MAX_RANK}, got {count!r}")
    z = np.array([bessel_zero(alpha, k) for k in range(1, count + 1)])
    return BesselZeroTable(alpha=alpha, zeros=z, K=count)


@dataclass(frozen=True)
class GapFactRow:
    """Recorded facts about one consecutive zero pair (j_k, j_{k+1})."""

    k: int
    gap: float
    gap_ge_pi: bool
    gap_le_two_pi: bool
    pair_sum: float
    sum_ge_one_plus_alpha: bool
    # Both printed variants of the intermediate sum bound are recorded but
    # never asserted: with pi inside the square root and with pi squared.
    sum_member_pi: float
    sum_member_pi2: float


@dataclass(frozen=True)
class GapFactsReport:
    alpha: float
    rows: tuple

    @property
    def all_gaps_in_band(self) -> bool:
        return all(r.gap_ge_pi and r.gap_le_two_pi for r in self.rows)

    @property
    def all_sums_ok(self) -> bool:
        return all(r.sum_ge_one_plus_alpha for r in self.rows)


def gap_facts(table: BesselZeroTable) -> GapFactsReport:
    """Per-pair gap and sum facts; flags only, assertions belong to tests."""
    if table.K < 2:
        raise ParameterError("gap facts need at least two zeros")
    rows = []
    for k in range(1, table.K):
        z_k = float(table.zeros[k - 1])
        z_next = float(table.zeros[k])
        gap = z_next - z_k
        pair_sum = z_next + z_k
        base = (k - 0.25) ** 2
        rows.append(
            GapFactRow(
                k=k,
                gap=gap,
                gap_ge_pi=gap >= math.pi * (1.0 - _FLAG_SLACK),
                gap_le_two_pi=gap <= 2.0 * math.pi * (1.0 + _FLAG_SLACK),
                pair_sum=pair_sum,
                sum_ge_one_plus_alpha=pair_sum >= (1.0 + table.alpha) * (1.0 - _FLAG_SLACK),
                sum_member_pi=2.0 * math.sqrt(base * math.pi + table.alpha**2),
                sum_member_pi2=2.0 * math.sqrt(base * math.pi**2 + table.alpha**2),
            )
        )
    return GapFactsReport(alpha=table.alpha, rows=tuple(rows))


@dataclass(frozen=True)
class LimitProbe:
    """Scaled spacings (n + (alpha+1)/2) * (k-th smallest gap) along a degree grid.

    target is the squared-zero difference j_{alpha,k+1}^2 - j_{alpha,k}^2.
    The small zeros behave like x ~ j^2 / (4(n + (alpha+1)/2)), so the scaled
    spacings converge to target / 4, exposed as asymptotic_limit.
    """

    alpha: float
    k: int
    n_grid: tuple
    scaled_spacings: np.ndarray
    target: float

    @property
    def asymptotic_limit(self) -> float:
        return self.target / 4.0

    @property
    def deviations(self) -> np.ndarray:
        """|scaled / asymptotic_limit - 1| per grid degree."""
        return np.abs(self.scaled_spacings / self.asymptotic_limit - 1.0)

    @property
    def printed_ratios(self) -> np.ndarray:
        """scaled / target, for comparing against the unquartered difference."""
        return self.scaled_spacings / self.target


def limit_probe(alpha: float, k: int, n_grid) -> LimitProbe:
    """Track the k-th smallest spacing of L_n^(alpha) against the Bessel limit.

    Pairs j_{alpha,k} with the k-th smallest zero (the clustered end of the
    spectrum); requires k+1 <= min(n_grid) so the spacing exists everywhere.
    """
    alpha = _require_alpha(alpha)
    grid = tuple(int(n) for n in n_grid)
    if not grid:
        raise ParameterError("degree grid is empty")
    if not isinstance(k, int) or not 1 <= k <= MAX_RANK - 1:
        raise ParameterError(f"rank must be in 1..{MAX_RANK - 1}, got {k!r}")
    if k + 1 > min(grid):
        raise ParameterError(f"rank {k} needs degrees of at least {k + 1}")
    j_k = bessel_zero(alpha, k)
    j_next = bessel_zero(alpha, k + 1)
    target = j_next * j_next - j_k * j_k
    scaled = np.empty(len(grid))
    for i, n in enumerate(grid):
        zs = solve_zeros(LaguerreParams(n=n, alpha=alpha))
        spacing = float(zs.zeros[k] - zs.zeros[k - 1])
        scaled[i] = (n + (alpha + 1.0) / 2.0) * spacing
    return LimitProbe(alpha=alpha, k=k, n_grid=grid, scaled_spacings=scaled, target=target)
