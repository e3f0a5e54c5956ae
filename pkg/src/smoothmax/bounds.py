"""Sufficient t-bounds for the approximations and certified integer
recovery of the maximum, its multiplicity, the gap, and the second value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .approx import _derivative_vector, eval_Lcal, falling_factorial_coeffs
from .vectors import RealVector

# Returned t_min values are nudged up so the strict inequalities of the
# bounds hold at the returned point itself.
_NUDGE = 1e-9


class DegenerateDenominator(ArithmeticError):
    """Raised when a combined-ratio formula evaluates 0/0 (constant
    vectors, or t so large that the leading error terms vanish)."""


@dataclass(frozen=True)
class BoundRequest:
    """Summary quantities a bound is computed from.

    ``g2`` is a lower bound on the true gap between the two largest
    distinct values (1 for integral input); ``alpha`` is only used by the
    difference-quotient bound and ``M_upper`` only by the p-norm bound.
    """

    n: int
    mu_M: int
    g2: float = 1.0
    delta: float = 1.0
    alpha: Optional[float] = None
    M_upper: Optional[float] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 1 <= self.mu_M <= self.n:
            raise ValueError("mu_M must satisfy 1 <= mu_M <= n")
        if self.g2 <= 0:
            raise ValueError("g2 must be positive")
        if self.delta <= 0:
            raise ValueError("delta must be positive")


@dataclass(frozen=True)
class BoundResult:
    t_min: float
    theorem: str
    closed_form: bool


def _bisect_last_root(h, lo: float, hi: float) -> float:
    """Least point in (lo, hi] where h is positive, given h(lo) <= 0 <
    h(hi) and h positive beyond its last sign change."""
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if h(mid) > 0:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-9 * hi:
            break
    return hi


def bound_L(req: BoundRequest) -> BoundResult:
    """Least t beyond which the LogSumExp error is provably < delta."""
    n, mu, g2, delta = req.n, req.mu_M, req.g2, req.delta

    def h(t: float) -> float:
        return t ** (delta + g2) - mu * t**g2 - (n - mu)

    if g2 >= 1 and delta == 1:
        if mu == 1:
            t = 0.5 + math.sqrt(n)
        else:
            t = (mu + math.sqrt(mu * mu + 4 * (n - mu))) / 2
        return BoundResult(max(t, 1.0) + _NUDGE, "L", closed_form=True)
    lo = 1.0
    if h(1.0 + _NUDGE) > 0:
        return BoundResult(1.0 + _NUDGE, "L", closed_form=False)
    hi = 2.0
    while h(hi) <= 0:
        hi *= 2
        if hi > 1e100:
            raise ArithmeticError("bound_L bracket search diverged")
    t = _bisect_last_root(h, lo, hi)
    return BoundResult(t * (1 + _NUDGE), "L", closed_form=False)


def bound_R(req: BoundRequest) -> BoundResult:
    """Sufficient t for the ratio approximation error to be < delta."""
    n, mu, g2, delta = req.n, req.mu_M, req.g2, req.delta
    general = max(
        math.exp(1.0 / g2),
        ((n - mu) * g2 / (delta * mu)) ** (1.0 / g2) if n > mu else 0.0,
    )
    if delta == 1 and g2 >= 1:
        shortcut = max(math.e, (n - mu) / mu)
        if shortcut <= general:
            return BoundResult(shortcut + _NUDGE, "R", closed_form=True)
    return BoundResult(general + _NUDGE, "R", closed_form=False)


def bound_D(req: BoundRequest) -> BoundResult:
    """Sufficient t for the difference-quotient error to be < delta."""
    if req.alpha is None or req.alpha <= 1:
        raise ValueError("bound_D requires alpha > 1")
    n, mu, g2, delta, a = req.n, req.mu_M, req.g2, req.delta, req.alpha
    ag = a**-g2
    general = max(
        math.exp(1.0 / g2),
        a ** (ag / (1 - ag)),
        ((n - mu) / (delta * mu) * (1 - ag) / math.log(a)) ** (1.0 / g2)
        if n > mu
        else 0.0,
    )
    if delta == 1 and g2 >= 1:
        shortcut = max(math.e, (n - mu) / mu)
        if shortcut <= general:
            return BoundResult(shortcut + _NUDGE, "D", closed_form=True)
    return BoundResult(general + _NUDGE, "D", closed_form=False)


def bound_pnorm(req: BoundRequest) -> BoundResult:
    """Least exponent u > 1 beyond which the p-norm of a vector with
    entries in [0, 1] is provably within delta of its maximum.

    ``M_upper`` is a caller-supplied upper estimate of the unknown
    maximum (the bound's Delta depends on it).
    """
    if req.M_upper is None or req.M_upper <= 0:
        raise ValueError("bound_pnorm requires M_upper > 0")
    n, mu, g2 = req.n, req.mu_M, req.g2
    big = math.log1p(req.delta / req.M_upper)

    def h(u: float) -> float:
        return math.exp(u * (big + g2)) - mu * math.exp(u * g2) - (n - mu)

    if h(1.0 + _NUDGE) > 0:
        return BoundResult(1.0 + _NUDGE, "PNORM", closed_form=False)
    hi = 2.0
    while h(hi) <= 0:
        hi *= 2
        if hi > 1e6:
            raise ArithmeticError("bound_pnorm bracket search diverged")
    u = _bisect_last_root(h, 1.0, hi)
    return BoundResult(u * (1 + _NUDGE), "PNORM", closed_form=False)


def certified_max(v: RealVector) -> int:
    """Provably exact maximum of an integral vector from one LogSumExp
    evaluation at t = n + 1 (valid for every multiplicity)."""
    if not v.is_integral:
        raise ValueError("certified_max requires an integral vector")
    n = len(v)
    u = math.log(n + 1)
    # L lies in [M, M + log(n)/log(n+1)): adding half of the remaining
    # headroom keeps the floor robust when L sits on the integer M up to
    # rounding error, without ever reaching M + 1.
    margin = 0.5 * (1.0 - math.log(n) / u) if n > 1 else 0.25
    return int(math.floor(eval_Lcal(v, u) / u + margin))


def certified_multiplicity(v: RealVector) -> Tuple[int, int]:
    """Provably exact (maximum, multiplicity) of an integral vector.

    Uses t = n + 1, which dominates both the max-recovery bound and the
    multiplicity bound t > n - mu_M.
    """
    if not v.is_integral:
        raise ValueError("certified_multiplicity requires an integral vector")
    n = len(v)
    u = math.log(n + 1)
    lcal = eval_Lcal(v, u)
    margin = 0.5 * (1.0 - math.log(n) / u) if n > 1 else 0.25
    m = int(math.floor(lcal / u + margin))
    # t^(L - M) in shifted form: exp(Lcal - M*u) = mu + tail with
    # tail < n/(n+1), so a margin below 1/(n+1) keeps the floor robust
    # when the value sits on the integer mu up to rounding error.
    mu = int(math.floor(math.exp(lcal - m * u) + 0.5 / (n + 1)))
    return m, mu


def _r123(v: RealVector, t: float) -> Tuple[float, float, float]:
    u = math.log(t)
    deriv = _derivative_vector(v, u, 3)
    # Rows of the falling-factorial change of basis:
    #   R1 = D1,  R2 = D1 - D2,  R3 = (2 D1 - 3 D2 + D3) / 2.
    r1 = deriv[0]
    r2 = deriv[0] - deriv[1]
    r3 = (2 * deriv[0] - 3 * deriv[1] + deriv[2]) / 2
    return r1, r2, r3


def _guarded_ratio(num: float, den: float) -> float:
    if abs(den) <= 1e-12 * max(abs(num), 1.0):
        raise DegenerateDenominator(
            "combined-ratio denominator vanishes (constant vector or t too large)"
        )
    return num / den


def combined_max(v: RealVector, t: float) -> float:
    """Rational combination of the first three ratio approximations that
    cancels the leading error term (one order faster than eval_R)."""
    r1, r2, r3 = _r123(v, t)
    num = 2 * r1 * r3 - r2 * (r1 + r2)
    den = r1 - 3 * r2 + 2 * r3
    return _guarded_ratio(num, den)


def combined_g2(v: RealVector, t: float) -> float:
    """Estimate of the gap between the two largest distinct values from
    the first three ratio approximations."""
    r1, r2, r3 = _r123(v, t)
    return _guarded_ratio(r1 - 3 * r2 + 2 * r3, r2 - r1)


def second_value(v: RealVector, t_budget: float = 1e12) -> int:
    """Second largest distinct value of an integral vector.

    The maximum is certified; the gap estimate is a best-effort rounding
    of combined_g2 at doubling t, accepted once two consecutive estimates
    round to the same integer.
    """
    if not v.is_integral:
        raise ValueError("second_value requires an integral vector")
    m = certified_max(v)
    t = max(math.e, float(len(v)))
    prev = None
    while t <= t_budget:
        g = round(combined_g2(v, t))
        if prev is not None and g == prev:
            return m - g
        prev = g
        t *= 2
    raise ArithmeticError("gap estimate did not stabilize within the t budget")


def stirling_matrix(r: int) -> List[List[Fraction]]:
    """Lower-triangular change of basis from the u-derivatives of
    log F_v(e^u) to the higher-order ratio approximations.

    Row k holds (-1)^(k+1)/(k-1)! times the coefficients of the falling
    factorial x(x-1)...(x-k+1), i.e. signed Stirling numbers of the first
    kind.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    rows = []
    for k in range(1, r + 1):
        sign = Fraction((-1) ** (k + 1), math.factorial(k - 1))
        coeffs = falling_factorial_coeffs(k)
        row = [sign * c for c in coeffs] + [Fraction(0)] * (r - k)
        rows.append(row)
    return rows
