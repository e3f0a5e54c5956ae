"""Shift-normalized evaluation of the smooth max approximations.

Every evaluator works in the u = log(t) domain with max-shifted
exponentials, so no intermediate value overflows no matter how large t
is.  The raw power sum F_v(t) is never materialized.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .vectors import RealVector

# Precision of the cumulant recursion degrades combinatorially with the
# derivative order; the bounds and combined formulas only need k <= 3.
MAX_RK_ORDER = 8

_TINY = 1e-300


@dataclass(frozen=True)
class ApproxResult:
    """One approximation value with its evaluation parameters.

    ``certified`` is set by callers that consulted a sufficient bound
    before choosing ``t`` (see :mod:`smoothmax.bounds`).
    """

    value: float
    method: str
    t: float
    k: Optional[int] = None
    alpha: Optional[float] = None
    p: Optional[float] = None
    certified: bool = False
    target_delta: Optional[float] = None


def eval_Lcal(v: RealVector, u: float) -> float:
    """log of the power sum at t = e^u, i.e. the log-sum-exp of u*v.

    Computed as M*u + log(sum_i exp((v_i - M)*u)); each shifted term is
    <= 1, so the sum lies in [1, n] and nothing overflows.
    """
    if u <= 0:
        raise ValueError("u must be positive")
    m = v.max
    s = math.fsum(math.exp((x - m) * u) for x in v.entries)
    return m * u + math.log(s)


def eval_L(v: RealVector, t: float) -> ApproxResult:
    """LogSumExp approximation log_t(F_v(t)); overestimates max(v)."""
    _check_t(t)
    u = math.log(t)
    return ApproxResult(value=eval_Lcal(v, u) / u, method="L", t=t)


def _weights(v: RealVector, u: float) -> List[float]:
    return [math.exp((x - v.max) * u) for x in v.entries]


def eval_R(v: RealVector, t: float) -> ApproxResult:
    """Ratio approximation t*F'/F: the softmax-weighted mean of v.

    Underestimates max(v) and always lies in [min(v), max(v)].
    """
    _check_t(t)
    u = math.log(t)
    w = _weights(v, u)
    total = math.fsum(w)
    value = math.fsum(x * wi for x, wi in zip(v.entries, w)) / total
    return ApproxResult(value=value, method="R", t=t)


def falling_factorial_coeffs(k: int) -> List[int]:
    """Coefficients s(k, j) of x^j in x(x-1)...(x-k+1), for j = 1..k.

    These are signed Stirling numbers of the first kind, generated by the
    recursion P_{k+1}(x) = (x - k) P_k(x).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    coeffs = [1]  # P_1(x) = x
    for step in range(1, k):
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] += c          # x * c x^{j+1-1}
            nxt[j] -= step * c       # -step * c x^{j+1-1-1}... index shift
        coeffs = nxt
    return coeffs


def _cumulants(values: Sequence, weights: Sequence, k: int) -> List:
    """First k cumulants of the discrete distribution with the given
    atoms and (unnormalized, possibly complex) weights.

    Uses raw-moment accumulation followed by the standard
    moment-to-cumulant recursion.
    """
    total = sum(weights)
    moments = []
    for j in range(1, k + 1):
        moments.append(sum(w * x**j for x, w in zip(values, weights)) / total)
    kappa: List = []
    for j in range(1, k + 1):
        acc = moments[j - 1]
        for i in range(1, j):
            acc -= math.comb(j - 1, i - 1) * kappa[i - 1] * moments[j - i - 1]
        kappa.append(acc)
    return kappa


def _derivative_vector(v: RealVector, u: float, k: int) -> List[float]:
    """Derivatives d^j/du^j of log F_v(e^u) for j = 1..k.

    These are the cumulants of the distribution with atoms v_i and
    weights exp(v_i * u); the shift by max(v) only moves the mean.
    """
    m = v.max
    shifted = [x - m for x in v.entries]
    w = [math.exp(x * u) for x in shifted]
    kappa = _cumulants(shifted, w, k)
    kappa[0] += m
    return kappa


def _rk_from_derivatives(deriv: Sequence, k: int):
    coeffs = falling_factorial_coeffs(k)
    sign = (-1) ** (k + 1) / math.factorial(k - 1)
    return sign * sum(c * d for c, d in zip(coeffs, deriv))


def eval_Rk(v: RealVector, t: float, k: int) -> ApproxResult:
    """Higher-order ratio approximation (scaled k-th t-derivative of
    log F_v); k = 1 reduces to eval_R."""
    _check_t(t)
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > MAX_RK_ORDER:
        raise ValueError(f"k must be <= {MAX_RK_ORDER}")
    u = math.log(t)
    deriv = _derivative_vector(v, u, k)
    return ApproxResult(value=_rk_from_derivatives(deriv, k), method="Rk", t=t, k=k)


def eval_D(v: RealVector, t: float, alpha: float) -> ApproxResult:
    """Difference-quotient surrogate for the ratio approximation:
    (log F(alpha*t) - log F(t)) / log(alpha)."""
    _check_t(t)
    if alpha <= 0 or alpha == 1:
        raise ValueError("alpha must be positive and != 1")
    u = math.log(t)
    ua = math.log(alpha * t)
    value = (eval_Lcal(v, ua) - eval_Lcal(v, u)) / math.log(alpha)
    return ApproxResult(value=value, method="D", t=t, alpha=alpha)


def eval_pnorm(v: RealVector, p: float) -> ApproxResult:
    """p-norm of a nonnegative vector; approaches max(v) as p grows.

    Zero entries contribute nothing to the power sum.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    if any(x < 0 for x in v.entries):
        raise ValueError("p-norm approximation requires nonnegative entries")
    logs = [math.log(x) for x in v.entries if x > 0]
    if not logs:
        return ApproxResult(value=0.0, method="PNORM", t=p, p=p)
    m = max(logs)
    s = math.fsum(math.exp((x - m) * p) for x in logs)
    value = math.exp(m + math.log(s) / p)
    return ApproxResult(value=value, method="PNORM", t=p, p=p)


def contour_max(
    v: RealVector,
    k: int = 1,
    r: float = 0.1,
    N: int = 64,
) -> float:
    """Trapezoid-rule estimate of max(v) from the Cauchy integral of the
    ratio approximation over the contour |t| = 1/r.

    Requires integral v and r small enough that the power sum has no
    root of modulus >= 1/r; converges to max(v) geometrically in N.
    """
    if not v.is_integral:
        raise ValueError("contour estimator requires an integral vector")
    if r <= 0:
        raise ValueError("r must be positive")
    if N < 4:
        raise ValueError("N must be >= 4")
    if k < 1 or k > MAX_RK_ORDER:
        raise ValueError(f"k must be in 1..{MAX_RK_ORDER}")
    m = int(round(v.max))
    exps = [int(round(x)) - m for x in v.entries]
    acc = 0.0
    for j in range(N):
        t = 1.0 / (r * cmath.exp(2j * math.pi * j / N))
        w = [t**e for e in exps]
        total = sum(w)
        if abs(total) < _TINY:
            raise ArithmeticError(
                "power sum underflows on the contour; decrease r"
            )
        kappa = _cumulants(exps, w, k)
        kappa[0] += m
        acc += _rk_from_derivatives(kappa, k).real
    return acc / N


def _check_t(t: float) -> None:
    if not t > 1:
        raise ValueError("t must be > 1")
