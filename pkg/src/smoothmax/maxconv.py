"""Classical convolution backends and the max-/min-convolution
algorithms driven by the smooth-max bounds.

The floating path forms shift-normalized powers t^(a_i - max(a)) <= 1,
convolves them with an FFT, and recovers each max-plus coefficient by a
log and a rounding step.  A per-coefficient error audit decides whether
the rounded output is a proof; ambiguous coefficients trigger an
automatic rerun on the exact big-integer backend.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np


class Backend(enum.Enum):
    FFT_FLOAT = "fft_float"
    EXACT_INT = "exact_int"


class CertificationError(ArithmeticError):
    """Raised when a certified result was requested but the rounding
    audit cannot validate the floating output and no exact fallback is
    possible."""


@dataclass(frozen=True)
class ConvolutionPlan:
    """Backend choice plus the evaluation parameters and error budget."""

    backend: Backend
    t_star: float
    alpha_star: Optional[float] = None
    rounding: str = "floor"
    fft_error_bound: float = 0.0


@dataclass(frozen=True)
class MaxConvResult:
    coefficients: List
    certified: bool
    plan: ConvolutionPlan
    raw_logs: Optional[List[float]] = None
    power_sums: Optional[List] = None


_MAX_OUTPUT_LEN = 1 << 26


def conv(x: Sequence, y: Sequence, backend: Backend = Backend.EXACT_INT):
    """Classical convolution coefficients (a*b)_k = sum_i a_i b_{k-i}.

    EXACT_INT requires integer-valued entries and returns exact
    big-integer coefficients; FFT_FLOAT returns floats.
    """
    if len(x) == 0 or len(y) == 0:
        raise ValueError("conv requires nonempty inputs")
    if len(x) + len(y) - 1 > _MAX_OUTPUT_LEN:
        raise ValueError("convolution output length too large")
    if backend is Backend.EXACT_INT:
        xi = _as_int_list(x)
        yi = _as_int_list(y)
        return _conv_exact(xi, yi)
    out, _ = _conv_fft(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    return out


def _as_int_list(x: Sequence) -> List[int]:
    out = []
    for v in x:
        if isinstance(v, (int, np.integer)):
            out.append(int(v))
            continue
        if float(v) != round(v):
            raise ValueError("EXACT_INT backend requires integer-valued entries")
        out.append(int(round(v)))
    return out


def _conv_exact(x: List[int], y: List[int]) -> List[int]:
    out = [0] * (len(x) + len(y) - 1)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            out[i + j] += xi * yj
    return out


def _conv_fft(x: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, float]:
    """FFT convolution plus a conservative per-coefficient absolute
    error bound 8 * u_mach * log2(L) * L * max|x| * max|y|."""
    n = len(x) + len(y) - 1
    size = 1 << (n - 1).bit_length()
    out = np.fft.irfft(np.fft.rfft(x, size) * np.fft.rfft(y, size), size)[:n]
    u = np.finfo(float).eps
    eps = 8.0 * u * math.log2(size) * size * np.abs(x).max() * np.abs(y).max()
    return out, eps


def _log_bigint(n: int) -> float:
    if n <= 0:
        raise ValueError("log of nonpositive integer")
    shift = max(0, n.bit_length() - 53)
    return math.log(n >> shift) + shift * math.log(2)


def _floor_log_int(t: int, x: int) -> int:
    """Largest e with t^e <= x for integers t >= 2, x >= 1."""
    e = int(_log_bigint(x) / math.log(t))
    while t**e > x:
        e -= 1
    while t ** (e + 1) <= x:
        e += 1
    return e


def _validate_integer_vectors(a: Sequence, b: Sequence) -> Tuple[List[int], List[int]]:
    if len(a) == 0 or len(b) == 0:
        raise ValueError("inputs must be nonempty")
    return _as_int_list(a), _as_int_list(b)


def _worst_case_L_bound(a: Sequence, b: Sequence) -> float:
    # Each window vector has length <= min(len(a), len(b)); worst case
    # multiplicity 1 in the max-recovery bound.
    nv = min(len(a), len(b))
    return (1 + math.sqrt(1 + 4 * (nv - 1))) / 2


def _exact_power_sums(
    a: List[int], b: List[int], t: int
) -> Tuple[List[int], int]:
    """Exact convolution of the power vectors.  Exponents are shifted by
    min(0, min) so they are nonnegative; the shift is returned so callers
    can re-add it after the log."""
    shift = min(0, min(a)) + min(0, min(b))
    sa = min(0, min(a))
    sb = min(0, min(b))
    alpha = [t ** (ai - sa) for ai in a]
    beta = [t ** (bi - sb) for bi in b]
    return _conv_exact(alpha, beta), shift


def _float_power_conv(
    a: Sequence, b: Sequence, t: float
) -> Tuple[np.ndarray, float, float]:
    """FFT convolution of max-shifted power vectors.

    Returns (coefficients, per-coefficient error bound, shift), where
    shift = max(a) + max(b) must be re-added after applying log_t.
    """
    logt = math.log(t)
    aa = np.asarray(a, dtype=float)
    bb = np.asarray(b, dtype=float)
    shift = aa.max() + bb.max()
    out, eps = _conv_fft(np.exp(logt * (aa - aa.max())), np.exp(logt * (bb - bb.max())))
    return out, eps, shift


def maxconv_L(
    a: Sequence,
    b: Sequence,
    t_star: Optional[float] = None,
    backend: Optional[Backend] = None,
) -> MaxConvResult:
    """Max-plus convolution of integer vectors via one classical
    convolution of power vectors and a floor of the log.

    With the default t* the floored output is provably exact; the FFT
    path is audited and falls back to the exact backend whenever a
    coefficient sits too close to a rounding boundary.
    """
    ai, bi = _validate_integer_vectors(a, b)
    t = float(t_star) if t_star is not None else float(max(len(ai), len(bi)) + 1)
    if t <= 1:
        raise ValueError("t_star must be > 1")
    bound_ok = t > _worst_case_L_bound(ai, bi)

    if backend is not Backend.EXACT_INT:
        result = _maxconv_L_float(ai, bi, t, bound_ok)
        if result is not None:
            return result
        if backend is Backend.FFT_FLOAT:
            raise CertificationError(
                "FFT error audit failed and the exact fallback was disabled"
            )
    t_int = int(round(t)) if abs(t - round(t)) < 1e-12 else int(math.ceil(t))
    t_int = max(t_int, 2)
    return _maxconv_L_exact(ai, bi, t_int, bound_ok and t_int >= t)


def _maxconv_L_exact(
    a: List[int], b: List[int], t: int, certified: bool
) -> MaxConvResult:
    sums, shift = _exact_power_sums(a, b, t)
    logt = math.log(t)
    coeffs = [_floor_log_int(t, s) + shift for s in sums]
    raw = [_log_bigint(s) / logt + shift for s in sums]
    plan = ConvolutionPlan(Backend.EXACT_INT, float(t), rounding="floor")
    return MaxConvResult(coeffs, certified, plan, raw_logs=raw, power_sums=sums)


def _maxconv_L_float(
    a: List[int], b: List[int], t: float, bound_ok: bool
) -> Optional[MaxConvResult]:
    """Floating Algorithm-1 path; returns None when the audit fails."""
    sums, eps, shift = _float_power_conv(a, b, t)
    logt = math.log(t)
    lo = sums - eps
    if np.any(lo <= 0):
        return None
    # Inflate the audit interval by the log/division rounding slack;
    # without it a log that is exactly an integer (single-term
    # coefficients) can land an ulp below its floor boundary.
    logs = np.log(sums) / logt + shift
    slack = 1e-9 * np.maximum(1.0, np.abs(logs))
    c_lo = np.floor(np.log(lo) / logt + shift - slack)
    c_hi = np.floor(np.log(sums + eps) / logt + shift + slack)
    if np.any(c_lo != c_hi):
        return None
    raw = list(np.log(sums) / logt + shift)
    plan = ConvolutionPlan(Backend.FFT_FLOAT, t, rounding="floor", fft_error_bound=eps)
    return MaxConvResult(
        [int(c) for c in c_lo], bound_ok, plan, raw_logs=raw, power_sums=list(sums)
    )


def maxconv_D(
    a: Sequence,
    b: Sequence,
    t_star: Optional[float] = None,
    alpha_star: Optional[float] = None,
    backend: Optional[Backend] = None,
) -> MaxConvResult:
    """Max-plus convolution via the difference quotient of two classical
    convolutions (at t* and alpha* t*) and a ceiling of the log-ratio.

    The second convolution is always floating point; with
    backend=EXACT_INT the first power sum is computed exactly (requires
    an integer t*).  Ambiguous coefficients fall back to the exact
    floor-of-log route.
    """
    ai, bi = _validate_integer_vectors(a, b)
    la, lb = len(ai), len(bi)
    t = float(t_star) if t_star is not None else max(math.e, la - 1, lb - 1) + 1e-3
    alpha = float(alpha_star) if alpha_star is not None else 2.0
    if t <= 1:
        raise ValueError("t_star must be > 1")
    if alpha <= 1:
        raise ValueError("alpha_star must be > 1")
    log_alpha = math.log(alpha)

    power_sums = None
    if backend is Backend.EXACT_INT:
        if abs(t - round(t)) > 1e-12 or round(t) < 2:
            raise ValueError("EXACT_INT backend requires an integer t_star >= 2")
        sums, shift = _exact_power_sums(ai, bi, int(round(t)))
        power_sums = sums
        logt = math.log(t)
        abs1 = np.array([_log_bigint(s) + shift * logt for s in sums])
        abs1_lo = abs1_hi = abs1
        eps1 = 0.0
    else:
        sums, eps1, shift1 = _float_power_conv(ai, bi, t)
        logt = math.log(t)
        power_sums = list(sums)
        if np.any(sums - eps1 <= 0):
            return _ambiguous_D_fallback(ai, bi, t, alpha, backend)
        abs1 = np.log(sums) + shift1 * logt
        abs1_lo = np.log(sums - eps1) + shift1 * logt
        abs1_hi = np.log(sums + eps1) + shift1 * logt

    sums2, eps2, shift2 = _float_power_conv(ai, bi, alpha * t)
    logat = math.log(alpha * t)
    if np.any(sums2 - eps2 <= 0):
        return _ambiguous_D_fallback(ai, bi, t, alpha, backend)
    abs2 = np.log(sums2) + shift2 * logat
    abs2_lo = np.log(sums2 - eps2) + shift2 * logat
    abs2_hi = np.log(sums2 + eps2) + shift2 * logat

    raw = (abs2 - abs1) / log_alpha
    # Inflate the audit interval by the log/division rounding slack;
    # without it a quotient that is exactly an integer (single-term
    # coefficients) can land an ulp above its ceiling boundary.
    slack = 1e-9 * np.maximum(1.0, np.abs(raw))
    r_lo = (abs2_lo - abs1_hi) / log_alpha - slack
    r_hi = (abs2_hi - abs1_lo) / log_alpha + slack
    if np.any(np.ceil(r_lo) != np.ceil(r_hi)):
        res = _ambiguous_D_fallback(ai, bi, t, alpha, backend)
        return MaxConvResult(
            res.coefficients, res.certified, res.plan,
            raw_logs=list(raw), power_sums=power_sums,
        )

    bound_ok = t > max(math.e, min(la, lb) - 1)
    used = Backend.EXACT_INT if backend is Backend.EXACT_INT else Backend.FFT_FLOAT
    plan = ConvolutionPlan(used, t, alpha_star=alpha, rounding="ceil",
                           fft_error_bound=eps2 + (0.0 if used is Backend.EXACT_INT else eps1))
    coeffs = [int(c) for c in np.ceil(r_hi)]
    return MaxConvResult(coeffs, bound_ok, plan, raw_logs=list(raw),
                         power_sums=power_sums)


def _ambiguous_D_fallback(
    a: List[int], b: List[int], t: float, alpha: float, backend: Optional[Backend]
) -> MaxConvResult:
    if backend is Backend.FFT_FLOAT:
        raise CertificationError(
            "FFT error audit failed and the exact fallback was disabled"
        )
    t_int = max(int(math.ceil(max(len(a), len(b)) + 1)), 2)
    res = _maxconv_L_exact(a, b, t_int, certified=True)
    plan = ConvolutionPlan(Backend.EXACT_INT, float(t_int), alpha_star=alpha,
                           rounding="floor")
    return MaxConvResult(res.coefficients, True, plan, raw_logs=res.raw_logs,
                         power_sums=res.power_sums)


def minconv(
    a: Sequence,
    b: Sequence,
    algorithm: str = "L",
    t_star: Optional[float] = None,
    alpha_star: Optional[float] = None,
    backend: Optional[Backend] = None,
) -> MaxConvResult:
    """Min-plus convolution, computed as -maxconv(-a, -b).

    Algebraically identical to evaluating the power sums at t -> 0+; the
    rounding direction flips automatically under negation.
    """
    na = [-x for x in a]
    nb = [-x for x in b]
    if algorithm == "L":
        res = maxconv_L(na, nb, t_star=t_star, backend=backend)
    elif algorithm == "D":
        res = maxconv_D(na, nb, t_star=t_star, alpha_star=alpha_star,
                        backend=backend)
    else:
        raise ValueError("algorithm must be 'L' or 'D'")
    return MaxConvResult(
        [-c for c in res.coefficients],
        res.certified,
        res.plan,
        raw_logs=None if res.raw_logs is None else [-r for r in res.raw_logs],
        power_sums=res.power_sums,
    )


def maxconv_float(
    a: Sequence,
    b: Sequence,
    t: float,
    alpha: Optional[float] = None,
    method: str = "fft",
) -> MaxConvResult:
    """Max-plus convolution of real vectors, without rounding.

    With alpha=None this is the Algorithm-1 pipeline: each output
    upper-bounds the true coefficient up to the audited FFT error.  With
    alpha > 1 the difference-quotient pipeline is used instead (lower
    bounds, better constants).  method='direct' replaces the FFT with a
    schoolbook float convolution whose error stays relative to each
    coefficient, which matters when t is large enough that small power
    sums fall below the FFT's absolute error floor.
    """
    if len(a) == 0 or len(b) == 0:
        raise ValueError("inputs must be nonempty")
    if t <= 1:
        raise ValueError("t must be > 1")
    aa = np.asarray(a, dtype=float)
    bb = np.asarray(b, dtype=float)
    logt = math.log(t)
    # Shifted powers cannot overflow, but once the dynamic range passes
    # the subnormal limit every term of the smallest coefficients
    # underflows to zero and the logs are meaningless.
    span = (aa.max() - aa.min()) + (bb.max() - bb.min())
    if span * logt > 1400:
        raise OverflowError(
            "t^range exceeds the double dynamic range; lower t"
        )
    shift = aa.max() + bb.max()

    def _pconv(base_log: float) -> Tuple[np.ndarray, float]:
        x = np.exp(base_log * (aa - aa.max()))
        y = np.exp(base_log * (bb - bb.max()))
        if method == "direct":
            return np.convolve(x, y), 0.0
        return _conv_fft(x, y)

    sums, eps = _pconv(logt)
    floor = np.finfo(float).tiny
    if alpha is None:
        raw = np.log(np.maximum(sums, floor)) / logt + shift
        plan = ConvolutionPlan(Backend.FFT_FLOAT, t, rounding="none",
                               fft_error_bound=eps)
        return MaxConvResult(list(raw), False, plan, raw_logs=list(raw))
    if alpha <= 1:
        raise ValueError("alpha must be > 1")
    logat = math.log(alpha * t)
    sums2, eps2 = _pconv(logat)
    abs1 = np.log(np.maximum(sums, floor)) + shift * logt
    abs2 = np.log(np.maximum(sums2, floor)) + shift * logat
    raw = (abs2 - abs1) / math.log(alpha)
    plan = ConvolutionPlan(Backend.FFT_FLOAT, t, alpha_star=alpha,
                           rounding="none", fft_error_bound=eps + eps2)
    return MaxConvResult(list(raw), False, plan, raw_logs=list(raw))
