"""Maximum consecutive subsums and network-calculus service curves."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .maxconv import Backend, maxconv_L, maxconv_float

# Polynomial fit (ascending coefficients) of the input-rate curve used by
# the service-curve recreation; the constant term is zero.
SERVICE_CURVE_FIT: Tuple[float, ...] = (
    0.0, 1.6738, -0.7492, -0.08694, 0.1085, -0.01101, -0.001579, 0.0002085,
)


@dataclass(frozen=True)
class CurveGrid:
    """Uniformly sampled function values on [0, T_max]."""

    times: Tuple[float, ...]
    values: Tuple[float, ...]
    monotone: bool = False

    def __post_init__(self):
        if len(self.times) < 2:
            raise ValueError("grid needs at least 2 samples")
        if len(self.times) != len(self.values):
            raise ValueError("times and values must have equal length")
        if self.times[0] != 0.0:
            raise ValueError("grid must start at T = 0")
        h = self.times[1] - self.times[0]
        if h <= 0:
            raise ValueError("grid must be increasing")
        for i in range(1, len(self.times)):
            step = self.times[i] - self.times[i - 1]
            if abs(step - h) > 1e-9 * max(abs(h), 1.0):
                raise ValueError("grid spacing must be uniform")
        if self.monotone:
            for a, b in zip(self.values, self.values[1:]):
                if b < a:
                    raise ValueError("values are not monotone nondecreasing")

    @property
    def spacing(self) -> float:
        return self.times[1] - self.times[0]

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["T", "value"])
            for t, v in zip(self.times, self.values):
                w.writerow([repr(t), repr(v)])

    @classmethod
    def from_csv(cls, path, monotone: bool = False) -> "CurveGrid":
        times: List[float] = []
        values: List[float] = []
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            if [h.strip() for h in header[:2]] != ["T", "value"]:
                raise ValueError("curve CSV must have header 'T,value'")
            for row in reader:
                if not row:
                    continue
                times.append(float(row[0]))
                values.append(float(row[1]))
        return cls(tuple(times), tuple(values), monotone=monotone)


def discretize(coefficients: Sequence[float], T_max: float, N: int) -> CurveGrid:
    """Sample a polynomial (ascending coefficients) at N equally spaced
    points on [0, T_max] using Horner evaluation."""
    if N < 2:
        raise ValueError("N must be >= 2")
    if T_max <= 0:
        raise ValueError("T_max must be positive")
    times = [k * T_max / (N - 1) for k in range(N)]
    values = []
    for t in times:
        acc = 0.0
        for c in reversed(coefficients):
            acc = acc * t + c
        values.append(acc)
    return CurveGrid(tuple(times), tuple(values))


def mcsp(
    v: Sequence[float],
    include_full_sum: bool = True,
    t: Optional[float] = None,
) -> List:
    """Largest sum of k consecutive entries of v, for k = 1..n.

    Reduces to a max-plus convolution of the prefix-sum vectors
    a_k = -(v_1 + ... + v_k) and its reversed negation.  Integral input
    goes through the certified integer pipeline and is exact; float
    input goes through the uncertified float pipeline at the given t.
    The k = n entry (the full sum) is appended directly from the prefix
    sums when ``include_full_sum`` is set.
    """
    if len(v) == 0:
        raise ValueError("mcsp requires a nonempty vector")
    n = len(v)
    prefix = [0.0]
    for x in v:
        prefix.append(prefix[-1] + x)
    integral = all(float(x) == round(x) for x in v)
    # A window sum is p_{s+k} - p_s, so the largest k-sum is the
    # (n - k)-th max-plus convolution coefficient of (-p_0, ..., -p_n)
    # with (p_n, ..., p_0): every index pair there has total weight
    # n - k and every window of length k appears exactly once.
    a = [-p for p in prefix]
    b = list(reversed(prefix))
    if integral:
        res = maxconv_L([int(round(x)) for x in a],
                        [int(round(x)) for x in b])
        c = res.coefficients
    else:
        if t is None:
            # Push t as high as the double exponent budget allows.
            span = (max(a) - min(a)) + (max(b) - min(b))
            t = math.exp(min(40.0, 600.0 / max(span, 1e-9)))
        res = maxconv_float(a, b, t=t, method="direct")
        c = res.coefficients
    last = n + 1 if include_full_sum else n
    out: List = [c[n - k] for k in range(1, last)]
    if include_full_sum:
        # The full sum needs no convolution; use the exact prefix value.
        out[-1] = int(round(prefix[-1])) if integral else prefix[-1]
    return out


def _log_power_conv(z: np.ndarray, w: np.ndarray, logt: float) -> np.ndarray:
    """log of the ordinary convolution of t^z and t^w, one coefficient at
    a time with a per-coefficient shift, so no coefficient is lost to the
    limited dynamic range of a double."""
    nz, nw = len(z), len(w)
    out = np.empty(nz + nw - 1)
    for k in range(nz + nw - 1):
        lo = max(0, k - nw + 1)
        hi = min(nz - 1, k)
        wseg = w[k - lo:k - hi - 1:-1] if k - hi - 1 >= 0 else w[k - lo::-1]
        e = logt * (z[lo:hi + 1] + wseg)
        m = e.max()
        out[k] = m + math.log(np.exp(e - m).sum())
    return out


def _min_conv_direct(
    x: np.ndarray, y: np.ndarray, t_eff: float, alpha: float
) -> np.ndarray:
    """Min-plus convolution estimate via the difference quotient of two
    log-domain convolutions of negated power vectors.

    t_eff > 1 is the base after negation (equivalent to evaluating the
    original power sums at 1/t_eff -> 0+).
    """
    logt = math.log(t_eff)
    logat = math.log(alpha * t_eff)
    nx = -x
    ny = -y
    abs1 = _log_power_conv(nx, ny, logt)
    abs2 = _log_power_conv(nx, ny, logat)
    # max of the negated values, then negate back to get the min.
    return -(abs2 - abs1) / math.log(alpha)


def service_bounds(
    R: CurveGrid,
    beta: CurveGrid,
    gamma: CurveGrid,
    t_eff: Optional[float] = None,
    alpha: float = 1.01,
) -> Tuple[CurveGrid, CurveGrid]:
    """Lower and upper service bounds on the output flow.

    Both bounds are min-plus convolutions of the sampled input rate with
    the sampled service curves, restricted to the input grid.  The
    default evaluation point log(t_eff) = 100 * log(N - 1) keeps the
    double-precision difference quotient well under 1e-2 absolute error
    on desk-scale grids (the quotient's error decays like t_eff to the
    power of minus the spacing between competing sums, so small grids
    need a large t_eff).
    """
    for other in (beta, gamma):
        if R.times != other.times:
            raise ValueError("curve grids must share the same time samples")
    n = len(R.times)
    if t_eff is None:
        t_eff = math.exp(min(100.0 * math.log(n - 1), 700.0)) if n > 2 else math.e
    rv = np.asarray(R.values, dtype=float)
    lower = _min_conv_direct(rv, np.asarray(beta.values, float), t_eff, alpha)[:n]
    upper = _min_conv_direct(rv, np.asarray(gamma.values, float), t_eff, alpha)[:n]
    return (
        CurveGrid(R.times, tuple(float(x) for x in lower)),
        CurveGrid(R.times, tuple(float(x) for x in upper)),
    )
