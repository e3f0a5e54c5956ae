"""Amoeba and tropical-curve data for the graph of a power sum.

The curve in question is the graph of t -> sum_i t^(v_i); its amoeba's
upper boundary is the graph of u -> log F_v(e^u), and its unbounded
directions are the outer normal rays of a triangle determined by max(v)
and min(v).  Output is plain data (points and lines) for external
plotting tools; no images are produced here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

from .approx import eval_Lcal
from .vectors import RealVector, realvec, summarize


@dataclass(frozen=True)
class Line2D:
    kind: str          # "slope_intercept" or "vertical"
    slope: float       # unused when vertical
    intercept: float   # s-intercept, or u-position when vertical
    label: str         # "max_tentacle" or "min_tentacle"


@dataclass(frozen=True)
class NewtonPolygon:
    """Lattice triangle (max, 0), (min, 0), (0, 1); degenerate when the
    vector is constant (the two base vertices coincide)."""

    vertices: Tuple[Tuple[int, int], ...]
    degenerate: bool


def _require_integral(v: RealVector) -> None:
    if not v.is_integral:
        raise ValueError("tropical data requires an integral vector")


def newton_polygon(v: RealVector) -> NewtonPolygon:
    _require_integral(v)
    m_hi = int(round(v.max))
    m_lo = int(round(v.min))
    if m_hi == m_lo:
        return NewtonPolygon(((m_hi, 0), (0, 1)), degenerate=True)
    return NewtonPolygon(((m_hi, 0), (m_lo, 0), (0, 1)), degenerate=False)


def tentacle_lines(v: RealVector) -> Tuple[Line2D, Line2D]:
    """The two non-vertical tentacle lines of the amoeba: slope and
    intercept encode the extreme values and their multiplicities."""
    _require_integral(v)
    s = summarize(v)
    max_line = Line2D("slope_intercept", s.max, math.log(s.multiplicities[s.max]),
                      "max_tentacle")
    min_line = Line2D("slope_intercept", s.min, math.log(s.multiplicities[s.min]),
                      "min_tentacle")
    return max_line, min_line


def amoeba_upper_boundary(
    v: RealVector, u_min: float, u_max: float, samples: int
) -> List[Tuple[float, float]]:
    """Points (u, log F_v(e^u)) sampled uniformly on [u_min, u_max].

    For u <= 0 the reflection log F_v(e^u) = log F_{-v}(e^{-u}) keeps the
    evaluation max-shifted.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    if not u_min < u_max:
        raise ValueError("u_min must be < u_max")
    neg = realvec([-x for x in v.entries])
    points = []
    for i in range(samples):
        u = u_min + (u_max - u_min) * i / (samples - 1)
        if u > 0:
            s = eval_Lcal(v, u)
        elif u < 0:
            s = eval_Lcal(neg, -u)
        else:
            s = math.log(len(v))
        points.append((u, s))
    return points


def trop_rays(v: RealVector) -> List[Tuple[int, int]]:
    """Primitive outer normal directions of the Newton triangle."""
    _require_integral(v)
    m_hi = int(round(v.max))
    m_lo = int(round(v.min))
    if m_hi == m_lo:
        raise ValueError("constant vector: the Newton polygon degenerates")
    rays = [(0, -1), (1, m_hi), (-1, -m_lo)]
    return [_primitive(d) for d in rays]


def _primitive(d: Tuple[int, int]) -> Tuple[int, int]:
    g = math.gcd(abs(d[0]), abs(d[1]))
    return (d[0] // g, d[1] // g)
