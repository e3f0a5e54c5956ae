"""Smooth approximations of the maximum function and their applications.

The library evaluates the LogSumExp, ratio, difference-quotient and p-norm
approximations of max(v) in a numerically safe (shift-normalized) way,
provides sufficient t-bounds under which rounding the approximations
provably recovers integer data (maximum, multiplicity, gap, second value),
and uses those bounds to drive a quasi-linear max-convolution with
applications to maximum consecutive subsums and network-calculus service
curves.  A small tropical-geometry layer emits amoeba boundary and
tentacle-line data for the same vectors.
"""

from .vectors import RealVector, VectorSummary, realvec, summarize
from .approx import (
    ApproxResult,
    contour_max,
    eval_D,
    eval_L,
    eval_Lcal,
    eval_R,
    eval_Rk,
    eval_pnorm,
)
from .bounds import (
    BoundRequest,
    BoundResult,
    DegenerateDenominator,
    bound_D,
    bound_L,
    bound_R,
    bound_pnorm,
    certified_max,
    certified_multiplicity,
    combined_g2,
    combined_max,
    second_value,
    stirling_matrix,
)
from .maxconv import (
    Backend,
    CertificationError,
    ConvolutionPlan,
    MaxConvResult,
    conv,
    maxconv_D,
    maxconv_L,
    maxconv_float,
    minconv,
)
from .applications import (
    CurveGrid,
    SERVICE_CURVE_FIT,
    discretize,
    mcsp,
    service_bounds,
)
from .tropical import (
    Line2D,
    NewtonPolygon,
    amoeba_upper_boundary,
    newton_polygon,
    tentacle_lines,
    trop_rays,
)
from .experiments import ExperimentConfig, find_tstar, run_experiment

__all__ = [
    "ApproxResult",
    "Backend",
    "BoundRequest",
    "BoundResult",
    "CertificationError",
    "ConvolutionPlan",
    "CurveGrid",
    "DegenerateDenominator",
    "ExperimentConfig",
    "Line2D",
    "MaxConvResult",
    "NewtonPolygon",
    "RealVector",
    "SERVICE_CURVE_FIT",
    "VectorSummary",
    "amoeba_upper_boundary",
    "bound_D",
    "bound_L",
    "bound_R",
    "bound_pnorm",
    "certified_max",
    "certified_multiplicity",
    "combined_g2",
    "combined_max",
    "contour_max",
    "conv",
    "discretize",
    "eval_D",
    "eval_L",
    "eval_Lcal",
    "eval_R",
    "eval_Rk",
    "eval_pnorm",
    "find_tstar",
    "maxconv_D",
    "maxconv_L",
    "maxconv_float",
    "mcsp",
    "minconv",
    "newton_polygon",
    "realvec",
    "run_experiment",
    "second_value",
    "service_bounds",
    "stirling_matrix",
    "summarize",
    "tentacle_lines",
    "trop_rays",
]
