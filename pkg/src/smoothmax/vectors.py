"""Input vectors and their exact sort-and-count summaries."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple


@dataclass(frozen=True)
class RealVector:
    """A finite tuple of reals together with an integrality tag.

    ``is_integral`` must agree with the entries: it is true exactly when
    every entry is a mathematical integer.  Use :func:`realvec` to build a
    vector with the tag derived automatically.
    """

    entries: Tuple[float, ...]
    is_integral: bool

    def __post_init__(self):
        if len(self.entries) == 0:
            raise ValueError("vector must have at least one entry")
        for x in self.entries:
            if not math.isfinite(x):
                raise ValueError(f"entries must be finite, got {x!r}")
        integral = all(float(x) == round(x) for x in self.entries)
        if self.is_integral != integral:
            raise ValueError(
                "is_integral flag does not match the entries "
                f"(expected {integral})"
            )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def max(self) -> float:
        return max(self.entries)

    @property
    def min(self) -> float:
        return min(self.entries)


def realvec(values: Sequence[float]) -> RealVector:
    """Build a RealVector, deriving the integrality tag from the data."""
    entries = tuple(float(x) for x in values)
    integral = (
        len(entries) > 0
        and all(math.isfinite(x) for x in entries)
        and all(x == round(x) for x in entries)
    )
    return RealVector(entries, integral)


@dataclass(frozen=True)
class VectorSummary:
    """Exact summary of a vector: the brute-force ground truth.

    ``distinct_desc`` lists the distinct values in strictly decreasing
    order, ``gaps[i] = max - distinct_desc[i]`` (so ``gaps[0] == 0``), and
    ``multiplicities`` maps each distinct value to its count.
    """

    max: float
    min: float
    distinct_count: int
    distinct_desc: Tuple[float, ...]
    multiplicities: Dict[float, int]
    gaps: Tuple[float, ...]

    @property
    def mu_max(self) -> int:
        """Multiplicity of the maximum."""
        return self.multiplicities[self.max]

    @property
    def g2(self) -> float:
        """Gap between the two largest distinct values (0 if constant)."""
        return self.gaps[1] if self.distinct_count >= 2 else 0.0


def summarize(v: RealVector) -> VectorSummary:
    """Exact sort-and-count summary; the oracle every approximation is
    tested against."""
    counts = Counter(v.entries)
    distinct = tuple(sorted(counts, reverse=True))
    m = distinct[0]
    return VectorSummary(
        max=m,
        min=distinct[-1],
        distinct_count=len(distinct),
        distinct_desc=distinct,
        multiplicities=dict(counts),
        gaps=tuple(m - w for w in distinct),
    )
