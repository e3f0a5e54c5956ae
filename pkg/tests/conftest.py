import numpy as np
from hypothesis import strategies as st

from smoothmax import realvec


def integral_vectors(max_n=30, lo=-50, hi=50):
    """Strategy producing integral RealVectors."""
    return st.lists(
        st.integers(min_value=lo, max_value=hi), min_size=1, max_size=max_n
    ).map(realvec)


def float_vectors(max_n=30, lo=-20.0, hi=20.0):
    return st.lists(
        st.floats(min_value=lo, max_value=hi, allow_nan=False,
                  allow_infinity=False),
        min_size=1, max_size=max_n,
    ).map(realvec)


def brute_maxplus(a, b):
    """O(n*m) max-plus convolution oracle."""
    n, m = len(a), len(b)
    return [
        max(a[i] + b[k - i] for i in range(max(0, k - m + 1), min(n - 1, k) + 1))
        for k in range(n + m - 1)
    ]


def brute_minplus(a, b):
    return [-c for c in brute_maxplus([-x for x in a], [-y for y in b])]


def brute_minplus_grid(x, y):
    """Vectorized O(n^2) min-plus oracle for equal-grid curves."""
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    n = len(x)
    out = np.empty(n)
    for k in range(n):
        out[k] = np.min(x[: k + 1] + y[k::-1])
    return out
