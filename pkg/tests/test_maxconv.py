import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smoothmax import (
    Backend,
    CertificationError,
    conv,
    maxconv_D,
    maxconv_L,
    maxconv_float,
    minconv,
)

from conftest import brute_maxplus, brute_minplus

A = [3, 1, 2, 4, 1, 2]
B = [5, 3, 0, 4]
C_GOLDEN = [8, 6, 7, 9, 7, 7, 8, 5, 6]

# Exact power-sum coefficients of the product polynomial at t = 6:
# e.g. the x^0 coefficient is 6^(3+5) = 1679616 and the x^3 coefficient
# is 6^9 + 6^7 + 6^5 + 6 = 10365414.
ELL_6 = [1679616, 93312, 281448, 10365414, 334404, 329184, 1687398, 7812, 46656]
# Same product evaluated at t = 2.
ELL_2 = [256, 128, 152, 674, 228, 224, 290, 36, 64]


def test_conv_exact_matches_numpy():
    x = [3, 1, 4, 1, 5]
    y = [2, 7, 1]
    assert conv(x, y) == list(np.convolve(x, y))


def test_conv_exact_big_integers():
    x = [10**30, 1]
    y = [10**30, 2]
    assert conv(x, y) == [10**60, 3 * 10**30, 2]


def test_floor_log_pipeline_golden():
    res = maxconv_L(A, B, t_star=6, backend=Backend.EXACT_INT)
    assert res.coefficients == C_GOLDEN
    assert res.certified
    assert res.power_sums == ELL_6


def test_floor_log_pipeline_default_t():
    res = maxconv_L(A, B)
    assert res.coefficients == C_GOLDEN
    assert res.certified


def test_difference_quotient_pipeline_golden():
    r1 = maxconv_D(A, B, t_star=6, alpha_star=math.e)
    r2 = maxconv_D(A, B, t_star=2, alpha_star=1.05)
    assert r1.coefficients == C_GOLDEN
    assert r2.coefficients == C_GOLDEN


def test_difference_quotient_exact_power_sums():
    res = maxconv_D(A, B, t_star=2, alpha_star=1.05, backend=Backend.EXACT_INT)
    assert res.coefficients == C_GOLDEN
    assert res.power_sums == ELL_2


def test_result_length_invariant():
    res = maxconv_L([1], [2, 3, 4])
    assert len(res.coefficients) == 1 + 3 - 1


def test_negative_entries():
    a = [-5, 0, -3]
    b = [-2, -8]
    assert maxconv_L(a, b).coefficients == brute_maxplus(a, b)
    assert maxconv_D(a, b).coefficients == brute_maxplus(a, b)


def test_rejects_non_integer_input():
    with pytest.raises(ValueError):
        maxconv_L([1.5, 2], [0])


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        maxconv_L(A, B, t_star=1.0)
    with pytest.raises(ValueError):
        maxconv_D(A, B, alpha_star=1.0)


def test_fft_only_backend_raises_when_uncertifiable():
    # t = 1 + 1e-9 makes the rounding gap astronomically smaller than
    # any float error bound, so the audit cannot pass.
    with pytest.raises((CertificationError, OverflowError, ValueError)):
        maxconv_L(list(range(50)), list(range(50)), t_star=1 + 1e-9,
                  backend=Backend.FFT_FLOAT)


def test_exact_retry_on_fractional_t():
    res = maxconv_L(A, B, t_star=6.5, backend=Backend.EXACT_INT)
    assert res.coefficients == C_GOLDEN


def test_minconv_small_example():
    assert minconv([0, 1], [0, 2]).coefficients == [0, 1, 3]


def test_minconv_matches_oracle_both_algorithms():
    a = [4, 0, 7, 2]
    b = [1, 5, 3]
    want = brute_minplus(a, b)
    assert minconv(a, b, algorithm="L").coefficients == want
    assert minconv(a, b, algorithm="D").coefficients == want


def test_minconv_rejects_unknown_algorithm():
    with pytest.raises(ValueError):
        minconv([0], [0], algorithm="X")


def test_float_pipeline_upper_bounds():
    rng = np.random.default_rng(7)
    a = rng.uniform(-1, 1, 32)
    b = rng.uniform(-1, 1, 32)
    res = maxconv_float(list(a), list(b), t=50.0)
    want = brute_maxplus(list(a), list(b))
    err = res.plan.fft_error_bound
    for got, exact in zip(res.coefficients, want):
        # One power-sum log upper-bounds the max-plus value by at most
        # log(#terms)/log(t), and lower-bounds it up to the FFT audit.
        assert exact - 1e-9 - err <= got <= exact + math.log(32) / math.log(50.0) + err


def test_float_pipeline_direct_equals_fft_at_moderate_t():
    rng = np.random.default_rng(8)
    a = list(rng.uniform(0, 3, 16))
    b = list(rng.uniform(0, 3, 16))
    f = maxconv_float(a, b, t=20.0, method="fft").coefficients
    d = maxconv_float(a, b, t=20.0, method="direct").coefficients
    assert np.allclose(f, d, atol=1e-9)


def test_float_pipeline_range_guard():
    with pytest.raises(OverflowError):
        maxconv_float([0.0, 2000.0], [0.0], t=math.exp(10))


@given(
    st.lists(st.integers(min_value=-30, max_value=30), min_size=1, max_size=64),
    st.lists(st.integers(min_value=-30, max_value=30), min_size=1, max_size=64),
)
@settings(max_examples=120, deadline=None)
def test_oracle_equivalence_random(a, b):
    want = brute_maxplus(a, b)
    assert maxconv_L(a, b).coefficients == want
    assert maxconv_D(a, b).coefficients == want
