"""End-to-end acceptance suite.

Each test exercises one headline guarantee at its stated tolerance and
prints a single PASS/FAIL line (through the capture barrier) so the
whole gate is auditable from the test log.
"""

import math
import time

import numpy as np
import pytest

from smoothmax import (
    Backend,
    BoundRequest,
    CurveGrid,
    ExperimentConfig,
    SERVICE_CURVE_FIT,
    bound_D,
    bound_L,
    bound_R,
    certified_max,
    certified_multiplicity,
    combined_g2,
    combined_max,
    contour_max,
    discretize,
    eval_D,
    eval_L,
    eval_R,
    eval_Rk,
    maxconv_D,
    maxconv_L,
    maxconv_float,
    mcsp,
    realvec,
    run_experiment,
    service_bounds,
    stirling_matrix,
    summarize,
)
from smoothmax.approx import _derivative_vector

from conftest import brute_maxplus, brute_minplus_grid

V1 = realvec([1, 2, 3, 4, 5, 6, 7])
V2 = realvec([1, 2, 3, 4, 5, 6, 7, 7, 7, 7, 7])

A = [3, 1, 2, 4, 1, 2]
B = [5, 3, 0, 4]
C_GOLDEN = [8, 6, 7, 9, 7, 7, 8, 5, 6]
# Exact coefficients of the product of the power polynomials at t = 6
# (x^0 term 6^8 = 1679616, x^3 term 6^9 + 6^7 + 6^5 + 6 = 10365414, ...).
ELL_6 = [1679616, 93312, 281448, 10365414, 334404, 329184, 1687398, 7812, 46656]
ELL_2 = [256, 128, 152, 674, 228, 224, 290, 36, 64]


def _report(capsys, num, desc, fn):
    start = time.perf_counter()
    try:
        fn()
    except BaseException:
        with capsys.disabled():
            print(f"FAIL acceptance {num}: {desc}")
        raise
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        print(f"PASS acceptance {num}: {desc} [{elapsed:.2f}s]")


def _random_integral_vectors(count=1000, seed=20240901):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, 101))
        out.append(realvec([int(x) for x in rng.integers(-50, 51, size=n)]))
    return out


def test_acceptance_01_floor_log_golden(capsys):
    def check():
        start = time.perf_counter()
        res = maxconv_L(A, B, t_star=6, backend=Backend.EXACT_INT)
        assert res.coefficients == C_GOLDEN
        assert res.power_sums == ELL_6
        assert time.perf_counter() - start < 1.0
    _report(capsys, 1, "floor-of-log max-convolution golden example", check)


def test_acceptance_02_difference_quotient_golden(capsys):
    def check():
        start = time.perf_counter()
        r1 = maxconv_D(A, B, t_star=6, alpha_star=math.e)
        r2 = maxconv_D(A, B, t_star=2, alpha_star=1.05)
        assert r1.coefficients == C_GOLDEN
        assert r2.coefficients == C_GOLDEN
        exact = maxconv_D(A, B, t_star=2, alpha_star=1.05,
                          backend=Backend.EXACT_INT)
        assert exact.power_sums == ELL_2
        assert time.perf_counter() - start < 1.0
    _report(capsys, 2, "difference-quotient max-convolution golden example",
            check)


def test_acceptance_03_mcsp_worked_example(capsys):
    def check():
        start = time.perf_counter()
        got = mcsp([1, 4, 2, 3, 8, 1, 1, 5, 6, 7, 5])
        assert got == [8, 13, 18, 23, 24, 28, 33, 36, 38, 42, 43]
        assert time.perf_counter() - start < 1.0
    _report(capsys, 3, "maximum consecutive subsums worked example", check)


def test_acceptance_04_certified_recovery_suite(capsys):
    def check():
        start = time.perf_counter()
        for v in _random_integral_vectors():
            s = summarize(v)
            assert certified_max(v) == int(s.max)
            assert certified_multiplicity(v) == (int(s.max), s.mu_max)
        assert time.perf_counter() - start < 10.0
    _report(capsys, 4, "certified max/multiplicity on 1000 random vectors",
            check)


def test_acceptance_05_bound_validity_suite(capsys):
    def check():
        start = time.perf_counter()
        eps = 1e-9
        for v in _random_integral_vectors():
            s = summarize(v)
            req = BoundRequest(n=len(v), mu_M=s.mu_max)
            t = bound_L(req).t_min + eps
            assert abs(eval_L(v, t).value - s.max) < 1
            t = bound_R(req).t_min + eps
            assert abs(s.max - eval_R(v, t).value) < 1
            for alpha in (1.5, 2.0, math.e):
                req_a = BoundRequest(n=len(v), mu_M=s.mu_max, alpha=alpha)
                t = bound_D(req_a).t_min + eps
                assert abs(s.max - eval_D(v, t, alpha).value) < 1
        # Pinned threshold checks for the two reference vectors.
        assert 7 <= eval_L(V1, 3.2).value < 8
        assert 7 <= eval_L(V2, 6.01).value < 8
        assert 6 < eval_R(V2, 2.72).value <= 7
        assert time.perf_counter() - start < 10.0
    _report(capsys, 5, "recovery bounds valid on 1000 random vectors", check)


def test_acceptance_06_higher_order_suite(capsys):
    def check():
        start = time.perf_counter()
        for v in (V1, V2):
            for t in (5.0, 10.0, 50.0):
                deriv = _derivative_vector(v, math.log(t), 5)
                matrix = stirling_matrix(5)
                for k in range(1, 6):
                    want = float(sum(
                        float(c) * d for c, d in zip(matrix[k - 1], deriv)
                    ))
                    got = eval_Rk(v, t, k).value
                    assert abs(got - want) < 1e-8
        assert abs(combined_g2(V1, 100.0) - 1.0) < 0.05
        assert abs(combined_g2(V2, 100.0) - 1.0) < 0.05
        for t in (10.0, 20.0, 40.0):
            assert abs(7 - combined_max(V1, t)) < abs(7 - eval_R(V1, t).value)
        assert time.perf_counter() - start < 1.0
    _report(capsys, 6, "higher-order ratio identities and acceleration",
            check)


def test_acceptance_07_maxconv_oracle_equivalence(capsys):
    def check():
        start = time.perf_counter()
        rng = np.random.default_rng(7)
        for _ in range(200):
            la = int(rng.integers(1, 65))
            lb = int(rng.integers(1, 65))
            a = [int(x) for x in rng.integers(-30, 31, size=la)]
            b = [int(x) for x in rng.integers(-30, 31, size=lb)]
            want = brute_maxplus(a, b)
            assert maxconv_L(a, b).coefficients == want
            assert maxconv_D(a, b).coefficients == want
        assert time.perf_counter() - start < 30.0
    _report(capsys, 7, "200 random pairs match the quadratic oracle", check)


def test_acceptance_08_service_curves(capsys):
    def check():
        start = time.perf_counter()
        for N in (10, 100):
            R = discretize(SERVICE_CURVE_FIT, 6.0, N)
            beta = CurveGrid(R.times, R.times)
            gamma = CurveGrid(R.times,
                              tuple(max(0.0, t - 3.0) for t in R.times))
            lower, upper = service_bounds(R, beta, gamma)
            for got, xs, ys in (
                (lower.values, R.values, beta.values),
                (upper.values, R.values, gamma.values),
            ):
                exact = brute_minplus_grid(xs, ys)
                err = np.asarray(got) - exact
                assert np.max(np.abs(err)) <= 1e-2
                assert err.min() >= -1e-9

        # Quasi-linear pipeline vs the quadratic oracle: the speedup
        # ratio must improve monotonically with size.
        rng = np.random.default_rng(11)
        ratios = []
        for N in (100, 1000, 5000):
            x = rng.uniform(0.0, 1.0, N)
            y = rng.uniform(0.0, 1.0, N)
            best_fast = best_brute = float("inf")
            for _ in range(3):
                t0 = time.perf_counter()
                maxconv_float(list(-x), list(-y), t=math.e, method="fft")
                best_fast = min(best_fast, time.perf_counter() - t0)
                t0 = time.perf_counter()
                brute_minplus_grid(np.concatenate([x, np.full(N - 1, np.inf)]),
                                   np.concatenate([y, np.full(N - 1, np.inf)]))
                best_brute = min(best_brute, time.perf_counter() - t0)
            ratios.append(best_brute / best_fast)
        assert ratios[0] < ratios[1] < ratios[2]
        assert time.perf_counter() - start < 60.0
    _report(capsys, 8, "service-curve accuracy and quasi-linear speedup",
            check)


def test_acceptance_09_experiment_harness(capsys):
    def check():
        start = time.perf_counter()
        cfg = ExperimentConfig(kind="integer", M=50, n_max=50, reps=10, seed=0)
        table = run_experiment(cfg)
        assert table == run_experiment(cfg)  # deterministic
        stats = []
        for line in table.strip().splitlines()[1:]:
            n, mu, stat = line.split(",")
            if int(mu) >= int(n) / 2:
                stats.append(float(stat))
        assert stats
        assert float(np.mean(stats)) > 0.0
        assert time.perf_counter() - start < 120.0
    _report(capsys, 9,
            "deterministic heatmap; ratio beats LogSumExp at high "
            "multiplicity", check)


def test_acceptance_10_contour_estimator(capsys):
    def check():
        start = time.perf_counter()
        assert contour_max(V1, k=1, r=0.1, N=64) == pytest.approx(7.0, abs=1e-6)
        assert contour_max(V2, k=1, r=0.1, N=64) == pytest.approx(7.0, abs=1e-6)
        assert time.perf_counter() - start < 1.0
    _report(capsys, 10, "contour estimator recovers the maximum", check)
