import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smoothmax import ExperimentConfig, find_tstar, realvec, run_experiment
from smoothmax.experiments import TStarRecord

from conftest import integral_vectors

V2 = realvec([1, 2, 3, 4, 5, 6, 7, 7, 7, 7, 7])


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(kind="bogus")
    with pytest.raises(ValueError):
        ExperimentConfig(kind="integer", reps=0)
    with pytest.raises(ValueError):
        ExperimentConfig(kind="integer", n_max=0)
    with pytest.raises(ValueError):
        ExperimentConfig(kind="integer", M=1)
    with pytest.raises(ValueError):
        ExperimentConfig(kind="uniform", delta_rule="nope")


def test_find_tstar_certifies_its_own_output():
    for method in ("L", "R"):
        t = find_tstar(V2, method, 1.0)
        assert t >= 1.0
        # Error at the returned point is below the target.
        from smoothmax import eval_L, eval_R
        f = eval_L if method == "L" else eval_R
        assert abs(f(V2, t).value - 7) < 1.0


def test_find_tstar_guarantee_scale():
    # The L recovery guarantee for this vector holds for every t > 6;
    # the first certifying t can only be smaller.
    assert find_tstar(V2, "L", 1.0) <= 6.0


def test_find_tstar_rejects_bad_delta():
    with pytest.raises(ValueError):
        find_tstar(V2, "L", 0.0)
    with pytest.raises(ValueError):
        find_tstar(V2, "X", 1.0)


def test_record_diff():
    r = TStarRecord(n=5, mu=2, t_star_L=4.0, t_star_R=2.5)
    assert r.diff == pytest.approx(1.5)


@given(integral_vectors(max_n=20, lo=0, hi=20),
       st.sampled_from(["L", "R"]),
       st.floats(min_value=0.05, max_value=2.0))
@settings(max_examples=40, deadline=None)
def test_find_tstar_always_above_one(v, method, delta):
    assert find_tstar(v, method, delta) >= 1.0


def test_integer_experiment_deterministic_and_formatted():
    cfg = ExperimentConfig(kind="integer", M=10, n_max=6, reps=2, seed=3)
    a = run_experiment(cfg)
    b = run_experiment(cfg)
    assert a == b
    lines = a.strip().splitlines()
    assert lines[0] == "n,mu,statistic"
    # One row per (n, mu) cell with mu <= n.
    assert len(lines) - 1 == sum(n for n in range(1, 7))
    n, mu, stat = lines[1].split(",")
    assert (int(n), int(mu)) == (1, 1)
    float(stat)


def test_integer_experiment_seed_changes_output():
    base = ExperimentConfig(kind="integer", M=10, n_max=6, reps=2, seed=3)
    other = ExperimentConfig(kind="integer", M=10, n_max=6, reps=2, seed=4)
    assert run_experiment(base) != run_experiment(other)


def test_uniform_experiment_runs():
    cfg = ExperimentConfig(kind="uniform", n_max=5, reps=2, seed=0,
                           delta_rule="one_hundredth")
    lines = run_experiment(cfg).strip().splitlines()
    assert lines[0] == "n,mu,statistic"
    for line in lines[1:]:
        assert math.isfinite(float(line.split(",")[2]))


def test_cluster_experiment_runs():
    cfg = ExperimentConfig(kind="cluster", reps=2, seed=1,
                           g_values=(0.25, 1.0), eps_values=(0.01, 0.25))
    lines = run_experiment(cfg).strip().splitlines()
    assert lines[0] == "g,eps,mean_error,successes"
    assert len(lines) - 1 == 4
    for line in lines[1:]:
        g, eps, err, succ = line.split(",")
        assert float(err) >= 0
        assert 0 <= int(succ) <= 2
