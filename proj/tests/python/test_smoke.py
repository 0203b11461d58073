import json
import math

import pytest

import fmean


def test_point_mean():
    f = fmean.MeanFunction.make("log")
    assert fmean.f_mean_points(f, [[1.0], [4.0]]) == pytest.approx([2.0])
    assert f.label() == "log"
    assert "log" in repr(f)


def test_catalog_and_errors():
    assert len(fmean.mean_function_names()) == 8
    with pytest.raises(ValueError):
        fmean.MeanFunction.make("median")
    f = fmean.MeanFunction.make("log")
    with pytest.raises(ValueError):
        f.value(-1.0)
    with pytest.raises(ArithmeticError):
        fmean.MeanFunction.make("cara", [1.0]).invert(1.0)


def test_conditional_expectation():
    f = fmean.MeanFunction.make("power", [0.5])
    space = fmean.FiniteProbSpace.uniform(4)
    X = fmean.RandomVariable([1.0, 4.0, 9.0, 16.0])
    G = fmean.Partition(4, [[0, 1], [2, 3]])
    pred = fmean.f_cond_expectation(f, space, X, G)
    assert [pred[i] for i in range(4)] == pytest.approx([2.25, 2.25, 12.25, 12.25])


def test_martingale():
    u = fmean.MeanFunction.make("log")
    space = fmean.FiniteProbSpace.uniform(4)
    F = fmean.Filtration(
        [fmean.Partition(4, [[0, 1], [2, 3]]), fmean.Partition.singletons(4)]
    )
    X = fmean.RandomVariable([1.0, 4.0, 2.0, 8.0])
    report = fmean.u_martingale_check(u, space, F, X)
    assert report.passed
    assert report.initial_value == pytest.approx(report.ce)


def test_exit_time_worker_invariance():
    u = fmean.MeanFunction.make("log")
    chain = fmean.MarkovChainModel([[0.9, 0.1], [0.2, 0.8]], [1.0, 4.0], 0)
    one = fmean.exit_time_analysis(u, chain, 5, 2.0, 5, 20000, 7, 1)
    four = fmean.exit_time_analysis(u, chain, 5, 2.0, 5, 20000, 7, 4)
    assert one.agree
    assert one.mc_prob == four.mc_prob
    assert one.exact_prob == four.exact_prob


def test_sampling_determinism():
    space = fmean.FiniteProbSpace([0.2, 0.3, 0.5])
    X = fmean.RandomVariable([1.0, 2.0, 3.0])
    a = fmean.sample(space, X, 11, 32)
    b = fmean.sample(space, X, 11, 32)
    assert a == b
    assert set(a) <= {1.0, 2.0, 3.0}
    f = fmean.MeanFunction.make("log")
    assert fmean.empirical_f_mean(f, [1.0, 4.0, 16.0, 64.0]) == pytest.approx(8.0)


def test_run_scenario_json_round_trip():
    config = {
        "command": "mean",
        "mean_function": {"name": "log", "params": []},
        "points": [1.0, 4.0],
    }
    out = json.loads(fmean.run_scenario_json(json.dumps(config)))
    assert out["result"]["mean"][0] == pytest.approx(2.0)
    again = json.loads(fmean.run_scenario_json(json.dumps(out["config"])))
    assert again == out


def test_seed_override():
    config = {
        "command": "estimate",
        "mean_function": {"name": "log", "params": []},
        "space": {"probs": [0.5, 0.5]},
        "variables": {"X": [1.0, 4.0]},
        "options": {"n": 500, "seed": 1},
    }
    out = json.loads(fmean.run_scenario_json(json.dumps(config), seed=99))
    assert out["config"]["options"]["seed"] == 99
    assert abs(out["result"]["estimate"] - 2.0) < 0.2


def test_normal_cdf_helper():
    assert fmean.standard_normal_cdf(0.0) == pytest.approx(0.5)
    assert fmean.standard_normal_cdf(1.96) == pytest.approx(0.975, abs=1e-3)
    assert math.isclose(
        fmean.ks_statistic_vs_normal([-1.0, -0.3, 0.0, 0.4, 1.1]), 0.2, abs_tol=0.2
    )
