"""Smoke test for the compiled extension; run directly with PYTHONPATH set to
the directory containing _core."""
import json
import math

try:
    from apsumma import _core as m
except ImportError:
    import _core as m


def test_basic():
    f = m.APFunction([m.Term(0.0), m.Term(1.0, 0.5, 0.5)], 1.0)
    assert abs(f(math.pi).real + 1.0) < 1e-12
    assert abs(f.phi(0.0, math.pi).real + 4.0) < 1e-12
    assert abs(m.exact_coefficient(f, -1.0) - 0.5) < 1e-15
    assert m.check_omega_membership(f, 1.0)

    value, tail, converged = m.kernel_threshold_estimate(f, 0.0, 2)
    exact = m.threshold_partial_sum(f, 0.0, 1.0)
    assert abs(value - exact) <= 1e-6 + tail
    assert converged

    assert abs(m.strong_mean(f, 0.0, "cesaro", 3, 2.0) - 1 / math.sqrt(2)) < 1e-12
    assert abs(m.geometric_sine_sum_closed(0.5, math.pi / 2, math.pi / 2) - 1) < 1e-12

    reps = m.classify("cesaro", 5)
    assert [r["member"] for r in reps] == [True] * 4

    grid, values = m.fit_modulus(f, 0.0)
    assert len(grid) == len(values) and values[-1] > 0

    g = m.APFunction.from_json(f.to_json())
    assert g.alpha == f.alpha

    corpus = m.fixture_corpus(1, 8)
    assert len(corpus) == 8

    cfg = {
        "functions": [dict(json.loads(f.to_json()), id="cos")],
        "rows": [{"family": "cesaro", "n_lo": 2, "n_hi": 4}],
        "x_grid": [0.0, 1.0],
        "n_lo": 2,
        "n_hi": 4,
        "inequalities": ["prop4", "thm6"],
    }
    out = m.sweep(json.dumps(cfg))
    assert "prop4" in out["csv"] and "thm6" in out["csv"]


if __name__ == "__main__":
    test_basic()
    print("smoke ok")
