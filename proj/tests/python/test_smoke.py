import math

import numpy as np
import pytest

import seglab


def test_solve_flat_and_measure():
    field, report = seglab.solve(1e3, n=129)
    assert report["converged"]
    assert report["residual"] <= 1e-10
    values = field.values
    assert values.shape == (2, 129, 129)
    assert values.min() >= 0.0
    iface = field.interface()
    assert iface["is_graph"]
    assert 0.0 < iface["min_sum"] < 1.0
    assert field.frequency((0.0, 0.0), 0.5) < 1.1


def test_field_round_trip(tmp_path):
    y = np.linspace(-1.0, 1.0, 201)
    w = np.broadcast_to(y[:, None], (201, 201))
    field = seglab.Field(np.stack([np.maximum(w, 0), np.maximum(-w, 0)]), -1.0, -1.0, 0.01, 0.0)
    assert abs(field.frequency((0.0, 0.0), 0.5) - 1.0) <= 2e-2
    path = tmp_path / "pair.seg"
    seglab.write_snapshot(path, field)
    back = seglab.read_snapshot(path)
    assert np.array_equal(back.values, field.values)
    assert back.h == field.h


def test_profile_symmetry():
    t, g1, g2 = seglab.profile_1d(10.0, 513)
    assert np.max(np.abs(np.array(g1) - np.array(g2)[::-1])) <= 1e-8
    assert abs(g1[256] - 0.728) < 1e-3


def test_fit_and_errors():
    fit = seglab.fit_power_law([10, 100, 1000], [1, 0.1, 0.01])
    assert math.isclose(fit["exponent"], -1.0, abs_tol=1e-12)
    with pytest.raises(seglab.SeglabError, match="too-few-points"):
        seglab.fit_power_law([1, 2], [1, 2])
    with pytest.raises(ValueError):
        seglab.Field(-np.ones((2, 5, 5)), 0, 0, 0.1, 1.0)


def test_checks_pass():
    assert all(ok for _, ok, _ in seglab.run_checks())
