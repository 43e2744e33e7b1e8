import numpy as np
import pytest
from scipy import integrate

from cbe.barriers import BesselBridgeSpec, bessel_bridge_density, bessel_bridge_cdf, sample_bessel_bridge, \
    bridge_grid, bridge_positive_prob, bridge_crossing_prob, fit_tail_constant, log_sinh
from cbe.errors import ArgumentError, DomainError
from cbe.random import new_stream

from ..common.montecarlo import within_se


@pytest.mark.parametrize("spec", [BesselBridgeSpec(0.0, 1.0, 0.5, 0.5), BesselBridgeSpec(0.0, 4.0, 0.2, 1.5),
                                  BesselBridgeSpec(1.0, 11.0, 2.0, 0.1)])
def test_density_integrates_to_one(spec):
    t = 0.5 * (spec.t0 + spec.t1)
    total, _ = integrate.quad(lambda u: bessel_bridge_density(spec, t, u), 0.0, np.inf, limit=400)
    assert total == pytest.approx(1.0, abs=1e-8)
    assert bessel_bridge_cdf(spec, t, 50.0) == pytest.approx(1.0, abs=1e-8)


def test_density_domain():
    spec = BesselBridgeSpec(0.0, 1.0, 0.5, 0.5)
    with pytest.raises(DomainError):
        bessel_bridge_density(spec, 1.0, 0.3)
    with pytest.raises(DomainError):
        bessel_bridge_density(spec, 0.5, -0.1)
    with pytest.raises(ArgumentError):
        BesselBridgeSpec(0.0, 1.0, 0.0, 0.5)
    with pytest.raises(ArgumentError):
        BesselBridgeSpec(1.0, 1.0, 0.5, 0.5)


def test_log_sinh_is_stable():
    assert log_sinh(1000.0) == pytest.approx(1000.0 - np.log(2.0))
    assert log_sinh(0.5) == pytest.approx(np.log(np.sinh(0.5)))
    assert log_sinh(0.0) == -np.inf


def _midpoint_mean(spec):
    t = 0.5 * (spec.t0 + spec.t1)
    mean, _ = integrate.quad(lambda u: u * bessel_bridge_density(spec, t, u), 0.0, np.inf, limit=400)
    return t, mean


def test_exact_sampler_matches_density():
    spec = BesselBridgeSpec(0.0, 2.0, 0.4, 1.0)
    t, mean = _midpoint_mean(spec)
    paths = sample_bessel_bridge(spec, new_stream(40), [spec.t0, t, spec.t1], n_paths=20000, method='exact')
    assert paths.shape == (20000, 3)
    assert np.all(paths[:, 0] == spec.c0) and np.all(paths[:, -1] == spec.c1)
    assert within_se(paths[:, 1], mean)


def test_euler_sampler_is_close_to_exact():
    spec = BesselBridgeSpec(0.0, 1.0, 0.5, 0.5)
    t, mean = _midpoint_mean(spec)
    grid = bridge_grid(spec, 1e-3)
    paths = sample_bessel_bridge(spec, new_stream(41), grid, n_paths=2000)
    assert np.all(paths >= 0.0)
    assert np.mean(paths[:, grid.size // 2]) == pytest.approx(mean, rel=0.1)


def test_sampler_arguments():
    spec = BesselBridgeSpec(0.0, 1.0, 0.5, 0.5)
    with pytest.raises(ArgumentError):
        sample_bessel_bridge(spec, new_stream(0), [0.0, 0.5, 1.0])
    with pytest.raises(ArgumentError):
        sample_bessel_bridge(spec, new_stream(0), [0.0, 0.5, 1.0], method='nope')
    with pytest.raises(ArgumentError):
        sample_bessel_bridge(spec, new_stream(0), [0.0, 0.5, 0.9], method='exact')


def test_bridge_grid():
    grid = bridge_grid(BesselBridgeSpec(1.0, 2.0, 0.5, 0.5), 0.3)
    assert grid[0] == 1.0 and grid[-1] == 2.0
    assert np.max(np.diff(grid)) <= 0.3


def test_bridge_probabilities():
    assert bridge_positive_prob(0.0, 1.0, 1.0) == 0.0
    assert bridge_positive_prob(1.0, 1.0, 2.0) == pytest.approx(1.0 - np.exp(-1.0))
    assert bridge_crossing_prob(1.0, 1.0, 2.0) == pytest.approx(np.exp(-1.0))
    assert np.allclose(bridge_crossing_prob(np.array([-1.0, 0.0, 2.0]), np.array([1.0, 1.0, 1.0]), 1.0),
                       [1.0, 1.0, np.exp(-4.0)])
    with pytest.raises(DomainError):
        bridge_positive_prob(-1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        bridge_crossing_prob(1.0, 1.0, 0.0)


def test_tail_constant():
    specs = [BesselBridgeSpec(0.0, 4.0, 0.5, 1.0), BesselBridgeSpec(0.0, 10.0, 1.0, 2.0)]
    fit = fit_tail_constant(specs)
    assert len(fit['per_spec']) == 2
    assert fit['c'] == max(fit['per_spec']) > 0
    with pytest.raises(ArgumentError):
        fit_tail_constant([BesselBridgeSpec(0.0, 1.0, 1.0, 1.0)])
