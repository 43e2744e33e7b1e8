import itertools

import numpy as np
import pytest
from scipy import stats

from cbe.errors import ArgumentError
from cbe.pointprocess import MarkedPoint, PointConfiguration, FiniteIntensity, arc_distance, dist_point, \
    dist_config, distance_matrix, dist_process_estimate, WeightedMeasure, default_dictionary, d_bl, sample_poisson, \
    write_configuration, read_configuration
from cbe.random import new_stream


def _random_configuration(gen, size, spread=0.3):
    return PointConfiguration([MarkedPoint(gen.uniform(0, spread), gen.uniform(0, spread)) for _ in range(size)])


def _brute_force(x, y):
    cost = distance_matrix(x, y)
    perms = list(itertools.permutations(range(len(x))))
    bottleneck = min(max(cost[i, p[i]] for i in range(len(x))) for p in perms)
    average = min(np.mean([cost[i, p[i]] for i in range(len(x))]) for p in perms)
    return bottleneck, average


def test_point_distance():
    a = MarkedPoint(0.1, 0.5)
    assert dist_point(a, a) == 0.0
    assert dist_point(MarkedPoint(0.0, 0.0), MarkedPoint(np.pi, 0.0)) == 1.0
    assert dist_point(MarkedPoint(0.05, 0.0), MarkedPoint(2 * np.pi - 0.05, 0.1)) == pytest.approx(0.2)
    assert arc_distance(0.0, 3 * np.pi / 2) == pytest.approx(np.pi / 2)
    decorated = MarkedPoint(0.1, 0.5, f=[0.0, 0.2j], window=1.0)
    plain = MarkedPoint(0.1, 0.5, f=[0.0, 0.0], window=1.0)
    assert dist_point(decorated, plain) == pytest.approx(0.2)
    with pytest.raises(ArgumentError):
        dist_point(decorated, MarkedPoint(0.1, 0.5, window=2.0))
    with pytest.raises(ArgumentError):
        dist_point(decorated, MarkedPoint(np.pi, 3.0, window=2.0))
    with pytest.raises(ArgumentError):
        MarkedPoint(0.0, 0.0, f=[np.inf])


def test_configuration_distance_edge_cases():
    gen = np.random.default_rng(0)
    x = _random_configuration(gen, 3)
    assert dist_config(x, x) == (0.0, 0.0)
    assert dist_config(_random_configuration(gen, 2), x) == (1.0, 1.0)
    assert dist_config(PointConfiguration(), PointConfiguration()) == (0.0, 0.0)


@pytest.mark.parametrize("size", [1, 3, 5])
def test_assignments_match_brute_force(size):
    gen = np.random.default_rng(size)
    for _ in range(5):
        x, y = _random_configuration(gen, size), _random_configuration(gen, size)
        bottleneck, average = _brute_force(x, y)
        assert dist_config(x, y) == pytest.approx((bottleneck, average))


def test_configuration_metric_axioms():
    gen = np.random.default_rng(1)
    for _ in range(20):
        x, y, z = (_random_configuration(gen, 4, spread=1.0) for _ in range(3))
        xy, yx = dist_config(x, y), dist_config(y, x)
        assert xy == pytest.approx(yx)
        for k in range(2):
            assert xy[k] <= dist_config(x, z)[k] + dist_config(z, y)[k] + 1e-12
        assert xy[1] <= xy[0] <= 1.0


def _intensity(mass):
    def sampler(stream, size):
        gen = stream.generator
        return [MarkedPoint(t, v) for t, v in zip(2 * np.pi * gen.random(size), gen.standard_normal(size))]
    return FiniteIntensity(total_mass=mass, sampler=sampler)


def test_poisson_counts():
    assert len(sample_poisson(_intensity(0.0), new_stream(80))) == 0
    stream = new_stream(81)
    counts = np.array([len(sample_poisson(_intensity(2.5), stream)) for _ in range(10000)])
    se = np.sqrt(2.5 / counts.size)
    assert abs(counts.mean() - 2.5) <= 3 * se
    assert counts.var(ddof=1) == pytest.approx(2.5, rel=0.1)
    with pytest.raises(ArgumentError):
        FiniteIntensity(total_mass=np.inf, sampler=None)


def test_process_distance_estimates():
    intensity = _intensity(2.0)

    def sampler(stream):
        return sample_poisson(intensity, stream)
    same = dist_process_estimate(sampler, sampler, 50, new_stream(82), shared=True)
    assert same.partial2 == 0.0 and same.d2 == 0.0
    assert same.coupling == 'shared-randomness'
    apart = dist_process_estimate(sampler, sampler, 200, new_stream(83))
    assert 0.0 < apart.d2 <= apart.partial2 <= 1.0
    with pytest.raises(ArgumentError):
        dist_process_estimate(sampler, sampler, 1, new_stream(84))


def test_process_distance_sees_the_mass_gap():
    first, second = _intensity(1.0), _intensity(1.5)
    estimate = dist_process_estimate(lambda s: sample_poisson(first, s), lambda s: sample_poisson(second, s), 400,
                                     new_stream(85))
    # counts differ with probability at least the total-variation distance of the two Poisson laws
    k = np.arange(40)
    poisson_tv = 0.5 * np.sum(np.abs(stats.poisson.pmf(k, 1.0) - stats.poisson.pmf(k, 1.5)))
    assert estimate.partial2 + 3 * estimate.partial2_se >= poisson_tv


def test_bounded_lipschitz():
    a, b = MarkedPoint(0.2, 0.1), MarkedPoint(0.4, 0.3)
    mu = WeightedMeasure([a], np.array([1.0]))
    nu = WeightedMeasure([b], np.array([1.0]))
    assert d_bl(mu, mu).value == 0.0
    anchored = d_bl(mu, nu, default_dictionary(anchors=[a]))
    assert anchored.value >= dist_point(a, b) - 1e-12
    assert anchored.dictionary_size == 64 + 32 + 16 + 32 + 1
    plain = d_bl(mu, nu)
    assert d_bl(mu.scaled(3.0), nu.scaled(3.0)).value == pytest.approx(3.0 * plain.value)
    assert d_bl(WeightedMeasure([], np.zeros(0)), WeightedMeasure([], np.zeros(0))).value == 0.0


def test_configuration_json(tmp_path):
    config = PointConfiguration([MarkedPoint(7.0, -0.5, f=[1 + 2j, 0.5j], window=3.0), MarkedPoint(0.1, 2.0)])
    assert config[0].theta == pytest.approx(7.0 - 2 * np.pi)
    filename = str(tmp_path / 'points.json')
    write_configuration(config, filename)
    loaded = read_configuration(filename)
    assert list(loaded) == list(config)
    assert loaded[0].window == 3.0
    assert np.allclose(loaded.heights, [-0.5, 2.0])
