import numpy as np
import pytest

from cbe.errors import ArgumentError
from cbe.pointprocess import pp_bound, intensity_factor, intensity_change_bound, wrapped_gaussian_density, \
    wrapped_gaussian_tv, wrapped_gaussian_tv_reference, histogram_noise_floor
from cbe.random import new_stream


def test_pp_bound():
    record = {'EP': 0.1, 'ET': 0.1, 'ETP': 0.01, 'L': 1.0}
    assert pp_bound([record], var=0.0, lam=0.1, c=2.0) == pytest.approx(2.0 * 0.3 ** 1.5 * 0.03)
    assert pp_bound([{'EP': 0, 'ET': 0, 'ETP': 0, 'L': 1}], var=5.0, lam=1.0) == 0.0
    assert pp_bound([], var=1.0, lam=1.0) == 0.0
    larger = dict(record, ETP=0.02)
    assert pp_bound([larger], 0.0, 0.1) > pp_bound([record], 0.0, 0.1)
    with pytest.raises(ArgumentError):
        pp_bound([dict(record, L=0.0)], 0.0, 0.1)
    with pytest.raises(ArgumentError):
        pp_bound([dict(record, EP=np.nan)], 0.0, 0.1)


def test_intensity_factor():
    assert intensity_factor(0.0) == 1.0
    assert intensity_factor(1e-12) == pytest.approx(1.0)
    assert intensity_factor(1.0) == pytest.approx(1.0 - np.exp(-1.0))
    values = [intensity_factor(a) for a in (0.5, 1.0, 2.0, 10.0)]
    assert values == sorted(values, reverse=True)
    with pytest.raises(ArgumentError):
        intensity_factor(-1.0)


def test_intensity_change_bound():
    bound = intensity_change_bound(0.1, 1.0, 2.0)
    assert bound['factor'] == pytest.approx(1.0 - np.exp(-1.0))
    assert bound['d2'] == pytest.approx(0.1 * bound['factor'])
    assert bound['partial2'] == pytest.approx(np.sqrt(2.0) * 2.0 * bound['d2'])
    with pytest.raises(ArgumentError):
        intensity_change_bound(0.1, -1.0, 2.0)


def test_wrapped_density():
    x = (np.arange(1000) + 0.5) / 1000
    assert np.mean(wrapped_gaussian_density(x, 0.05)) == pytest.approx(1.0)
    assert np.allclose(wrapped_gaussian_density(x, 0.05, alpha=0.3), wrapped_gaussian_density(np.mod(x - 0.3, 1.0),
                                                                                              0.05))
    # first Fourier mode dominates for moderate V
    a = np.exp(-2 * np.pi ** 2 * 0.1)
    assert wrapped_gaussian_tv_reference(0.1) == pytest.approx(2 * a / np.pi, rel=1e-3)
    with pytest.raises(ArgumentError):
        wrapped_gaussian_density(x, 0.0)


def test_wrapped_tv_vanishes_for_large_variance():
    tv = wrapped_gaussian_tv(2.0, 10 ** 6, new_stream(90))
    assert tv.estimate < 1e-3
    assert tv.noise_floor == pytest.approx(histogram_noise_floor(10 ** 6, 16))
    assert tv.reference < 1e-12


def test_wrapped_tv_decreases_with_variance():
    stream = new_stream(91)
    estimates = [wrapped_gaussian_tv(v, 10 ** 5, stream).estimate for v in (0.05, 0.1, 0.2)]
    assert estimates[0] > estimates[1] > estimates[2]
    tv = wrapped_gaussian_tv(0.1, 10 ** 5, stream)
    assert tv.estimate == pytest.approx(tv.reference, abs=0.01)
    assert tv.bound_ratio == pytest.approx(tv.estimate / np.exp(-2 * np.pi ** 2 * 0.1))


def test_wrapped_tv_does_not_depend_on_the_shift():
    first = wrapped_gaussian_tv(0.1, 10 ** 5, new_stream(92), alpha=0.0)
    second = wrapped_gaussian_tv(0.1, 10 ** 5, new_stream(93), alpha=0.37)
    assert abs(first.estimate - second.estimate) <= 3 * np.hypot(first.std_error, second.std_error)


def test_wrapped_tv_arguments():
    with pytest.raises(ArgumentError):
        wrapped_gaussian_tv(-0.1, 100, new_stream(0))
    with pytest.raises(ArgumentError):
        wrapped_gaussian_tv(0.1, 1, new_stream(0))


def test_wrapped_tv_is_measured_in_turns():
    V = 0.1
    tv = wrapped_gaussian_tv(V, 10 ** 5, new_stream(94))
    assert tv.bound_shape == pytest.approx(np.exp(-2 * np.pi ** 2 * V))
    assert tv.reference / tv.bound_shape == pytest.approx(2 / np.pi, rel=1e-3)
    # the same phase drawn in radians, e^{i Z} with Var Z = 4 pi^2 V
    angles = np.mod(2 * np.pi * np.sqrt(V) * new_stream(95).generator.standard_normal(10 ** 5), 2 * np.pi)
    counts = np.bincount(np.minimum((angles / (2 * np.pi) * 16).astype(int), 15), minlength=16)
    radians_tv = 0.5 * np.sum(np.abs(counts / 10 ** 5 - 1 / 16)) - histogram_noise_floor(10 ** 5, 16)
    assert radians_tv == pytest.approx(tv.reference, abs=0.01)
