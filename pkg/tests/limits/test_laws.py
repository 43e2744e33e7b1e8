import numpy as np
import pytest
from scipy import integrate, special, stats

from cbe.errors import ArgumentError
from cbe.limits import k0, k0_series, k0_asymptotic, fhk_density, fhk_cdf, gumbel_cdf, two_gumbel_sum_cdf, \
    two_gumbel_sum_density, sample_gumbel, sample_two_gumbel_sum, sample_fhk, LimitKind, LimitLaw, gumbel_scale, \
    density_table, write_density_table
from cbe.limits.laws import EULER_GAMMA
from cbe.random import new_stream

from ..common.montecarlo import within_se


def test_k0_against_references():
    z = np.array([1e-3, 0.1, 0.5, 1.0, 2.0, 10.0, 40.0])
    assert np.allclose(k0(z), special.k0(z), rtol=1e-9, atol=0.0)
    for x in (0.05, 0.5, 2.0):
        assert k0(x) == pytest.approx(k0_series(x), rel=1e-8)
    for x in (25.0, 40.0):
        assert k0(x) == pytest.approx(k0_asymptotic(x), rel=1e-8)
    with pytest.raises(ArgumentError):
        k0(0.0)


def test_fhk_density_is_a_density():
    total, _ = integrate.quad(fhk_density, -40.0, 10.0, limit=400, epsabs=1e-12)
    assert total == pytest.approx(1.0, abs=1e-8)
    x = np.linspace(-20.0, 3.0, 50)
    assert np.all(fhk_density(x) > 0)
    assert fhk_density(31.0) == 0.0
    assert fhk_cdf(-50.0) == 0.0 and fhk_cdf(20.0) == 1.0
    assert np.all(np.diff(fhk_cdf(x)) >= 0)


def test_two_gumbel_sum_distribution():
    # P(G1 + G2 <= x) = 2 e^{-x/2} K1(2 e^{-x/2})
    x = np.linspace(-3.0, 8.0, 12)
    z = 2.0 * np.exp(-0.5 * x)
    assert np.allclose(two_gumbel_sum_cdf(x), z * special.k1(z), atol=1e-7)
    assert np.allclose(two_gumbel_sum_density(x), 2.0 * np.exp(-x) * special.k0(z), rtol=1e-8)


@pytest.mark.slow
def test_fhk_is_minus_half_a_two_gumbel_sum():
    samples = sample_fhk(new_stream(100), 10 ** 6)
    assert stats.kstest(samples, fhk_cdf).statistic < 0.005


def test_gumbel_samplers():
    samples = sample_gumbel(1.0, new_stream(101), 10 ** 6)
    density = np.log(2.0) * 0.5
    assert abs(np.median(samples) + np.log(np.log(2.0))) <= 3 * np.sqrt(0.25 / samples.size) / density
    assert np.allclose(sample_gumbel(2.0, new_stream(102), 100), 2.0 * sample_gumbel(1.0, new_stream(102), 100))
    sums = sample_two_gumbel_sum(new_stream(103), 10 ** 5)
    assert within_se(sums, 2 * EULER_GAMMA)
    assert np.array_equal(sample_fhk(new_stream(104), 10), -0.5 * sample_two_gumbel_sum(new_stream(104), 10))
    with pytest.raises(ArgumentError):
        sample_gumbel(0.0, new_stream(0))


def test_limit_law():
    law = LimitLaw(LimitKind.SHIFTED_GUMBEL, scale=0.5, shift=1.0)
    assert law.cdf(1.0) == pytest.approx(np.exp(-1.0))
    assert law.cdf(0.3) == pytest.approx(gumbel_cdf(0.3, 0.5, 1.0))
    assert LimitLaw(LimitKind.GUMBEL, shift=5.0).cdf(0.0) == pytest.approx(np.exp(-1.0))
    assert np.allclose(law.sample(new_stream(105), 5), 1.0 + sample_gumbel(0.5, new_stream(105), 5))
    assert str(LimitLaw(LimitKind.FHK)) == 'fhk'
    assert str(law) == 'shifted_gumbel(scale=0.5, shift=1)'
    assert gumbel_scale(2.0) == pytest.approx(0.5)
    with pytest.raises(ArgumentError):
        LimitLaw(LimitKind.GUMBEL, scale=-1.0)
    with pytest.raises(ArgumentError):
        gumbel_scale(0.0)


def test_density_table(tmp_path):
    table = density_table(np.linspace(-5.0, 5.0, 11))
    filename = str(tmp_path / 'densities.csv')
    write_density_table(table, filename)
    with open(filename) as f:
        assert f.readline().strip() == 'x,fhk,gumbel,two_sum'
    data = np.loadtxt(filename, delimiter=',', skiprows=1)
    assert data.shape == (11, 4)
    assert np.allclose(data[:, 1], table['fhk'])
