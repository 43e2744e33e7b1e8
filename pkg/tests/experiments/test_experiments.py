import os

import numpy as np
import pytest

from cbe.errors import ConfigurationError
from cbe.experiments import build_config, run


def test_max_dist():
    report = run(build_config('max-dist', overrides={'n': 64, 'k1': 4, 'k5': 4, 'm': 4, 'replicas': 3}))
    rows = report.records['maxima']
    assert len(rows) == 3
    for row in rows:
        assert row['local_lower'] <= row['upper_bound'] + 1e-9 and row['max'] <= row['upper_bound']
        assert np.isfinite(row['i_minus']) and np.isfinite(row['i_plus'])
        assert row['near_max_arcs'] >= 1
    assert report.aggregates['centered_max']['count'] == 3
    assert 'shifted_gumbel' not in report.aggregates


def test_max_dist_imaginary():
    report = run(build_config('max-dist', overrides={'n': 64, 'k1': 4, 'k5': 4, 'sigma': 'i', 'replicas': 2}))
    assert all('upper_bound' not in row for row in report.records['maxima'])


def test_max_dist_validation():
    with pytest.raises(ConfigurationError):
        run(build_config('max-dist', overrides={'n': 64, 'k1': 128, 'replicas': 1}))
    with pytest.raises(ConfigurationError):
        run(build_config('max-dist', overrides={'n': 64, 'k1': 4, 'k5': 3, 'm': 4, 'replicas': 1}))


def test_mart_conv():
    config = build_config('mart-conv', overrides={'n': 64, 'min_k': 8, 'mesh_factor': 4, 'replicas': 2})
    report = run(config)
    per_k = report.aggregates['per_k']
    assert set(per_k) == {'8', '16', '32', '64'}
    assert report.aggregates['nonnegative']
    assert all(entry['B']['count'] == 2 for entry in per_k.values())
    with pytest.raises(ConfigurationError):
        run(build_config('mart-conv', overrides={'n': 64, 'min_k': 128}))


@pytest.mark.slow
def test_sde_decoration():
    config = build_config('sde-decoration', overrides={'k1': 16.0, 'replicas': 6, 'ray_paths': 200,
                                                       'ray_heights': '3 4'})
    report = run(config)
    aggregates = report.aggregates
    assert aggregates['quadratic_variation']['count'] == 6
    assert aggregates['quadratic_variation']['mean'] == pytest.approx(aggregates['quadratic_variation']['expected'],
                                                                      rel=0.1)
    assert aggregates['checks']['gap_nonnegative']
    assert aggregates['decoration_max']['count'] == 6 and aggregates['grid_pitch'] > 0
    assert len(aggregates['one_ray']['probabilities']) == 2
    assert aggregates['one_ray']['reference_slope'] == pytest.approx(-np.sqrt(2.0))


def test_ppp_metrics():
    config = build_config('ppp-metrics', overrides={'replicas': 6, 'masses': '0 2', 'poisson_draws': 50,
                                                    'tv_samples': 20000})
    report = run(config)
    checks = report.aggregates['checks']
    assert checks['assignments'] and checks['intensity_factor'] and checks['wrapped_tv_decreasing']
    assert report.aggregates['assignments'] == {'count': 6, 'agree': 6}
    assert report.aggregates['poisson']['0.0']['mean'] == 0.0


def test_limit_tables(tmp_path):
    out = str(tmp_path)
    report = run(build_config('limit-tables', overrides={'replicas': 2, 'samples': 2000, 'x_points': 41}, out=out))
    assert report.aggregates['fhk_mass'] == pytest.approx(1.0, abs=1e-8)
    assert report.aggregates['two_sum_vs_fhk']['samples'] == 4000
    assert os.path.exists(os.path.join(out, 'density_table.csv'))
    assert os.path.exists(os.path.join(out, 'two_gumbel_sums.csv'))
    with pytest.raises(ConfigurationError):
        run(build_config('limit-tables', overrides={'x_min': 1.0, 'x_max': 0.0}))


def test_counting_check():
    config = build_config('counting-check', overrides={'n': 8, 'replicas': 2, 'moment_sizes': '4',
                                                       'moment_samples': 2000, 'gap_samples': 2000,
                                                       'prufer_n': 256, 'prufer_mesh': 32})
    report = run(config)
    checks = report.aggregates['checks']
    assert checks['oracle'] and checks['prufer']
    assert report.aggregates['second_moment']['4']['expected'] == pytest.approx(5.0)
    assert report.aggregates['prufer']['trajectories'] == 2
