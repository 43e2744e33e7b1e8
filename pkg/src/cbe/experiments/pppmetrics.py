"""
 ppp-metrics: assignment distances against factorial enumeration, Poisson counts, the change-of-intensity factor
 and the wrapped-Gaussian total variation.
"""
import itertools

import numpy as np
from scipy import stats

from ..pointprocess import FiniteIntensity, MarkedPoint, PointConfiguration, dist_config, distance_matrix, \
    intensity_factor, sample_poisson, wrapped_gaussian_tv
from ..random import new_stream
from .registry import SUMMARY_STREAM, Experiment
from .report import column

DECORATION_POINTS = 4
MIN_EXPECTED_CELL = 5.0


def random_configuration(gen, size, window=1.0):
    """ Points with nearby marks so that the distance cap rarely binds. """
    theta = 2.0 * np.pi * gen.random(size)
    v = 0.3 * gen.standard_normal(size)
    f = 0.1 * (gen.standard_normal((size, DECORATION_POINTS)) + 1j * gen.standard_normal((size, DECORATION_POINTS)))
    return PointConfiguration([MarkedPoint(theta[i], v[i], f[i], window) for i in range(size)])


def brute_force_distances(x, y):
    """ (D1, d1) by enumerating every permutation. """
    cost = distance_matrix(x, y)
    size = len(x)
    best_max, best_mean = np.inf, np.inf
    for perm in itertools.permutations(range(size)):
        matched = cost[np.arange(size), perm]
        best_max = min(best_max, float(np.max(matched)))
        best_mean = min(best_mean, float(np.mean(matched)))
    return best_max, best_mean


def uniform_intensity(mass):
    def sampler(stream, size):
        gen = stream.generator
        return [MarkedPoint(t, v) for t, v in zip(2.0 * np.pi * gen.random(size), gen.standard_normal(size))]
    return FiniteIntensity(total_mass=mass, sampler=sampler)


def replica(config, stream, index):
    gen = stream.generator
    size = 1 + index % config['max_points']
    x, y = random_configuration(gen, size), random_configuration(gen, size)
    partial1, d1 = dist_config(x, y)
    brute_max, brute_mean = brute_force_distances(x, y)
    assignment = {'replica': index, 'size': size, 'partial1': partial1, 'd1': d1, 'brute_partial1': brute_max,
                  'brute_d1': brute_mean, 'agree': bool(np.isclose(partial1, brute_max, rtol=0, atol=1e-12)
                                                        and np.isclose(d1, brute_mean, rtol=0, atol=1e-12))}
    counts = []
    for mass in config['masses']:
        intensity = uniform_intensity(mass)
        for draw in range(config['poisson_draws']):
            counts.append({'replica': index, 'mass': mass, 'draw': draw,
                           'count': len(sample_poisson(intensity, stream))})
    return {'assignments': [assignment], 'poisson': counts}


def poisson_chi_square(counts, mass):
    """ Chi-square of observed counts against Poisson(mass), pooling the upper tail into one cell and merging
    cells until every expected count reaches 5. """
    counts = np.asarray(counts, dtype=int)
    total = counts.size
    top = max(int(counts.max()), int(stats.poisson.ppf(0.999, mass)))
    observed = np.bincount(counts, minlength=top + 1).astype(float)
    probs = stats.poisson.pmf(np.arange(top + 1), mass)
    probs[-1] += stats.poisson.sf(top, mass)
    expected = total * probs
    obs_cells, exp_cells, acc_obs, acc_exp = [], [], 0.0, 0.0
    for o, e in zip(observed, expected):
        acc_obs, acc_exp = acc_obs + o, acc_exp + e
        if acc_exp >= MIN_EXPECTED_CELL:
            obs_cells.append(acc_obs)
            exp_cells.append(acc_exp)
            acc_obs, acc_exp = 0.0, 0.0
    if exp_cells:
        obs_cells[-1] += acc_obs
        exp_cells[-1] += acc_exp
    if len(exp_cells) < 2:
        return {'cells': len(exp_cells), 'statistic': 0.0, 'pvalue': 1.0}
    result = stats.chisquare(obs_cells, exp_cells)
    return {'cells': len(exp_cells), 'statistic': float(result.statistic), 'pvalue': float(result.pvalue)}


def summarize(config, records):
    assignments = records.get('assignments', [])
    poisson = records.get('poisson', [])
    aggregates = {'assignments': {'count': len(assignments),
                                  'agree': int(sum(1 for r in assignments if r['agree']))}}
    counts = {}
    for mass in config['masses']:
        sample = column(poisson, 'count', mass=mass)
        if sample.size == 0:
            continue
        entry = {'draws': int(sample.size), 'mean': float(np.mean(sample)),
                 'var': float(np.var(sample, ddof=1)) if sample.size > 1 else 0.0, 'expected': mass}
        if mass > 0:
            entry['chi_square'] = poisson_chi_square(sample.astype(int), mass)
        counts[str(mass)] = entry
    aggregates['poisson'] = counts

    factor = intensity_factor(1.0)
    aggregates['intensity_factor'] = {'alpha': 1.0, 'factor': factor, 'error': abs(factor - (1.0 - np.exp(-1.0)))}

    stream = new_stream(config.seed, SUMMARY_STREAM)
    tv = [wrapped_gaussian_tv(V, config['tv_samples'], stream) for V in sorted(config['variances'])]
    aggregates['wrapped_tv'] = [{'variance': t.variance, 'estimate': t.estimate, 'raw': t.raw,
                                 'noise_floor': t.noise_floor, 'reference': t.reference,
                                 'bound_ratio': t.bound_ratio} for t in tv]
    decreasing = all(a.raw >= b.raw for a, b in zip(tv, tv[1:]))
    checks = {'assignments': aggregates['assignments']['agree'] == len(assignments),
              'poisson': all(c.get('chi_square', {'pvalue': 1.0})['pvalue'] >= 0.01 for c in counts.values()),
              'intensity_factor': aggregates['intensity_factor']['error'] <= 1e-12,
              'wrapped_tv_decreasing': decreasing}
    aggregates['checks'] = checks
    return aggregates, all(checks.values())


EXPERIMENT = Experiment('ppp-metrics', replica, summarize)
