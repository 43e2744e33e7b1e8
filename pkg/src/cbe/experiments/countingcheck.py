"""
 counting-check: eigenangles from the counting function against polynomial roots, the second moment of |X_n(1)|,
 the two-point gap law and the Prüfer structure along a long run.
"""
import numpy as np
from scipy import integrate

from ..errors import InvariantViolation
from ..opuc import Mesh, char_poly_coefficients, char_poly_roots_angles, eigenangles, run_field, \
    sample_char_poly_at_one, sample_two_point_gaps
from ..random import modulus_shape, sample_uniform_phase, sample_verblunsky
from .registry import Experiment
from .report import column

TWO_PI = 2.0 * np.pi
GAP_BINS = 512
ROOT_TOLERANCE = 1e-6


def expected_second_moment(n, beta):
    """ E|X_n(1)|^2 = 2 prod_{j < n-1} E|1 - gamma_j|^2 = 2 prod (2 + b_j) / (1 + b_j); n + 1 for beta = 2. """
    b = modulus_shape(np.arange(n - 1), beta)
    return float(2.0 * np.prod((2.0 + b) / (1.0 + b)))


def gap_cdf(x, beta):
    """ Distribution of omega_1 - omega_2 mod 2pi for two points, density proportional to (2 - 2 cos x)^{beta/2}. """
    x = np.asarray(x, dtype=float)
    if beta == 2.0:
        return (x - np.sin(x)) / TWO_PI

    def weight(y):
        return (2.0 - 2.0 * np.cos(y)) ** (beta / 2.0)
    total, _ = integrate.quad(weight, 0.0, TWO_PI)
    return np.array([integrate.quad(weight, 0.0, v)[0] / total for v in np.ravel(x)]).reshape(x.shape)


def circular_mismatch(a, b):
    if a.size != b.size:
        return np.inf
    gaps = np.abs(np.angle(np.exp(1j * (a[:, None] - b[None, :]))))
    return float(np.max(np.min(gaps, axis=1)))


def replica(config, stream, index):
    n, beta = config['n'], config['beta']
    gammas = np.array([sample_verblunsky(stream, k, beta).gamma for k in range(n - 1)], dtype=complex)
    alpha = complex(sample_uniform_phase(stream))
    from_counting = eigenangles(gammas, alpha)
    from_roots = char_poly_roots_angles(char_poly_coefficients(gammas, alpha, n))
    oracle = {'replica': index, 'n': n, 'mismatch': circular_mismatch(from_counting, from_roots)}

    moments = []
    for size in config['moment_sizes']:
        values = sample_char_poly_at_one(stream, size, beta, config['moment_samples'])
        moments.append({'replica': index, 'n': size, 'count': values.size, 'mean': float(np.mean(values)),
                        'mean_sq': float(np.mean(values ** 2))})

    gaps = sample_two_point_gaps(stream, beta, config['gap_samples'])
    hist = np.bincount(np.minimum((gaps / TWO_PI * GAP_BINS).astype(int), GAP_BINS - 1), minlength=GAP_BINS)
    histogram = [{'replica': index, 'bin': b, 'count': int(c)} for b, c in enumerate(hist)]

    violation = ''
    try:
        run_field(stream, config['prufer_n'], Mesh.uniform(config['prufer_n'], config['prufer_mesh']), beta=beta,
                  track_relative=True, validate=True, mem_cap_mb=config.mem_cap_mb)
    except InvariantViolation as e:
        violation = e.what
    prufer = {'replica': index, 'violation': violation}
    return {'oracle': [oracle], 'moments': moments, 'gap_histogram': histogram, 'prufer': [prufer]}


def summarize(config, records):
    beta = config['beta']
    oracle = column(records.get('oracle', []), 'mismatch')
    aggregates = {'oracle': {'count': int(oracle.size), 'max_mismatch': float(np.max(oracle)) if oracle.size else 0.0}}

    moment_rows = records.get('moments', [])
    moments = {}
    for size in config['moment_sizes']:
        counts, means = column(moment_rows, 'count', n=size), column(moment_rows, 'mean', n=size)
        if counts.size == 0:
            continue
        total = float(np.sum(counts))
        mean = float(np.sum(counts * means) / total)
        second = float(np.sum(counts * column(moment_rows, 'mean_sq', n=size)) / total)
        expected = expected_second_moment(size, beta)
        moments[str(size)] = {'mean': mean, 'se': float(np.sqrt(max(second - mean ** 2, 0.0) / total)),
                              'expected': expected, 'relative_error': abs(mean / expected - 1.0)}
    aggregates['second_moment'] = moments

    bins = column(records.get('gap_histogram', []), 'bin').astype(int)
    counts = column(records.get('gap_histogram', []), 'count')
    passed_gaps = True
    if counts.size:
        totals = np.bincount(bins, weights=counts, minlength=GAP_BINS)
        edges = TWO_PI * np.arange(1, GAP_BINS + 1) / GAP_BINS
        ecdf = np.cumsum(totals) / np.sum(totals)
        distance = float(np.max(np.abs(ecdf - gap_cdf(edges, beta))))
        aggregates['gap_law'] = {'samples': int(np.sum(totals)), 'binned_ks': distance}
        passed_gaps = distance < 0.01

    violations = [r['violation'] for r in records.get('prufer', []) if r['violation']]
    aggregates['prufer'] = {'trajectories': len(records.get('prufer', [])), 'violations': len(violations),
                            'kinds': sorted(set(violations))}
    checks = {'oracle': aggregates['oracle']['max_mismatch'] <= ROOT_TOLERANCE,
              'second_moment': all(m['relative_error'] <= 0.05 for m in moments.values()),
              'gap_law': passed_gaps, 'prufer': not violations}
    aggregates['checks'] = checks
    return aggregates, all(checks.values())


EXPERIMENT = Experiment('counting-check', replica, summarize)
