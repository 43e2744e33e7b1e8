"""
 max-dist: centered maxima of the field, their brackets, the imaginary extremes and the counting deviation range.
"""
import numpy as np

from ..errors import ConfigurationError
from ..extremes import arc_decomposition, arc_maxima, counting_deviation_range, global_max, imaginary_extremes, m_n
from ..limits import LimitKind, LimitLaw, gof, gumbel_scale, shifted_gumbel_fit
from ..opuc import Mesh, Sigma, run_field
from .registry import Experiment
from .report import column, summary_stats

MIN_GOF_SAMPLES = 100


def validate(config):
    if config['k1'] > config['n']:
        raise ConfigurationError(f'k1={config["k1"]} exceeds n={config["n"]}')
    if (4 * config['k5']) % (2 * config['m']) != 0:
        raise ConfigurationError(f'The mesh of 4 k5 n points must contain the (2 m n)-th roots of unity: '
                                 f'2m={2 * config["m"]} does not divide 4 k5={4 * config["k5"]}')


def replica(config, stream, index):
    n, beta, sigma = config['n'], config['beta'], Sigma.parse(config['sigma'])
    mesh = Mesh.arcs(n, config['k1'], config['k5'])
    traj = run_field(stream, n, mesh, sigma, beta, mem_cap_mb=config.mem_cap_mb)
    center = np.sqrt(8.0 / beta) * m_n(n)
    record = {'replica': index, 'n': n}
    if sigma is Sigma.REAL:
        top = global_max(traj, config['m'], config['b'])
        record.update(max=top.value, theta_star=top.theta_star, upper_bound=top.upper_bound,
                      local_upper=top.local_upper, local_lower=top.local_lower)
    else:
        where = int(np.argmax(traj.phi))
        record.update(max=float(traj.phi[where]), theta_star=float(traj.theta[where]))
    record['centered'] = record['max'] - center

    maxima = arc_maxima(traj, arc_decomposition(n, config['k1']))
    record['near_max_arcs'] = int(np.sum(maxima.values >= record['max'] - 1.0))
    alpha = np.exp(1j * config['alpha_phase'])
    imag = imaginary_extremes(traj, alpha)
    record.update(i_plus=imag.i_plus, i_minus=imag.i_minus, theta_plus=imag.theta_plus,
                  theta_minus=imag.theta_minus, counting_range=counting_deviation_range(traj, alpha))
    return {'maxima': [record]}


def summarize(config, records):
    rows = records.get('maxima', [])
    centered = column(rows, 'centered')
    aggregates = {
        'centered_max': summary_stats(centered),
        'i_plus': summary_stats(column(rows, 'i_plus')),
        'i_minus': summary_stats(column(rows, 'i_minus')),
        'counting_range': summary_stats(column(rows, 'counting_range')),
        'near_max_arcs': summary_stats(column(rows, 'near_max_arcs')),
    }
    if centered.size >= MIN_GOF_SAMPLES:
        # max log|X_n| - sqrt(2/beta) m_n is half of the centered field maximum
        half = 0.5 * centered
        aggregates['shifted_gumbel'] = shifted_gumbel_fit(half, gumbel_scale(config['beta']))
        if config['beta'] == 2.0 and Sigma.parse(config['sigma']) is Sigma.REAL:
            aggregates['fhk'] = gof(half, LimitLaw(LimitKind.FHK)).as_dict()
    return aggregates, None


EXPERIMENT = Experiment('max-dist', replica, summarize, validate)
