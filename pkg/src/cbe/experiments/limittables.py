"""
 limit-tables: density tables of the reference laws and the FHK law against sums of two Gumbels.
"""
import os

import numpy as np
from scipy import integrate, stats

from ..errors import ConfigurationError
from ..limits import density_table, fhk_density, sample_two_gumbel_sum, two_gumbel_sum_cdf, write_density_table
from .registry import Experiment
from .report import column

TABLE_FILE = 'density_table.csv'


def validate(config):
    if config['x_min'] >= config['x_max']:
        raise ConfigurationError(f'x_min={config["x_min"]} must be below x_max={config["x_max"]}')


def replica(config, stream, index):
    values = sample_two_gumbel_sum(stream, config['samples'])
    return {'two_gumbel_sums': [{'replica': index, 'value': float(v)} for v in values]}


def summarize(config, records):
    x = np.linspace(config['x_min'], config['x_max'], config['x_points'])
    table = density_table(x)
    if config.out:
        os.makedirs(config.out, exist_ok=True)
        write_density_table(table, os.path.join(config.out, TABLE_FILE))
    mass, _ = integrate.quad(fhk_density, -40.0, 10.0, points=[-5.0, 0.0, 2.0], epsabs=1e-13, epsrel=1e-12,
                             limit=400)
    aggregates = {'fhk_mass': mass, 'table_points': int(x.size),
                  'table_peaks': {name: float(x[np.argmax(table[name])]) for name in ('fhk', 'gumbel', 'two_sum')}}
    values = column(records.get('two_gumbel_sums', []), 'value')
    passed = abs(mass - 1.0) <= 1e-8
    if values.size:
        ks = stats.kstest(values, two_gumbel_sum_cdf)
        aggregates['two_sum_vs_fhk'] = {'samples': int(values.size), 'ks': float(ks.statistic),
                                        'pvalue': float(ks.pvalue)}
        passed = passed and ks.pvalue >= 0.01
    return aggregates, passed


EXPERIMENT = Experiment('limit-tables', replica, summarize, validate)
