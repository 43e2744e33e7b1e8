"""
 mart-conv: the derivative martingale B_k, the proper martingale and the excluded mass along dyadic k.
"""
import numpy as np

from ..errors import ConfigurationError
from ..martingale import martingale_snapshot, normalizer_sums
from ..opuc import Mesh, Sigma, dyadic_schedule, run_field
from .registry import Experiment
from .report import column, summary_stats


def validate(config):
    if config['min_k'] > config['n']:
        raise ConfigurationError(f'min_k={config["min_k"]} exceeds n={config["n"]}')


def dyadic_steps(config):
    return [k for k in dyadic_schedule(config['n']) if k >= config['min_k'] and k & (k - 1) == 0]


def replica(config, stream, index):
    n, beta, sigma = config['n'], config['beta'], Sigma.parse(config['sigma'])
    mesh = Mesh.uniform(n, config['mesh_factor'] * n)
    steps = dyadic_steps(config)
    traj = run_field(stream, n, mesh, sigma, beta, checkpoint_schedule=steps, mem_cap_mb=config.mem_cap_mb)
    sums = normalizer_sums(n, beta, sigma=sigma)
    rows = []
    for k in steps:
        snap = martingale_snapshot(traj.at(k).phi, k, beta, sums, traj.theta, eta=config['eta'])
        rows.append({'replica': index, 'k': k, 'B': snap.mass, 'B_hat': snap.proper_mass,
                     'excluded': snap.excluded_mass, 'min_density': float(np.min(snap.density))})
    return {'martingale': rows}


def summarize(config, records):
    rows = records.get('martingale', [])
    per_k = {}
    for k in dyadic_steps(config):
        b = column(rows, 'B', k=k)
        if b.size == 0:
            continue
        stats = summary_stats(b)
        median = float(np.median(b))
        excluded = column(rows, 'excluded', k=k)
        per_k[str(k)] = {
            'B': stats,
            'B_hat': summary_stats(column(rows, 'B_hat', k=k)),
            'relative_spread': stats['sd'] / stats['mean'] if stats['mean'] > 0 else float('nan'),
            'min_density': float(np.min(column(rows, 'min_density', k=k))),
            'excluded_median_ratio': float(np.median(excluded)) / median if median > 0 else float('nan'),
        }
    nonnegative = all(v['min_density'] >= 0 for v in per_k.values())
    return {'per_k': per_k, 'nonnegative': nonnegative}, None


EXPERIMENT = Experiment('mart-conv', replica, summarize, validate)
