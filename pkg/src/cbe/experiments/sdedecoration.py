"""
 sde-decoration: quadratic variation, step-halving stability, sign of the phase gap, barrier pass rates, the largest
 decoration modulus on the window (a finite-k1 sample of the decoration maximum) and the one-ray regression of the
 flat decoration diffusion.
"""
import numpy as np

from ..decoration import SdeConfig, barrier_event, decoration_from_path, one_ray_probability, phase_gap_dynamics, \
    simulate_flat
from ..random import new_stream
from .registry import SUMMARY_STREAM, Experiment
from .report import column, summary_stats

HALVING_STREAM = 1 << 40
GAP_STREAM = 1 << 41


def sde_config(config, dt=None):
    return SdeConfig(beta=config['beta'], k1=config['k1'], sigma=config['sigma'], k4=config['k4'], k5=config['k5'],
                     dt=config['dt'] if dt is None else dt)


def gap_tolerance(dt):
    return 10.0 * np.sqrt(dt)


def replica(config, stream, index):
    sde = sde_config(config)
    path = simulate_flat(sde, stream, mem_cap_mb=config.mem_cap_mb)
    outcome = barrier_event(path)
    # theta = 0 is the last window point, where U is sqrt(4/beta) times a Brownian motion
    ray = path.U[:, -1]
    halved = simulate_flat(sde_config(config, sde.dt / 2.0), stream.spawn(HALVING_STREAM + index),
                           mem_cap_mb=config.mem_cap_mb)
    gaps = phase_gap_dynamics(sde, stream.spawn(GAP_STREAM + index), config['initial_gap'], config['gap_theta'])
    return {'paths': [{
        'replica': index,
        'qv': float(np.sum(np.diff(ray) ** 2)),
        'mean_terminal_U': float(np.mean(path.terminal_U)),
        'mean_terminal_U_halved': float(np.mean(halved.terminal_U)),
        'pass_fraction': outcome.pass_fraction,
        'decoration_max': float(np.max(np.abs(decoration_from_path(path, outcome.flags)))),
        'gap_min': float(gaps.minimum[0]),
        'gap_max': float(gaps.maximum[0]),
    }]}


def summarize(config, records):
    rows = records.get('paths', [])
    sde = sde_config(config)
    expected_qv = 4.0 / sde.beta * (sde.t_plus - sde.t_minus)
    qv = summary_stats(column(rows, 'qv'))
    coarse = summary_stats(column(rows, 'mean_terminal_U'))
    fine = summary_stats(column(rows, 'mean_terminal_U_halved'))
    tol = gap_tolerance(sde.dt)
    gap_min, gap_max = column(rows, 'gap_min'), column(rows, 'gap_max')
    aggregates = {'quadratic_variation': {**qv, 'expected': expected_qv},
                  'step_halving': {'dt': coarse, 'dt_half': fine},
                  'pass_fraction': summary_stats(column(rows, 'pass_fraction')),
                  'gap_tolerance': tol,
                  'grid_pitch': sde.dt,
                  'decoration_max': summary_stats(column(rows, 'decoration_max'))}
    passed = None
    if qv['count'] > 1:
        qv_ok = abs(qv['mean'] - expected_qv) <= 3.0 * qv['se']
        halving_ok = abs(coarse['mean'] - fine['mean']) <= 2.0 * np.hypot(coarse['se'], fine['se'])
        gap_ok = float(np.mean(gap_min >= -tol)) >= 0.99
        wrap_ok = bool(np.all(gap_max <= 2.0 * np.pi + tol)) if config['initial_gap'] < 2.0 * np.pi else True
        aggregates.update(gap_nonnegative_fraction=float(np.mean(gap_min >= -tol)),
                          checks={'quadratic_variation': qv_ok, 'step_halving': halving_ok,
                                  'gap_nonnegative': gap_ok, 'gap_below_full_turn': wrap_ok})
        passed = qv_ok and halving_ok and gap_ok and wrap_ok

    ray = one_ray_probability(sde, new_stream(config.seed, SUMMARY_STREAM), config['ray_heights'], config['k7'],
                              n_paths=config['ray_paths'])
    aggregates['one_ray'] = {'heights': ray.heights, 'probabilities': ray.probabilities,
                             'std_errors': ray.std_errors, 'predicted_shape': ray.predicted_shape,
                             'slope': ray.slope, 'intercept': ray.intercept, 'r_squared': ray.r_squared,
                             'reference_slope': -np.sqrt(2.0)}
    return aggregates, passed


EXPERIMENT = Experiment('sde-decoration', replica, summarize)
