"""
 Single-ray estimates of P(U^o_{T+}(0) in [-k7, x], barrier event) for a ray started h below the centering.

 At theta = 0 the drift vanishes and, for either sigma, U^o(0) is sqrt(4/beta) times a standard Brownian motion
 Z, so the ray is Z_{T-} = -sqrt(2) log k1+ - h followed by Brownian increments. The event is rare for large h, so
 the paths are drawn under the drift nu = sqrt(2) + h/(T+ - T-) and reweighted by exp(-nu W_T - nu^2 T / 2).
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy import stats

from ..barriers import decoration_end, decoration_envelope
from ..errors import ArgumentError


@dataclass(frozen=True)
class OneRayResult:
    heights: np.ndarray
    probabilities: np.ndarray
    std_errors: np.ndarray
    predicted_shape: np.ndarray
    slope: float
    intercept: float
    r_squared: float


def predicted_shape(h, span):
    """ h e^{-sqrt(2) h - h^2 / (2 span)}, span = T+ - T-. """
    h = np.asarray(h, dtype=float)
    return h * np.exp(-np.sqrt(2.0) * h - h ** 2 / (2.0 * span))


def _ray_probability(config, gen, h, k7, x, n_paths):
    times = config.time_grid()
    span = config.t_plus - config.t_minus
    nu = np.sqrt(2.0) + h / span
    # Z = U sqrt(beta/4), barriers rescaled accordingly
    factor = np.sqrt(config.beta / 4.0)
    lower_tail, upper_tail = -k7 * factor, x * factor
    banana = (times >= config.t_dagger - 1e-12) & (times <= config.t_plus - config.k4)
    tail = times >= config.t_plus - config.k4
    upper = np.full(times.size, np.inf)
    lower = np.full(times.size, -np.inf)
    upper[banana] = np.sqrt(2.0) * decoration_envelope(times[banana], config.t_plus, +1)
    lower[banana] = np.sqrt(2.0) * decoration_envelope(times[banana], config.t_plus, -1)
    upper[tail] = np.sqrt(2.0) * decoration_end(times[tail], config.t_plus, config.k5)

    z = np.full(n_paths, -np.sqrt(2.0) * config.log_k1_plus - h)
    w = np.zeros(n_paths)
    alive = np.ones(n_paths, dtype=bool)
    for i in range(times.size - 1):
        dt = times[i + 1] - times[i]
        dw = np.sqrt(dt) * gen.standard_normal(n_paths)
        w += dw
        z = z + nu * dt + dw
        alive &= (z <= upper[i + 1]) & (z >= lower[i + 1])
    alive &= (z >= lower_tail) & (z <= upper_tail)
    weights = np.exp(-nu * w - 0.5 * nu ** 2 * span) * alive
    return float(np.mean(weights)), float(np.std(weights, ddof=1) / np.sqrt(n_paths))


def one_ray_probability(config, stream, heights, k7=1.0, x=np.inf, n_paths=10000):
    """ Importance-sampled ray probabilities for every starting depth h, with the log-linear fit of the
    probabilities against h and the predicted shape. """
    heights = np.asarray(heights, dtype=float)
    if heights.size < 2 or np.any(heights <= 0):
        raise ArgumentError('One-ray regression needs at least two positive starting depths')
    if n_paths < 2:
        raise ArgumentError(f'One-ray estimates need at least two paths, got {n_paths}')
    if config.noise_scale != 1.0:
        raise ArgumentError('The change of measure needs the unscaled Brownian noise (noise_scale=1)')
    gen = stream.generator
    estimates = [_ray_probability(config, gen, h, k7, x, n_paths) for h in heights]
    probabilities = np.array([p for p, _ in estimates])
    errors = np.array([e for _, e in estimates])
    positive = probabilities > 0
    if np.sum(positive) >= 2:
        fit = stats.linregress(heights[positive], np.log(probabilities[positive]))
        slope, intercept, r_squared = float(fit.slope), float(fit.intercept), float(fit.rvalue ** 2)
    else:
        slope = intercept = r_squared = float('nan')
    logging.info(f'One-ray regression over {heights.size} depths: slope {slope:.4g}, R^2 {r_squared:.4g}')
    return OneRayResult(heights=heights, probabilities=probabilities, std_errors=errors,
                        predicted_shape=predicted_shape(heights, config.t_plus - config.t_minus),
                        slope=slope, intercept=intercept, r_squared=r_squared)
