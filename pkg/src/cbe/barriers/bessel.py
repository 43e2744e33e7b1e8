"""
 Bessel-3 bridges: the law of a Brownian path conditioned to stay below the line alpha t between two pinned
 endpoints at distances c0 and c1 below it, written in the distance coordinate u = alpha t - X_t >= 0.
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from ..errors import ArgumentError, DomainError


@dataclass(frozen=True)
class BesselBridgeSpec:
    t0: float
    t1: float
    c0: float
    c1: float
    alpha: float = 0.0

    def __post_init__(self):
        if not self.t0 < self.t1:
            raise ArgumentError(f'Bridge times must satisfy t0 < t1, got t0={self.t0}, t1={self.t1}')
        if self.c0 <= 0 or self.c1 <= 0:
            raise ArgumentError(f'Bridge endpoints must lie strictly below the line, got c0={self.c0}, c1={self.c1}')

    @property
    def length(self):
        return self.t1 - self.t0


def log_sinh(x):
    """ log sinh(x) = x - log 2 + log(1 - e^{-2x}) for x > 0, -inf at 0. """
    x = np.asarray(x, dtype=float)
    with np.errstate(divide='ignore'):
        return x - np.log(2.0) + np.log1p(-np.exp(-2.0 * x))


def _check_time(spec, t):
    if not spec.t0 < t < spec.t1:
        raise DomainError('bridge time', t, f'({spec.t0}, {spec.t1})')


def log_normalizer(spec, t):
    s1, s2, total = t - spec.t0, spec.t1 - t, spec.length
    return (0.5 * np.log(2.0 / np.pi) + 0.5 * np.log(total / (s1 * s2))
            - spec.c0 ** 2 / (2.0 * s1) - spec.c1 ** 2 / (2.0 * s2)
            + (spec.c0 ** 2 + spec.c1 ** 2) / (2.0 * total) - log_sinh(spec.c0 * spec.c1 / total))


def bessel_bridge_density(spec, t, u):
    """ Density of u = alpha t - X_t at an interior time t, evaluated in the log domain. """
    _check_time(spec, t)
    u = np.asarray(u, dtype=float)
    if np.any(u < 0):
        raise DomainError('bridge distance', u, '[0, inf)')
    s1, s2 = t - spec.t0, spec.t1 - t
    log_f = (log_normalizer(spec, t) + log_sinh(spec.c0 * u / s1) + log_sinh(u * spec.c1 / s2)
             - u ** 2 / (2.0 * s1) - u ** 2 / (2.0 * s2))
    value = np.exp(log_f)
    return float(value) if value.ndim == 0 else value


def bessel_bridge_cdf(spec, t, x):
    """ P(u_t <= x) by adaptive quadrature of the density. """
    value, _ = integrate.quad(lambda u: bessel_bridge_density(spec, t, u), 0.0, x, limit=200)
    return float(value)


def _check_grid(spec, t_grid, max_step=None):
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.ndim != 1 or t_grid.size < 2 or np.any(np.diff(t_grid) <= 0):
        raise ArgumentError('Bridge time grid must be a strictly increasing array of at least two times')
    if not (np.isclose(t_grid[0], spec.t0) and np.isclose(t_grid[-1], spec.t1)):
        raise ArgumentError(f'Bridge time grid must run from t0={spec.t0} to t1={spec.t1}')
    if max_step is not None and np.max(np.diff(t_grid)) > max_step * (1 + 1e-9):
        raise ArgumentError(f'Bridge grid step {np.max(np.diff(t_grid))} exceeds {max_step}')
    return t_grid


def _euler_paths(spec, gen, t_grid, n_paths):
    """ du = -dB + (1/u + (c1 - u)/(t1 - s)) ds from u = c0, reflected at 0 and pinned to c1 at t1. """
    paths = np.empty((n_paths, t_grid.size))
    paths[:, 0] = spec.c0
    u = np.full(n_paths, float(spec.c0))
    for i in range(t_grid.size - 2):
        s, dt = t_grid[i], t_grid[i + 1] - t_grid[i]
        drift = 1.0 / u + (spec.c1 - u) / (spec.t1 - s)
        u = np.abs(u + drift * dt - np.sqrt(dt) * gen.standard_normal(n_paths))
        u = np.maximum(u, 1e-300)
        paths[:, i + 1] = u
    paths[:, -1] = spec.c1
    return paths


def sample_vmf_directions(gen, kappa, size):
    """ Unit vectors of R^3 with density proportional to exp(kappa <w, e1>). """
    uniform = 1.0 - gen.random(size)
    if kappa > 0:
        w = 1.0 + np.log(uniform + (1.0 - uniform) * np.exp(-2.0 * kappa)) / kappa
    else:
        w = 2.0 * uniform - 1.0
    w = np.clip(w, -1.0, 1.0)
    angle = 2.0 * np.pi * gen.random(size)
    radial = np.sqrt(1.0 - w ** 2)
    return np.column_stack([w, radial * np.cos(angle), radial * np.sin(angle)])


def _exact_paths(spec, gen, t_grid, n_paths):
    """ Norm of a three-dimensional Brownian bridge from c0 e1 to c1 w, w drawn from the von Mises-Fisher law with
    concentration c0 c1 / (t1 - t0). Exact at the grid times. """
    end = spec.c1 * sample_vmf_directions(gen, spec.c0 * spec.c1 / spec.length, n_paths)
    position = np.zeros((n_paths, 3))
    position[:, 0] = spec.c0
    paths = np.empty((n_paths, t_grid.size))
    paths[:, 0] = spec.c0
    for i in range(t_grid.size - 1):
        s, dt = t_grid[i], t_grid[i + 1] - t_grid[i]
        remaining = spec.t1 - s
        mean = position + (end - position) * dt / remaining
        sd = np.sqrt(max(dt * (remaining - dt) / remaining, 0.0))
        position = mean + sd * gen.standard_normal((n_paths, 3))
        paths[:, i + 1] = np.linalg.norm(position, axis=1)
    paths[:, -1] = spec.c1
    return paths


def sample_bessel_bridge(spec, stream, t_grid, n_paths=1, method='euler'):
    """ Paths of u = alpha t - X_t on ``t_grid``, one row per path.

    ``method`` is 'euler' (Euler-Maruyama of the conditioned SDE; grid step at most 10^-3 (t1 - t0)) or 'exact'.
    """
    if method == 'euler':
        t_grid = _check_grid(spec, t_grid, 1e-3 * spec.length)
        paths = _euler_paths(spec, stream.generator, t_grid, n_paths)
    elif method == 'exact':
        t_grid = _check_grid(spec, t_grid)
        paths = _exact_paths(spec, stream.generator, t_grid, n_paths)
    else:
        raise ArgumentError(f'Unknown Bessel bridge sampler "{method}"')
    logging.debug(f'Sampled {n_paths} Bessel bridge paths ({method}) on {t_grid.size} times')
    return paths


def bridge_grid(spec, dt):
    """ Uniform grid from t0 to t1 with step at most dt. """
    steps = max(int(np.ceil(spec.length / dt - 1e-9)), 1)
    return np.linspace(spec.t0, spec.t1, steps + 1)


def bridge_positive_prob(x0, x1, t):
    """ Probability that a Brownian bridge of duration t from x0 >= 0 to x1 >= 0 stays positive. """
    if x0 < 0 or x1 < 0:
        raise DomainError('bridge endpoints', (x0, x1), '[0, inf)')
    if t <= 0:
        raise DomainError('bridge duration', t, '(0, inf)')
    return float(-np.expm1(-2.0 * x0 * x1 / t))


def bridge_crossing_prob(a, b, dt):
    """ Probability that a Brownian bridge over a step dt, with endpoints at distances a and b below a level,
    touches the level. Vectorized; nonpositive distances mean the level is already reached. """
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    if np.any(np.asarray(dt) <= 0):
        raise DomainError('bridge step', dt, '(0, inf)')
    below = (a > 0) & (b > 0)
    value = np.where(below, np.exp(-2.0 * np.maximum(a, 0.0) * np.maximum(b, 0.0) / dt), 1.0)
    return float(value) if value.ndim == 0 else value


def fit_tail_constant(specs, fractions=(0.1, 0.25, 0.5, 1.0)):
    """ Smallest C with P(u_t <= x) <= C x^3 / s^{3/2} at the midpoint t, s = min(t - t0, t1 - t), for
    x = fraction * sqrt(s), over bridges with c0^2 + c1^2 <= t1 - t0.

    Returns the overall constant and the per-bridge ones.
    """
    per_spec = []
    for spec in specs:
        if spec.c0 ** 2 + spec.c1 ** 2 > spec.length:
            raise ArgumentError(f'Tail estimate needs c0^2 + c1^2 <= t1 - t0, got {spec}')
        t = 0.5 * (spec.t0 + spec.t1)
        s = min(t - spec.t0, spec.t1 - t)
        ratios = [bessel_bridge_cdf(spec, t, f * np.sqrt(s)) * s ** 1.5 / (f * np.sqrt(s)) ** 3 for f in fractions]
        per_spec.append(max(ratios))
    return {'c': max(per_spec) if per_spec else 0.0, 'per_spec': per_spec}
