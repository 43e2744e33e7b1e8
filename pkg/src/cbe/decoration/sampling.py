"""
 Decoration samples and the decorated Poisson intensity.
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from ..errors import ArgumentError
from ..extremes import k1_plus
from ..opuc import Sigma
from ..pointprocess.configuration import FiniteIntensity, MarkedPoint
from .events import barrier_event
from .sde import simulate_flat

TWO_PI = 2.0 * np.pi
INTENSITY_GRID = 2048
# widths of the v-window: log k1+ scaled by 1, 2 and 1/2
WINDOW_SCALES = {'I': 1.0, 'I_prime': 2.0, 'I_double_prime': 0.5}


@dataclass(frozen=True)
class DecorationSamples:
    theta: np.ndarray
    values: np.ndarray
    flags: np.ndarray
    terminal_U: np.ndarray
    law: str

    def __len__(self):
        return self.values.shape[0]


def decoration_from_path(path, flags):
    """ D^o on the window: e^{L_{T+} - sqrt(8/beta) log k1+} for sigma = 1, e^{U_{T+}} for sigma = i, zero where
    the barrier event fails. """
    config = path.config
    if config.sigma is Sigma.REAL:
        values = np.exp(path.terminal_L - config.flat_centering)
    else:
        values = np.exp(path.terminal_U).astype(complex)
    return np.where(flags, values, 0.0)


def sample_decoration(config, stream, n_samples, law='s', bridge_correction=False):
    """ Independent decorations from the flat diffusion. Law 's' is the plain one; law 'p' multiplies each sigma = 1
    sample by an independent uniform phase and equals 's' for sigma = i. """
    if law not in ('s', 'p'):
        raise ArgumentError(f'Unknown decoration law "{law}", expected "s" or "p"')
    gen = stream.generator
    values = np.empty((n_samples, config.theta.size), dtype=complex)
    flags = np.empty((n_samples, config.theta.size), dtype=bool)
    terminal = np.empty((n_samples, config.theta.size))
    for i in range(n_samples):
        path = simulate_flat(config, stream)
        outcome = barrier_event(path, bridge_correction=bridge_correction)
        values[i] = decoration_from_path(path, outcome.flags)
        flags[i] = outcome.flags
        terminal[i] = path.terminal_U
    if law == 'p' and config.sigma is Sigma.REAL:
        values *= np.exp(1j * TWO_PI * gen.random(n_samples))[:, None]
    logging.debug(f'Sampled {n_samples} decorations (law {law}), barrier pass fraction {np.mean(flags):.3f}')
    return DecorationSamples(theta=config.theta, values=values, flags=flags, terminal_U=terminal, law=law)


def intensity_window(k1, variant='I'):
    """ [(c log k1+)^{1/10}, (c log k1+)^{9/10}] with c = 1, 2 or 1/2. """
    if variant not in WINDOW_SCALES:
        raise ArgumentError(f'Unknown intensity variant "{variant}"')
    level = WINDOW_SCALES[variant] * np.log(k1_plus(k1))
    return float(level ** 0.1), float(level ** 0.9)


def decoration_intensity(v, k1, variant='I'):
    """ I(v) = sqrt(2/pi) v e^{sqrt(2) v} on the window of ``intensity_window``, 0 outside. """
    lo, hi = intensity_window(k1, variant)
    v = np.asarray(v, dtype=float)
    value = np.where((v >= lo) & (v <= hi), np.sqrt(2.0 / np.pi) * v * np.exp(np.sqrt(2.0) * v), 0.0)
    return float(value) if value.ndim == 0 else value


def intensity_mass(k1, variant='I'):
    lo, hi = intensity_window(k1, variant)
    value, _ = integrate.quad(lambda v: decoration_intensity(v, k1, variant), lo, hi, limit=200)
    return float(value)


def _height_sampler(k1, variant):
    """ Inverse-CDF sampler of the normalized intensity, on a fine grid of the window. """
    lo, hi = intensity_window(k1, variant)
    grid = np.linspace(lo, hi, INTENSITY_GRID)
    cdf = integrate.cumulative_trapezoid(decoration_intensity(grid, k1, variant), grid, initial=0.0)
    cdf /= cdf[-1]
    return lambda gen, size: np.interp(gen.random(size), cdf, grid)


def decorated_poisson_intensity(config, theta_density=None, variant='I', bridge_correction=False):
    """ The intensity D(theta) d theta x I(v) dv x p(df) as a finite measure.

    ``theta_density`` samples D(theta) on the uniform mesh 2pi/M {0..M-1} (e.g. a derivative-martingale density);
    by default it is 1/(2pi), so the angular part has unit mass.
    """
    if theta_density is None:
        weights, angular_mass = None, 1.0
    else:
        theta_density = np.asarray(theta_density, dtype=float)
        if np.any(theta_density < 0):
            raise ArgumentError('Angular densities must be nonnegative')
        angular_mass = float(np.sum(theta_density) * TWO_PI / theta_density.size)
        weights = theta_density / np.sum(theta_density)
    heights = _height_sampler(config.k1, variant)

    def sampler(stream, size):
        gen = stream.generator
        if weights is None:
            theta = TWO_PI * gen.random(size)
        else:
            cells = gen.choice(weights.size, size=size, p=weights)
            theta = TWO_PI * (cells + gen.random(size)) / weights.size
        v = heights(gen, size)
        decorations = sample_decoration(config, stream, size, law='p', bridge_correction=bridge_correction)
        return [MarkedPoint(t, h, f, window=TWO_PI * config.k1)
                for t, h, f in zip(theta, v, decorations.values)]

    return FiniteIntensity(total_mass=angular_mass * intensity_mass(config.k1, variant), sampler=sampler)
