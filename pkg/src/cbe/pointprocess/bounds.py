"""
 Evaluators of the Poisson-approximation bounds. Every bound is given up to a universal constant C supplied by the
 caller, never fixed here.
"""
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from ..errors import ArgumentError

TV_REFERENCE_GRID = 8192
TV_DEFAULT_BINS = 16


def pp_bound(moments: Iterable[Mapping], var, lam, c=1.0):
    """ C (Var + 3 Lambda)^{3/2} sum_i (E P_i E T_i + E T_i P_i + (E P_i)^2) / L_i^2.

    Each moment record has the keys ``EP``, ``ET``, ``ETP`` and ``L``.
    """
    total = 0.0
    for record in moments:
        ep, et, etp, length = (float(record[key]) for key in ('EP', 'ET', 'ETP', 'L'))
        if length <= 0:
            raise ArgumentError(f'Dependency ranges L_i must be positive, got {length}')
        if not np.all(np.isfinite([ep, et, etp])):
            raise ArgumentError(f'Moment inputs must be finite, got {record}')
        total += (ep * et + etp + ep ** 2) / length ** 2
    if total == 0.0:
        return 0.0
    return float(c * (var + 3.0 * lam) ** 1.5 * total)


def intensity_factor(alpha):
    """ (1 - e^{-alpha}) / alpha, equal to 1 at alpha = 0. """
    if alpha < 0:
        raise ArgumentError(f'Intensity masses must be nonnegative, got {alpha}')
    if alpha == 0:
        return 1.0
    return float(-np.expm1(-alpha) / alpha)


def intensity_change_bound(d_bl_value, mass_pi, mass_lambda):
    """ Bounds on d2 and D2 between the Poisson processes of two intensities, from their bounded-Lipschitz
    distance. """
    if mass_pi < 0 or mass_lambda < 0:
        raise ArgumentError(f'Intensity masses must be nonnegative, got {mass_pi} and {mass_lambda}')
    factor = intensity_factor(min(mass_pi, mass_lambda))
    d2 = factor * d_bl_value
    return {'factor': factor, 'd2': d2, 'partial2': float(np.sqrt(2.0) * max(mass_pi, mass_lambda) * d2)}


@dataclass(frozen=True)
class WrappedGaussianTv:
    """ Histogram estimate of the total variation between the phase 2pi(alpha + Z) mod 2pi, Z ~ N(0, V), and the
    uniform phase. ``raw`` is the plug-in histogram distance, ``noise_floor`` its expectation under exact
    uniformity and ``estimate`` the raw value less the floor (clipped at 0). """
    variance: float
    alpha: float
    n_samples: int
    bins: int
    raw: float
    noise_floor: float
    estimate: float
    std_error: float
    reference: float
    bound_shape: float

    @property
    def bound_ratio(self):
        """ estimate / e^{-2 pi^2 V}, the constant a fitted bound would need. """
        return self.estimate / self.bound_shape if self.bound_shape > 0 else float('inf')


def _check_variance(V):
    if V <= 0:
        raise ArgumentError(f'Wrapped Gaussian variance must be positive, got {V}')


def wrapped_gaussian_density(x, V, alpha=0.0):
    """ Density on [0, 1) of alpha + Z mod 1, from its Fourier series. """
    _check_variance(V)
    x = np.asarray(x, dtype=float)
    k_max = max(int(np.ceil(np.sqrt(40.0 / (2.0 * np.pi ** 2 * V)))) + 1, 1)
    k = np.arange(1, k_max + 1)
    terms = np.exp(-2.0 * np.pi ** 2 * k ** 2 * V)[:, None] * np.cos(2.0 * np.pi * k[:, None] * (x - alpha))
    return 1.0 + 2.0 * np.sum(terms, axis=0)


def wrapped_gaussian_tv_reference(V, alpha=0.0, grid=TV_REFERENCE_GRID):
    """ Exact total variation to the uniform law: 1/2 int_0^1 |p - 1|. """
    x = (np.arange(grid) + 0.5) / grid
    return float(0.5 * np.mean(np.abs(wrapped_gaussian_density(x, V, alpha) - 1.0)))


def histogram_noise_floor(n_samples, bins):
    """ Expected plug-in histogram distance for exactly uniform samples (normal approximation of the cells). """
    p = 1.0 / bins
    return float(0.5 * bins * np.sqrt(2.0 * p * (1.0 - p) / (np.pi * n_samples)))


def wrapped_gaussian_tv(V, n_samples, stream, alpha=0.0, bins=TV_DEFAULT_BINS):
    """ Histogram TV between the phase e^{2 pi i (alpha + Z)}, Z ~ N(0, V), and the uniform law on the circle.

    alpha and Z are measured in turns, so the phase is read as (alpha + Z) mod 1; in these units the TV decays
    like e^{-2 pi^2 V}, the reported ``bound_shape``. A phase e^{i (alpha + Z)} in radians corresponds to V / 4pi^2.
    """
    _check_variance(V)
    if n_samples < 2:
        raise ArgumentError(f'TV estimates need at least two samples, got {n_samples}')
    z = np.sqrt(V) * stream.generator.standard_normal(n_samples)
    x = np.mod(alpha + z, 1.0)
    counts = np.bincount(np.minimum((x * bins).astype(int), bins - 1), minlength=bins)
    frequencies = counts / n_samples
    raw = float(0.5 * np.sum(np.abs(frequencies - 1.0 / bins)))
    floor = histogram_noise_floor(n_samples, bins)
    # delta method on the cell frequencies
    std_error = float(0.5 * np.sqrt(np.sum(frequencies * (1.0 - frequencies)) / n_samples))
    return WrappedGaussianTv(variance=float(V), alpha=float(alpha), n_samples=int(n_samples), bins=int(bins),
                             raw=raw, noise_floor=floor, estimate=max(raw - floor, 0.0), std_error=std_error,
                             reference=wrapped_gaussian_tv_reference(V, alpha),
                             bound_shape=float(np.exp(-2.0 * np.pi ** 2 * V)))
