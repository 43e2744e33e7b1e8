"""
 Reference limit laws of the centered maximum.

 The FHK density 4 e^{2x} K0(2 e^x) is evaluated with K0 computed by adaptive quadrature of its integral
 representation int_0^inf e^{-z cosh t} dt; the power series and the large-argument expansion serve as cross-checks.
 A variable with this law is distributed as -(G1 + G2)/2 for independent standard Gumbels G1, G2.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy import integrate, interpolate

from ..errors import ArgumentError

EULER_GAMMA = 0.5772156649015329
FHK_OVERFLOW = 30.0
FHK_TABLE_RANGE = (-40.0, 12.0)
FHK_TABLE_CELL = 0.05


def _k0_scaled(z):
    """ e^z K0(z) = int_0^inf e^{-z (cosh t - 1)} dt for z > 0. """
    knee = np.arccosh(1.0 + 1.0 / z)
    end = np.arccosh(1.0 + 60.0 / z)
    value, _ = integrate.quad(lambda t: np.exp(-z * (np.cosh(t) - 1.0)), 0.0, end, points=[knee],
                              epsabs=0.0, epsrel=1e-10, limit=400)
    return value


def k0(z):
    """ Modified Bessel function K0 by quadrature. """
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise ArgumentError('K0 is only evaluated at positive arguments')
    value = np.array([np.exp(-x) * _k0_scaled(x) for x in z.ravel()]).reshape(z.shape)
    return float(value) if value.ndim == 0 else value


def k0_series(z, terms=60):
    """ -(log(z/2) + gamma) I0(z) + sum_k (z^2/4)^k H_k / (k!)^2, for small z. """
    z = float(z)
    q = z * z / 4.0
    term, harmonic, i0, tail = 1.0, 0.0, 1.0, 0.0
    for k in range(1, terms):
        term *= q / (k * k)
        harmonic += 1.0 / k
        i0 += term
        tail += term * harmonic
    return -(np.log(z / 2.0) + EULER_GAMMA) * i0 + tail


def k0_asymptotic(z):
    """ sqrt(pi / 2z) e^{-z} sum_k a_k z^{-k}, truncated at its smallest term. """
    z = float(z)
    total, term = 1.0, 1.0
    for k in range(1, 200):
        nxt = term * -((2 * k - 1) ** 2) / (8.0 * k * z)
        if abs(nxt) >= abs(term):
            break
        term = nxt
        total += term
    return np.sqrt(np.pi / (2.0 * z)) * np.exp(-z) * total


def _fhk_scalar(x):
    if x > FHK_OVERFLOW:
        return 0.0
    z = 2.0 * np.exp(x)
    return float(np.exp(np.log(4.0) + 2.0 * x - z + np.log(_k0_scaled(z))))


def fhk_density(x):
    """ 4 e^{2x} K0(2 e^x); underflows to 0 above x = 30. """
    x = np.asarray(x, dtype=float)
    value = np.array([_fhk_scalar(v) for v in x.ravel()]).reshape(x.shape)
    return float(value) if value.ndim == 0 else value


@lru_cache(maxsize=1)
def _fhk_cdf_table():
    """ Cumulative integrals of the density over cells of the table range, joined by a Hermite spline whose slopes
    are the density itself. """
    lo, hi = FHK_TABLE_RANGE
    grid = np.linspace(lo, hi, int(round((hi - lo) / FHK_TABLE_CELL)) + 1)
    cells = [integrate.quad(_fhk_scalar, a, b, epsabs=1e-14, epsrel=1e-12)[0] for a, b in zip(grid[:-1], grid[1:])]
    cdf = np.concatenate([[0.0], np.cumsum(cells)])
    logging.debug(f'FHK distribution table built on {grid.size} points, total mass {cdf[-1]:.12f}')
    return interpolate.CubicHermiteSpline(grid, cdf, fhk_density(grid))


def fhk_cdf(x):
    """ Distribution function of the FHK law by quadrature of the density. """
    x = np.asarray(x, dtype=float)
    lo, hi = FHK_TABLE_RANGE
    value = np.clip(_fhk_cdf_table()(np.clip(x, lo, hi)), 0.0, 1.0)
    value = np.where(x <= lo, 0.0, np.where(x >= hi, 1.0, value))
    return float(value) if value.ndim == 0 else value


def gumbel_cdf(x, scale=1.0, loc=0.0):
    if scale <= 0:
        raise ArgumentError(f'Gumbel scale must be positive, got {scale}')
    value = np.exp(-np.exp(-(np.asarray(x, dtype=float) - loc) / scale))
    return float(value) if value.ndim == 0 else value


def gumbel_density(x, scale=1.0, loc=0.0):
    if scale <= 0:
        raise ArgumentError(f'Gumbel scale must be positive, got {scale}')
    y = (np.asarray(x, dtype=float) - loc) / scale
    value = np.exp(-y - np.exp(-y)) / scale
    return float(value) if value.ndim == 0 else value


def two_gumbel_sum_cdf(x):
    """ P(G1 + G2 <= x) = 1 - F_fhk(-x/2). """
    return 1.0 - fhk_cdf(-0.5 * np.asarray(x, dtype=float))


def two_gumbel_sum_density(x):
    return 0.5 * fhk_density(-0.5 * np.asarray(x, dtype=float))


def _uniforms(stream, size):
    u = stream.generator.random(size)
    return np.clip(u, np.finfo(float).tiny, 1.0 - np.finfo(float).eps)


def sample_gumbel(scale, stream, size=None):
    """ -scale log(-log U). """
    if scale <= 0:
        raise ArgumentError(f'Gumbel scale must be positive, got {scale}')
    return -scale * np.log(-np.log(_uniforms(stream, size)))


def sample_two_gumbel_sum(stream, size=None):
    first = sample_gumbel(1.0, stream, size)
    return first + sample_gumbel(1.0, stream, size)


def sample_fhk(stream, size=None):
    return -0.5 * sample_two_gumbel_sum(stream, size)


class LimitKind(Enum):
    FHK = 'fhk'
    GUMBEL = 'gumbel'
    TWO_GUMBEL_SUM = 'two_gumbel_sum'
    SHIFTED_GUMBEL = 'shifted_gumbel'

    def __str__(self):
        return self.value
    __repr__ = __str__


@dataclass(frozen=True)
class LimitLaw:
    """ One of the reference laws; ``scale`` and ``shift`` only apply to the Gumbel kinds. """
    kind: LimitKind
    scale: float = 1.0
    shift: float = 0.0

    def __post_init__(self):
        if self.scale <= 0:
            raise ArgumentError(f'Gumbel scale must be positive, got {self.scale}')

    def cdf(self, x):
        if self.kind is LimitKind.FHK:
            return fhk_cdf(x)
        if self.kind is LimitKind.TWO_GUMBEL_SUM:
            return two_gumbel_sum_cdf(x)
        return gumbel_cdf(x, self.scale, self.shift if self.kind is LimitKind.SHIFTED_GUMBEL else 0.0)

    def density(self, x):
        if self.kind is LimitKind.FHK:
            return fhk_density(x)
        if self.kind is LimitKind.TWO_GUMBEL_SUM:
            return two_gumbel_sum_density(x)
        return gumbel_density(x, self.scale, self.shift if self.kind is LimitKind.SHIFTED_GUMBEL else 0.0)

    def sample(self, stream, size=None):
        if self.kind is LimitKind.FHK:
            return sample_fhk(stream, size)
        if self.kind is LimitKind.TWO_GUMBEL_SUM:
            return sample_two_gumbel_sum(stream, size)
        shift = self.shift if self.kind is LimitKind.SHIFTED_GUMBEL else 0.0
        return shift + sample_gumbel(self.scale, stream, size)

    def __str__(self):
        if self.kind in (LimitKind.FHK, LimitKind.TWO_GUMBEL_SUM):
            return str(self.kind)
        return f'{self.kind}(scale={self.scale:.6g}, shift={self.shift:.6g})'


def gumbel_scale(beta):
    """ 1 / sqrt(2 beta). """
    if beta <= 0:
        raise ArgumentError(f'Inverse temperature must be positive, got {beta}')
    return 1.0 / np.sqrt(2.0 * beta)


def density_table(x):
    """ Columns x, fhk, gumbel, two_sum for plotting. """
    x = np.asarray(x, dtype=float)
    return {'x': x, 'fhk': fhk_density(x), 'gumbel': gumbel_density(x), 'two_sum': two_gumbel_sum_density(x)}


def write_density_table(table, filename):
    columns = ('x', 'fhk', 'gumbel', 'two_sum')
    np.savetxt(filename, np.column_stack([table[c] for c in columns]), delimiter=',', header=','.join(columns),
               comments='', fmt='%.17g')
