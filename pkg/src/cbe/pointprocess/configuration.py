import json
from dataclasses import dataclass
from typing import Callable, List

import numpy as np

from ..errors import ArgumentError

TWO_PI = 2.0 * np.pi


class MarkedPoint:
    """ A point (theta, v, f) of [0, 2pi) x R x C([-window, 0]). The decoration f is sampled on a uniform grid of
    the window and extended linearly between grid points. """
    def __init__(self, theta, v, f=None, window=0.0):
        self.theta = float(np.mod(theta, TWO_PI))
        self.v = float(v)
        self.f = np.zeros(1, dtype=complex) if f is None else np.atleast_1d(np.asarray(f, dtype=complex))
        self.window = float(window)
        if not np.all(np.isfinite(self.f)):
            raise ArgumentError('Decorations must have a finite sup-norm')

    @property
    def grid(self):
        return np.linspace(-self.window, 0.0, self.f.size)

    def at(self, x):
        """ Piecewise-linear decoration at points of [-window, 0]. """
        x = np.asarray(x, dtype=float)
        if self.f.size == 1:
            return np.full(x.shape, self.f[0])
        return np.interp(x, self.grid, self.f.real) + 1j * np.interp(x, self.grid, self.f.imag)

    def __eq__(self, other):
        return isinstance(other, MarkedPoint) and self.theta == other.theta and self.v == other.v \
            and self.f.shape == other.f.shape and np.array_equal(self.f, other.f)

    def __hash__(self):
        return hash((self.theta, self.v, self.f.size))

    def __str__(self):
        return f'MarkedPoint(theta={self.theta:.6g}, v={self.v:.6g}, |f|={self.f.size})'
    __repr__ = __str__


class PointConfiguration:
    """ A finite multiset of marked points. """
    def __init__(self, points=None):
        self.points: List[MarkedPoint] = list(points or [])

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    @property
    def thetas(self):
        return np.array([p.theta for p in self.points])

    @property
    def heights(self):
        return np.array([p.v for p in self.points])

    def to_json(self):
        return [{'theta': p.theta, 'v': p.v, 'f': [[float(c.real), float(c.imag)] for c in p.f], 'window': p.window}
                for p in self.points]

    @staticmethod
    def from_json(data):
        return PointConfiguration([MarkedPoint(item['theta'], item['v'],
                                               [complex(re, im) for re, im in item.get('f', [[0.0, 0.0]])],
                                               item.get('window', 0.0))
                                   for item in data])

    def __str__(self):
        return f'PointConfiguration({len(self)} points)'
    __repr__ = __str__


def write_configuration(config, filename):
    with open(filename, 'w', encoding='utf8') as f:
        json.dump(config.to_json(), f)


def read_configuration(filename):
    with open(filename, encoding='utf8') as f:
        return PointConfiguration.from_json(json.load(f))


@dataclass
class FiniteIntensity:
    """ A finite intensity measure given by its total mass and a sampler of the normalized law:
    ``sampler(stream, size)`` returns a list of ``size`` marked points. """
    total_mass: float
    sampler: Callable

    def __post_init__(self):
        if not np.isfinite(self.total_mass):
            raise ArgumentError(f'Intensity must have finite mass, got {self.total_mass}')
