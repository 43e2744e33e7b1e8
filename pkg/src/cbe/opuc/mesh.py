from enum import Enum

import numpy as np

from ..errors import ArgumentError, MeshError

TWO_PI = 2.0 * np.pi


class MeshKind(Enum):
    UNIFORM = 'uniform'
    ARCS = 'arcs'
    CUSTOM = 'custom'

    def __str__(self):
        return self.value


class Mesh:
    """ A sorted set of angles in [0, 2pi) on which the field is tracked.

    Uniform meshes are the lattice 2pi/count * {0, ..., count-1}. Arc meshes are uniform meshes with pitch
    2pi/(4 k5 n), i.e. count = 4 k5 n, which places every arc endpoint 2pi j k1/n on the mesh.
    """
    def __init__(self, n, points, kind=MeshKind.CUSTOM, k1=None, k5=None):
        points = np.asarray(points, dtype=float)
        if points.ndim != 1 or points.size == 0:
            raise MeshError('A mesh needs a nonempty one-dimensional array of angles')
        if np.any(np.diff(points) <= 0):
            raise MeshError('Mesh points must be strictly increasing')
        if points[0] < 0 or points[-1] >= TWO_PI:
            raise MeshError('Mesh points must lie in [0, 2pi)')
        self.n = n
        self.points = points
        self.kind = kind
        self.k1 = k1
        self.k5 = k5

    @staticmethod
    def uniform(n, count):
        if count < 1:
            raise ArgumentError(f'Uniform mesh needs at least one point, got {count}')
        return Mesh(n, TWO_PI * np.arange(count) / count, MeshKind.UNIFORM)

    @staticmethod
    def arcs(n, k1, k5=4):
        if not 1 <= k1 <= n:
            raise ArgumentError(f'Arc length parameter must satisfy 1 <= k1 <= n, got k1={k1}, n={n}')
        count = 4 * k5 * n
        return Mesh(n, TWO_PI * np.arange(count) / count, MeshKind.ARCS, k1=k1, k5=k5)

    @property
    def count(self):
        return self.points.size

    @property
    def is_uniform(self):
        return self.kind in (MeshKind.UNIFORM, MeshKind.ARCS)

    @property
    def spacing(self):
        if not self.is_uniform:
            raise MeshError('Only uniform meshes have a constant spacing')
        return TWO_PI / self.count

    def index_of(self, theta, atol=1e-12):
        """ Mesh indices of the given angles, which must be mesh points (after reduction mod 2pi). """
        theta = np.mod(np.atleast_1d(np.asarray(theta, dtype=float)), TWO_PI)
        if self.is_uniform:
            idx = np.rint(theta / self.spacing).astype(np.int64) % self.count
        else:
            idx = np.clip(np.searchsorted(self.points, theta), 0, self.count - 1)
        gap = np.abs(np.angle(np.exp(1j * (self.points[idx] - theta))))
        if np.any(gap > atol * max(1.0, self.count)):
            raise MeshError('Requested angles are not points of the mesh')
        return idx

    def __len__(self):
        return self.count

    def __str__(self):
        return f'Mesh({self.kind}, n={self.n}, count={self.count})'
    __repr__ = __str__
