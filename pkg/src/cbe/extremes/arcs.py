from dataclasses import dataclass

import numpy as np

from ..errors import ArgumentError

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class ArcDecomposition:
    """ Arcs I_j = 2pi [(j-1) k1/n, j k1/n) for j = 1..ceil(n/k1), the last one truncated at 2pi.
    ``theta_sup[j-1]`` is the supremum of arc j reduced to [0, 2pi). """
    n: int
    k1: int
    count: int
    starts: np.ndarray
    ends: np.ndarray

    @property
    def theta_sup(self):
        return np.mod(self.ends, TWO_PI)

    def arc_of(self, theta):
        """ 1-based arc index of each angle in [0, 2pi). """
        theta = np.mod(np.asarray(theta, dtype=float), TWO_PI)
        idx = np.floor(theta * self.n / (TWO_PI * self.k1)).astype(np.int64) + 1
        return np.minimum(idx, self.count)

    def arc_of_index(self, index, mesh_count):
        """ 1-based arc index of points 2pi i / mesh_count of a uniform mesh, in exact integer arithmetic. """
        index = np.asarray(index, dtype=np.int64)
        return np.minimum((index * self.n) // (mesh_count * self.k1) + 1, self.count)


def arc_decomposition(n, k1):
    if not 1 <= k1 <= n:
        raise ArgumentError(f'Arc length parameter must satisfy 1 <= k1 <= n, got k1={k1}, n={n}')
    count = -(-n // k1)
    j = np.arange(1, count + 1)
    starts = TWO_PI * (j - 1) * k1 / n
    ends = np.minimum(TWO_PI * j * k1 / n, TWO_PI)
    return ArcDecomposition(n=n, k1=k1, count=count, starts=starts, ends=ends)
