"""
 Distances between marked points, configurations and point-process laws.

 d0(a, b) = min(1, d(theta_a, theta_b) + |v_a - v_b| + sup |f_a - f_b|), with d the arc distance on R/2piZ.
 For configurations of equal size, D1 is the bottleneck assignment (min over permutations of the max d0) and d1
 the optimal average assignment; configurations of different sizes are at distance 1 for both.
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ..errors import ArgumentError
from .configuration import MarkedPoint, PointConfiguration

TWO_PI = 2.0 * np.pi
PAIR_STREAM_OFFSET = 1 << 32


def arc_distance(a, b):
    d = np.mod(np.asarray(a) - np.asarray(b), TWO_PI)
    return np.minimum(d, TWO_PI - d)


def check_windows(f, g):
    if f.window != g.window:
        raise ArgumentError(f'Decorations live on different windows: {f.window} and {g.window}')


def decoration_gap(f, g):
    """ Sup-norm distance of two decorations over their common window. """
    check_windows(f, g)
    if f.f.size == g.f.size:
        return float(np.max(np.abs(f.f - g.f)))
    grid = np.linspace(-f.window, 0.0, max(f.f.size, g.f.size))
    return float(np.max(np.abs(f.at(grid) - g.at(grid))))


def dist_point(a: MarkedPoint, b: MarkedPoint):
    check_windows(a, b)
    total = float(arc_distance(a.theta, b.theta)) + abs(a.v - b.v)
    if total >= 1.0:
        return 1.0
    return min(1.0, total + decoration_gap(a, b))


def distance_matrix(x, y):
    matrix = np.empty((len(x), len(y)))
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            matrix[i, j] = dist_point(a, b)
    return matrix


def bottleneck_assignment(cost):
    """ min over permutations of the max matched cost: binary search over the distinct costs, each threshold tested
    for a perfect matching of the graph of admissible pairs. """
    n = cost.shape[0]
    levels = np.unique(cost)
    lo, hi = 0, levels.size - 1
    while lo < hi:
        mid = (lo + hi) // 2
        graph = csr_matrix((cost <= levels[mid]).astype(np.int8))
        matching = maximum_bipartite_matching(graph, perm_type='column')
        if np.all(matching >= 0) and matching.size == n:
            hi = mid
        else:
            lo = mid + 1
    return float(levels[lo])


def average_assignment(cost):
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].mean())


def dist_config(x: PointConfiguration, y: PointConfiguration):
    """ (D1, d1) between two configurations. """
    if len(x) != len(y):
        return 1.0, 1.0
    if len(x) == 0:
        return 0.0, 0.0
    cost = distance_matrix(x, y)
    return bottleneck_assignment(cost), average_assignment(cost)


@dataclass(frozen=True)
class ProcessDistance:
    """ Coupling estimate of D2 and d2: an upper bound on the infimum over couplings. """
    partial2: float
    partial2_se: float
    d2: float
    d2_se: float
    coupling: str
    n_pairs: int


def dist_process_estimate(sampler_p, sampler_q, n_pairs, stream, shared=False):
    """ Mean of (D1, d1) over ``n_pairs`` draws of a coupling of the two laws.

    ``sampler(stream)`` draws one configuration. With ``shared=True`` the two samplers of a pair read the same
    random stream (shared-randomness coupling), otherwise independent streams (independent coupling).
    """
    if n_pairs < 2:
        raise ArgumentError(f'Process distance estimates need at least two pairs, got {n_pairs}')
    values = np.empty((n_pairs, 2))
    base = PAIR_STREAM_OFFSET * (1 + stream.stream_id % (1 << 20))
    for i in range(n_pairs):
        first = stream.spawn(base + 2 * i)
        second = stream.spawn(base + 2 * i + (0 if shared else 1))
        values[i] = dist_config(sampler_p(first), sampler_q(second))
    mean = values.mean(axis=0)
    se = values.std(axis=0, ddof=1) / np.sqrt(n_pairs)
    coupling = 'shared-randomness' if shared else 'independent'
    logging.debug(f'Process distance over {n_pairs} pairs ({coupling}): D2 <= {mean[0]:.4g}, d2 <= {mean[1]:.4g}')
    return ProcessDistance(partial2=float(mean[0]), partial2_se=float(se[0]), d2=float(mean[1]), d2_se=float(se[1]),
                           coupling=coupling, n_pairs=n_pairs)


@dataclass
class WeightedMeasure:
    """ A finite measure given by weighted marked points. """
    points: List[MarkedPoint]
    weights: np.ndarray

    @staticmethod
    def from_configuration(config, weight=1.0):
        return WeightedMeasure(list(config), np.full(len(config), float(weight)))

    def integrate(self, function):
        if not self.points:
            return 0.0
        return float(np.dot(self.weights, [function(p) for p in self.points]))

    def scaled(self, c):
        return WeightedMeasure(self.points, c * np.asarray(self.weights))


@dataclass(frozen=True)
class BoundedLipschitzEstimate:
    """ max over a finite dictionary of |int f d(mu - nu)|: a lower bound on d_BL. """
    value: float
    dictionary_size: int
    best: Optional[str]


def default_dictionary(window=0.0, anchors=()):
    """ Test functions bounded by 1 and 1-Lipschitz for d0: 64 arc hats in theta, 32 clipped ramps in v, 16
    decoration evaluations, half-products of the first hat and ramp families, and d0(., a) for every anchor a. """
    dictionary = {}
    for c in TWO_PI * np.arange(64) / 64:
        dictionary[f'theta-hat@{c:.4f}'] = lambda p, c=c: max(0.0, 1.0 - float(arc_distance(p.theta, c)))
    for c in np.linspace(-4.0, 4.0, 32):
        dictionary[f'v-ramp@{c:.3f}'] = lambda p, c=c: float(np.clip(p.v - c, 0.0, 1.0))
    for i, x in enumerate(np.linspace(-window, 0.0, 16)):
        dictionary[f'f-eval-{i}@{x:.3f}'] = lambda p, x=x: min(1.0, float(np.abs(p.at(x))))
    for c in TWO_PI * np.arange(8) / 8:
        for d in np.linspace(-2.0, 2.0, 4):
            dictionary[f'product@{c:.3f},{d:.3f}'] = \
                lambda p, c=c, d=d: 0.5 * max(0.0, 1.0 - float(arc_distance(p.theta, c))) * \
                float(np.clip(p.v - d, 0, 1))
    for i, a in enumerate(anchors):
        dictionary[f'anchor-{i}'] = lambda p, a=a: dist_point(p, a)
    return dictionary


def d_bl(mu: WeightedMeasure, nu: WeightedMeasure, dictionary: Optional[dict] = None):
    if dictionary is None:
        windows = [p.window for p in mu.points + nu.points]
        dictionary = default_dictionary(max(windows) if windows else 0.0)
    best, best_name = 0.0, None
    for name, function in dictionary.items():
        gap = abs(mu.integrate(function) - nu.integrate(function))
        if gap > best:
            best, best_name = gap, name
    return BoundedLipschitzEstimate(value=best, dictionary_size=len(dictionary), best=best_name)


TestFunction = Callable[[MarkedPoint], float]
