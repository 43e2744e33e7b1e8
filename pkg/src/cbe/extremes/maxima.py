"""
 Global and per-arc maxima of the field, extremal point configurations and the imaginary-part extremes.
"""
import json
import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..errors import ArgumentError, MeshError
from ..opuc import Sigma, imaginary_log_field, counting_function
from ..pointprocess.configuration import MarkedPoint, PointConfiguration
from ..polymath import brackets_from_values, check_refinement
from .arcs import ArcDecomposition
from .centering import Centering, Statistic, centering, k1_plus, m_n

TWO_PI = 2.0 * np.pi
ARC_CHUNK = 1024


@dataclass(frozen=True)
class GlobalMax:
    """ Mesh maximum of phi_n and its continuum brackets, all in the log scale of phi. """
    theta_star: float
    index: int
    value: float
    upper_bound: float
    m: int
    b: float
    local_upper: float
    local_lower: float

    @property
    def certified_bracket(self):
        return self.value, self.upper_bound


@dataclass(frozen=True)
class ArcMaxima:
    values: np.ndarray
    argmax_index: np.ndarray
    argmax_theta: np.ndarray


@dataclass(frozen=True)
class LocalExtremum:
    j: int
    W_hat: float
    V_j: Optional[float]
    decoration: np.ndarray


@dataclass(frozen=True)
class ImaginaryExtremes:
    n: int
    i_plus: float
    i_minus: float
    theta_plus: float
    theta_minus: float


def uniform_count(traj):
    """ Number of points of the uniform lattice carrying the trajectory; MeshError if it is not one. """
    count = traj.theta.size
    if traj.mesh is not None and traj.mesh.is_uniform:
        return count
    if not np.allclose(traj.theta, TWO_PI * np.arange(count) / count, rtol=0.0, atol=1e-12):
        raise MeshError('This analysis needs a uniform mesh 2pi/M {0, ..., M-1}')
    return count


def global_max(traj, m=4, b=1.0, c=1.0):
    """ Mesh argmax of phi_n with the roots-of-unity brackets of the continuum maximum.

    The mesh must contain the (2mk)-th roots of unity rotated to any of its points, k being the degree of
    |Phi*_k|^2 = e^{phi_k}: for a uniform mesh of M points this means 2mk divides M. Ties go to the smallest angle.
    """
    if traj.sigma is not Sigma.REAL:
        raise ArgumentError('Interpolation brackets apply to the sigma = 1 field only')
    m = check_refinement(m)
    count = uniform_count(traj)
    degree = max(traj.k, 1)
    pattern = 2 * m * degree
    if count % pattern != 0:
        raise MeshError(f'Mesh of {count} points does not contain the {pattern}-th roots of unity '
                        f'(m={m}, k={traj.k})')
    index = int(np.argmax(traj.phi))
    top = float(traj.phi[index])
    stride = count // pattern
    values = np.exp(traj.phi[(index + stride * np.arange(pattern)) % count] - top)
    br = brackets_from_values(values, degree, m, b)
    log_lower = np.log(br.local_lower(c)) + top if br.local_lower(c) > 0 else -np.inf
    result = GlobalMax(theta_star=float(traj.theta[index]), index=index, value=top,
                       upper_bound=top + float(np.log(m / (m - 1))), m=m, b=float(b),
                       local_upper=float(np.log(br.local_upper(c))) + top, local_lower=float(log_lower))
    logging.debug(f'Global max {result.value:.6g} at theta={result.theta_star:.6g}, '
                  f'bracket [{result.value:.6g}, {result.upper_bound:.6g}]')
    return result


def _arc_bounds(arcs, count):
    """ First mesh index of every arc, plus the end sentinel. """
    ids = arcs.arc_of_index(np.arange(count), count)
    starts = np.searchsorted(ids, np.arange(1, arcs.count + 1))
    if np.any(np.diff(np.append(starts, count)) <= 0):
        raise MeshError(f'Mesh of {count} points leaves some of the {arcs.count} arcs empty')
    return np.append(starts, count)


def arc_maxima(traj, arcs, values=None, chunk=ARC_CHUNK):
    """ Maximum of ``values`` (phi_n by default) over every arc, processed in chunks of arcs. """
    count = uniform_count(traj)
    values = traj.phi if values is None else np.asarray(values)
    bounds = _arc_bounds(arcs, count)
    maxima = np.empty(arcs.count)
    where = np.empty(arcs.count, dtype=np.int64)
    for first in range(0, arcs.count, chunk):
        last = min(first + chunk, arcs.count)
        segment = values[bounds[first]:bounds[last]]
        offsets = bounds[first:last] - bounds[first]
        maxima[first:last] = np.maximum.reduceat(segment, offsets)
        for j in range(first, last):
            where[j] = bounds[j] + int(np.argmax(values[bounds[j]:bounds[j + 1]]))
    return ArcMaxima(values=maxima, argmax_index=where, argmax_theta=traj.theta[where])


def decoration_window(traj, arcs):
    """ Mesh indices of the windows theta_j + theta/n, theta in [-2pi k1, 0], one row per arc. """
    count = uniform_count(traj)
    n = arcs.n
    if (count * arcs.k1) % n != 0:
        raise MeshError(f'Decoration windows of {arcs.k1} arcs need n={n} to divide {count} * k1')
    width = count * arcs.k1 // n
    if width >= count:
        raise MeshError(f'Decoration window of {width + 1} points exceeds the mesh of {count} points')
    ends = np.minimum(np.arange(1, arcs.count + 1) * width, count) % count
    return (ends[:, None] - width + np.arange(width + 1)[None, :]) % count


def _decorations(traj, arcs, center):
    windows = decoration_window(traj, arcs)
    if traj.sigma is Sigma.REAL:
        theta_j = arcs.theta_sup[:, None]
        return np.exp(traj.logphi_star[windows] - 1j * (arcs.n + 1) * theta_j - center)
    return np.exp(traj.phi[windows] - center).astype(complex)


def extract_extremal_process(traj, arcs: ArcDecomposition, center: Optional[Centering] = None):
    """ One marked point (theta_j, W_hat_j, D_j) per arc, with the field at step ``arcs.n``. """
    if traj.k != arcs.n:
        raise ArgumentError(f'Arcs are built for n={arcs.n} but the trajectory is at step {traj.k}')
    center = center or centering(arcs.n, traj.beta, Statistic.PHI)
    maxima = arc_maxima(traj, arcs)
    decorations = _decorations(traj, arcs, center.value)
    points = [MarkedPoint(theta, w - center.value, d, window=TWO_PI * arcs.k1)
              for theta, w, d in zip(arcs.theta_sup, maxima.values, decorations)]
    logging.debug(f'Extracted {len(points)} marked points, top height {np.max(maxima.values) - center.value:.6g}')
    return PointConfiguration(points)


def V_statistic(traj, arcs, k1p=None):
    """ V_j = sqrt(2) m_{n1+} - sqrt(beta/4) phi_{n1+}(theta_j), n1+ = floor(n / k1+). """
    k1p = k1_plus(arcs.k1) if k1p is None else k1p
    n1 = int(np.floor(arcs.n / k1p))
    snap = traj.at(n1)
    count = uniform_count(traj)
    width = count * arcs.k1 / arcs.n
    idx = np.minimum(np.rint(np.arange(1, arcs.count + 1) * width).astype(np.int64), count) % count
    return np.sqrt(2.0) * m_n(n1) - np.sqrt(traj.beta / 4.0) * snap.phi[idx]


def local_extremes(traj, arcs, center=None, with_heights=True) -> List[LocalExtremum]:
    config = extract_extremal_process(traj, arcs, center)
    heights = V_statistic(traj, arcs) if with_heights else [None] * len(config)
    return [LocalExtremum(j=j + 1, W_hat=p.v, V_j=None if v is None else float(v), decoration=p.f)
            for j, (p, v) in enumerate(zip(config, heights))]


def imaginary_extremes(traj, alpha=1.0):
    """ Centered max and min of the imaginary field 2 Im log X_n over the mesh, n = k + 1. """
    n = traj.k + 1
    field = imaginary_log_field(traj, alpha)
    scale = np.sqrt(8.0 / traj.beta) * m_n(n)
    top, bottom = int(np.argmax(field)), int(np.argmin(field))
    return ImaginaryExtremes(n=n, i_plus=float(field[top] - scale), i_minus=float(field[bottom] + scale),
                             theta_plus=float(traj.theta[top]), theta_minus=float(traj.theta[bottom]))


def counting_deviation_range(traj, alpha=1.0):
    """ Max over arcs (theta1, theta2] of N(theta2) - N(theta1) - n (theta2 - theta1), arcs wrapping through 0
    included. """
    n = traj.k + 1
    deviation = counting_function(traj, None, alpha) - n * traj.theta
    running_min = np.minimum.accumulate(deviation)
    forward = float(np.max(deviation - running_min))
    # an arc through 0 adds one full turn, 2 pi n to N and 2 pi to its length
    running_max = np.maximum.accumulate(deviation)
    wrapped = float(np.max(running_max - deviation))
    return max(forward, wrapped)


def write_decorations(config, filename):
    """ Per-arc decoration dump: a JSON array holding, for each arc, the [re, im] pairs of D_j. """
    with open(filename, 'w', encoding='utf8') as f:
        json.dump([[[float(c.real), float(c.imag)] for c in p.f] for p in config], f)
