"""
 Roots-of-unity interpolation brackets for |Q|^2.

 For Q of degree k >= 1 and m >= 2, max over the circle of |Q|^2 is at most m/(m-1) times its maximum over the
 (2mk)-th roots of unity. Splitting those roots into a near set N = {|w - 1| <= 2b/k} and a far set F, the local
 maximum over {|z - 1| <= b/k} is at most m/(m-1) max_N + C/(b(m-1)) max_F, and the local minimum is at least
 m/(m-1) min_N - (1 + C/b)/(m-1) max_all, for an absolute constant C which is fitted, never asserted.
"""
from dataclasses import dataclass

import numpy as np

from ..errors import ArgumentError
from .poly import CirclePoly, eval_at_roots

TWO_PI = 2.0 * np.pi
LOCAL_GRID = 4096


@dataclass(frozen=True)
class InterpolationBrackets:
    degree: int
    m: int
    b: float
    mesh_max: float
    certified_bound: float
    near_max: float
    near_min: float
    far_max: float

    def local_upper(self, c=1.0):
        return self.m / (self.m - 1) * self.near_max + c / (self.b * (self.m - 1)) * self.far_max

    def local_lower(self, c=1.0):
        return self.m / (self.m - 1) * self.near_min - (1.0 + c / self.b) / (self.m - 1) * self.mesh_max


def check_refinement(m):
    if int(m) != m or m < 2:
        raise ArgumentError(f'Refinement factor m must be an integer >= 2, got {m}')
    return int(m)


def near_mask(angles, degree, b):
    """ Roots e^{i angle} with |e^{i angle} - 1| <= 2b/k. """
    return 2.0 * np.abs(np.sin(np.asarray(angles) / 2.0)) <= 2.0 * b / degree + 1e-15


def brackets_from_values(values, degree, m, b):
    """ Brackets from |Q|^2 sampled at the (2mk)-th roots of unity, rotated so that the center sits at index 0. """
    count = values.size
    angles = TWO_PI * np.arange(count) / count
    near = near_mask(angles, degree, b)
    mesh_max = float(np.max(values))
    far_max = float(np.max(values[~near])) if np.any(~near) else 0.0
    return InterpolationBrackets(degree=degree, m=m, b=float(b), mesh_max=mesh_max,
                                 certified_bound=m / (m - 1) * mesh_max, near_max=float(np.max(values[near])),
                                 near_min=float(np.min(values[near])), far_max=far_max)


def interpolation_brackets(poly, m, b, center=0.0):
    """ Global and near/far brackets for |Q|^2, localized at e^{i center}. """
    m = check_refinement(m)
    if b <= 0:
        raise ArgumentError(f'Window parameter b must be positive, got {b}')
    poly = poly if isinstance(poly, CirclePoly) else CirclePoly(poly)
    if poly.is_zero:
        raise ArgumentError('Interpolation brackets are undefined for the zero polynomial')
    degree = max(poly.degree, 1)
    values = eval_at_roots(poly.rotated(center), 2 * m * degree)
    return brackets_from_values(values, degree, m, b)


def local_extrema(poly, b, center=0.0, grid=LOCAL_GRID):
    """ Reference max and min of |Q|^2 over the arc {|z - e^{i center}| <= b/k}, on a fine grid. """
    poly = poly if isinstance(poly, CirclePoly) else CirclePoly(poly)
    degree = max(poly.degree, 1)
    ratio = b / (2.0 * degree)
    half_width = np.pi if ratio >= 1 else 2.0 * np.arcsin(ratio)
    thetas = center + np.linspace(-half_width, half_width, grid)
    values = np.abs(poly.on_circle(thetas)) ** 2
    return float(np.max(values)), float(np.min(values))


def fit_near_far_constant(polys, m, b):
    """ Smallest constant C for which both local bounds hold on every polynomial of the corpus.

    Returns a dict with the constants needed by the upper bound, the lower bound and their maximum.
    """
    m = check_refinement(m)
    c_upper, c_lower = 0.0, 0.0
    for poly in polys:
        br = interpolation_brackets(poly, m, b)
        local_max, local_min = local_extrema(poly, b)
        if br.far_max > 0:
            c_upper = max(c_upper, (local_max - m / (m - 1) * br.near_max) * b * (m - 1) / br.far_max)
        if br.mesh_max > 0:
            c_lower = max(c_lower, b * ((m / (m - 1) * br.near_min - local_min) * (m - 1) / br.mesh_max - 1.0))
    return {'c_upper': c_upper, 'c_lower': c_lower, 'c': max(c_upper, c_lower)}
