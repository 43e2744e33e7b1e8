from dataclasses import dataclass

import numpy as np

from ..errors import ArgumentError
from .poly import CirclePoly, circle_max


@dataclass(frozen=True)
class BernsteinRatio:
    derivative_max: float
    scaled_max: float
    ratio: float


def bernstein_ratio(poly):
    """ max|Q'| over the circle against k max|Q|, for a polynomial of degree k >= 1. The inequality asserts
    ratio <= 1, with equality for monomials. """
    poly = poly if isinstance(poly, CirclePoly) else CirclePoly(poly)
    if poly.is_zero:
        raise ArgumentError('Bernstein ratio is undefined for the zero polynomial')
    if poly.degree < 1:
        raise ArgumentError('Bernstein ratio needs a polynomial of degree at least one')
    _, derivative_max = circle_max(poly.derivative(), transform=np.abs)
    _, q_max = circle_max(poly, transform=np.abs)
    scaled = poly.degree * q_max
    return BernsteinRatio(derivative_max=derivative_max, scaled_max=scaled, ratio=derivative_max / scaled)
