import numpy as np
from numpy.polynomial import polynomial as P
from scipy.optimize import minimize_scalar

from ..errors import ArgumentError

TWO_PI = 2.0 * np.pi
REFERENCE_GRID = 65536


class CirclePoly:
    """ A polynomial Q(z) = sum_k c_k z^k studied on the unit circle. Coefficients are in ascending powers. """
    def __init__(self, coeffs):
        self.coeffs = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        nonzero = np.nonzero(self.coeffs)[0]
        self.degree = int(nonzero[-1]) if nonzero.size else -1

    @property
    def is_zero(self):
        return self.degree < 0

    def __call__(self, z):
        return P.polyval(z, self.coeffs)

    def on_circle(self, theta):
        return self(np.exp(1j * np.asarray(theta, dtype=float)))

    def derivative(self):
        if self.degree < 1:
            return CirclePoly([0.0])
        return CirclePoly(P.polyder(self.coeffs[:self.degree + 1]))

    def rotated(self, theta):
        """ z -> Q(e^{i theta} z). """
        return CirclePoly(self.coeffs * np.exp(1j * theta * np.arange(self.coeffs.size)))

    def __str__(self):
        return f'CirclePoly(degree={self.degree})'
    __repr__ = __str__


def random_polynomial(stream, degree):
    """ Independent standard complex Gaussian coefficients. """
    coeffs = stream.generator.normal(scale=np.sqrt(0.5), size=(2, degree + 1))
    return CirclePoly(coeffs[0] + 1j * coeffs[1])


def eval_at_roots(poly, count):
    """ |Q|^2 at the ``count``-th roots of unity exp(2 pi i j / count), j = 0..count-1, via the FFT of the
    zero-padded coefficients. """
    poly = poly if isinstance(poly, CirclePoly) else CirclePoly(poly)
    size = max(poly.degree + 1, 1)
    if count < size:
        raise ArgumentError(f'Need at least degree+1={size} roots of unity, got {count}')
    padded = np.zeros(count, dtype=complex)
    padded[:size] = poly.coeffs[:size]
    values = count * np.fft.ifft(padded)
    return np.abs(values) ** 2


def circle_max(poly, transform=None, grid=REFERENCE_GRID):
    """ Reference maximum of |Q|^2 (or of ``transform(Q(e^{i theta}))``) over the circle: a uniform grid followed by a
    golden-section polish around the best grid point. Returns (theta, value). """
    poly = poly if isinstance(poly, CirclePoly) else CirclePoly(poly)
    grid = max(grid, poly.degree + 1)
    if transform is None:
        values = eval_at_roots(poly, grid)

        def objective(theta):
            return -np.abs(poly.on_circle(theta)) ** 2
    else:
        thetas = TWO_PI * np.arange(grid) / grid
        values = transform(poly.on_circle(thetas))

        def objective(theta):
            return -transform(poly.on_circle(theta))
    best = int(np.argmax(values))
    h = TWO_PI / grid
    theta0 = TWO_PI * best / grid
    try:
        res = minimize_scalar(objective, bracket=(theta0 - h, theta0, theta0 + h), method='golden',
                              options={'xtol': 1e-12})
        if -res.fun >= values[best]:
            return float(np.mod(res.x, TWO_PI)), float(-res.fun)
    except ValueError:
        pass
    return theta0, float(values[best])
