"""
 Whole-ensemble draws through the OPUC pipeline: eigenangles of small matrices and X_n(1) across many replicas.
"""
import numpy as np

from ..errors import ArgumentError
from ..random import check_beta, modulus_shape, sample_uniform_phase, sample_verblunsky
from .charpoly import char_poly_roots_angles, eigenangles
from .szego import char_poly_coefficients

TWO_PI = 2.0 * np.pi


def sample_eigenangles(stream, n, beta, method='counting'):
    """ One CβE(n) configuration as sorted angles in [0, 2pi): gamma_0..gamma_{n-2} from the Beta law and the last
    coefficient alpha uniform on the circle. ``method`` is 'counting' (jumps of the counting function) or 'roots'
    (coefficient-domain root iteration, n <= 16). """
    if n < 1:
        raise ArgumentError(f'Matrix size must be positive, got {n}')
    gammas = np.array([sample_verblunsky(stream, k, beta).gamma for k in range(n - 1)], dtype=complex)
    alpha = complex(sample_uniform_phase(stream))
    if method == 'counting':
        return eigenangles(gammas, alpha)
    if method == 'roots':
        return char_poly_roots_angles(char_poly_coefficients(gammas, alpha, n))
    raise ArgumentError(f'Unknown eigenangle method "{method}"')


def _verblunsky_batch(gen, k, beta, size):
    e = gen.standard_exponential(size)
    g = gen.standard_gamma(modulus_shape(k, beta), size)
    return np.sqrt(e / (e + g)) * np.exp(1j * TWO_PI * gen.random(size))


def sample_two_point_gaps(stream, beta, size):
    """ Gaps omega_1 - omega_2 mod 2pi of CβE(2) configurations, from the roots of
    X_2(z) = 1 + (alpha conj(gamma_0) - gamma_0) z - alpha z^2. """
    beta = check_beta(beta)
    gen = stream.generator
    gamma = _verblunsky_batch(gen, 0, beta, size)
    alpha = np.exp(1j * TWO_PI * gen.random(size))
    a, b, c = -alpha, alpha * np.conj(gamma) - gamma, np.ones(size, dtype=complex)
    disc = np.sqrt(b * b - 4 * a * c)
    r1 = (-b + disc) / (2 * a)
    r2 = (-b - disc) / (2 * a)
    return np.mod(np.angle(r1) - np.angle(r2), TWO_PI)


def sample_char_poly_at_one(stream, n, beta, size):
    """ |X_n(1)|^2 for ``size`` independent replicas, advancing all replicas together step by step. """
    beta = check_beta(beta)
    gen = stream.generator
    psi = np.zeros(size)
    log_abs2 = np.zeros(size)
    for k in range(n - 1):
        w = 1.0 - _verblunsky_batch(gen, k, beta, size) * np.exp(1j * psi)
        log_abs2 += 2.0 * np.log(np.abs(w))
        psi = psi - 2.0 * np.angle(w)
    alpha = np.exp(1j * TWO_PI * gen.random(size))
    log_abs2 += 2.0 * np.log(np.abs(1.0 - alpha * np.exp(1j * psi)))
    return np.exp(log_abs2)
