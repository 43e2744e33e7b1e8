"""
 Coefficient-domain oracle: Szegő recurrence on explicit polynomial coefficients and a simultaneous root iteration.

 Coefficient arrays are in ascending powers. This path is only meant for small sizes, where it provides an
 independent check of the log-domain field.
"""
import logging
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from ..errors import ArgumentError, OracleCapExceeded

DEFAULT_ORACLE_CAP = 4096
ROOT_SIZE_CAP = 16


@dataclass(frozen=True)
class SzegoPolynomials:
    """ Phi_n and Phi*_n as ascending coefficient arrays of length n+1. """
    phi: np.ndarray
    phi_star: np.ndarray

    @property
    def degree(self):
        return self.phi.size - 1

    def evaluate(self, z):
        return P.polyval(z, self.phi), P.polyval(z, self.phi_star)


def reverse_conjugate(coeffs):
    """ z^k conj(Q(1 / conj z)) as a coefficient array. """
    return np.conj(np.asarray(coeffs)[::-1])


def szego_coefficients(gammas, n, cap=DEFAULT_ORACLE_CAP):
    """ Phi_{k+1}(z) = z Phi_k(z) - conj(gamma_k) Phi*_k(z), Phi*_{k+1}(z) = Phi*_k(z) - gamma_k z Phi_k(z),
    from Phi_0 = Phi*_0 = 1. """
    if n > cap:
        raise OracleCapExceeded(n, cap)
    gammas = np.asarray([getattr(g, 'gamma', g) for g in gammas], dtype=complex)
    if gammas.size < n:
        raise ArgumentError(f'Need {n} coefficients to build Phi_{n}, got {gammas.size}')
    phi = np.zeros(n + 1, dtype=complex)
    phi_star = np.zeros(n + 1, dtype=complex)
    phi[0] = phi_star[0] = 1.0
    for k in range(n):
        z_phi = np.roll(phi, 1)  # degree k < n, so the wrapped entry is zero
        new_phi = z_phi - np.conj(gammas[k]) * phi_star
        phi_star = phi_star - gammas[k] * z_phi
        phi = new_phi
    return SzegoPolynomials(phi=phi, phi_star=phi_star)


def char_poly_coefficients(gammas, alpha, n, cap=DEFAULT_ORACLE_CAP):
    """ X_n(z) = Phi*_{n-1}(z) - alpha z Phi_{n-1}(z). """
    polys = szego_coefficients(gammas, n - 1, cap)
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[:n] += polys.phi_star
    coeffs[1:] -= alpha * polys.phi
    return coeffs


def simultaneous_roots(coeffs, max_iter=200, tol=1e-12):
    """ Roots of a polynomial (ascending coefficients) by the Weierstrass (Durand-Kerner) simultaneous iteration.

    Returns the roots and the final maximal residual |Q(z_i)| relative to the coefficient norm.
    """
    coeffs = np.trim_zeros(np.asarray(coeffs, dtype=complex), 'b')
    degree = coeffs.size - 1
    if degree < 1:
        raise ArgumentError('Root iteration needs a polynomial of degree at least one')
    if degree > ROOT_SIZE_CAP:
        raise OracleCapExceeded(degree, ROOT_SIZE_CAP)
    monic = coeffs / coeffs[-1]
    radius = 1.0 + np.max(np.abs(monic[:-1]))
    roots = radius * (0.4 + 0.9j) ** np.arange(degree)
    scale = np.sum(np.abs(monic))
    residual = np.inf
    for _ in range(max_iter):
        values = P.polyval(roots, monic)
        diffs = roots[:, None] - roots[None, :]
        np.fill_diagonal(diffs, 1.0)
        roots = roots - values / np.prod(diffs, axis=1)
        residual = np.max(np.abs(P.polyval(roots, monic))) / scale
        if residual < tol:
            break
    else:
        logging.debug(f'Root iteration stopped at the cap of {max_iter} iterations, residual {residual:.3g}')
    return roots, residual
