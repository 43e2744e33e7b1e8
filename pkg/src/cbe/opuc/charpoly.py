"""
 Characteristic polynomial X_n(z) = Phi*_{n-1}(z) (1 - alpha e^{i Psi_{n-1}(theta)}) and its counting function.

 A trajectory at step k represents X_{k+1}. The imaginary part of log X_n is taken factor by factor with principal
 logs, so that 2 Im log X_n(e^{i theta}) = n theta - N_n(theta) + const, with N_n the counting function.
"""
from dataclasses import dataclass

import numpy as np
from multipledispatch import dispatch
from numpy.polynomial import polynomial as P
from scipy.optimize import brentq

from ..errors import ArgumentError
from .recursions import log_factor, prufer_step
from .szego import SzegoPolynomials, simultaneous_roots
from .trajectory import FieldTrajectory

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class CharPolyEval:
    theta: np.ndarray
    value: np.ndarray
    alpha: complex
    log_abs: np.ndarray


def _check_alpha(alpha):
    alpha = complex(alpha)
    if abs(abs(alpha) - 1.0) > 1e-12:
        raise ArgumentError(f'The rotation alpha must have unit modulus, got |alpha|={abs(alpha)}')
    return alpha


def _select(traj, theta):
    """ Mesh indices for the requested angles; None selects the whole mesh. """
    if theta is None:
        return np.arange(traj.theta.size)
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    idx = np.searchsorted(traj.theta, theta)
    idx = np.clip(idx, 0, traj.theta.size - 1)
    lower = np.clip(idx - 1, 0, traj.theta.size - 1)
    idx = np.where(np.abs(traj.theta[lower] - theta) < np.abs(traj.theta[idx] - theta), lower, idx)
    if np.any(np.abs(traj.theta[idx] - theta) > 1e-9):
        raise ArgumentError('The trajectory was not run on some of the requested angles')
    return idx


@dispatch(FieldTrajectory, object, object)
def eval_char_poly(traj, theta, alpha):
    """ Log-domain evaluation from a trajectory at step n-1. """
    alpha = _check_alpha(alpha)
    idx = _select(traj, theta)
    factor = 1.0 - alpha * np.exp(1j * traj.psi[idx])
    log_abs = 0.5 * traj.logphi_star[idx].real + np.log(np.abs(factor))
    value = np.exp(0.5 * traj.logphi_star[idx]) * factor
    return CharPolyEval(theta=traj.theta[idx], value=value, alpha=alpha, log_abs=log_abs)


@dispatch(SzegoPolynomials, object, object)
def eval_char_poly(polys, theta, alpha):  # noqa: F811
    """ Coefficient-domain evaluation from Phi_{n-1}, Phi*_{n-1}. """
    alpha = _check_alpha(alpha)
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    z = np.exp(1j * theta)
    phi, phi_star = polys.evaluate(z)
    value = phi_star - alpha * z * phi
    with np.errstate(divide='ignore'):
        log_abs = np.log(np.abs(value))
    return CharPolyEval(theta=theta, value=value, alpha=alpha, log_abs=log_abs)


def _phase_offset(alpha):
    return float(np.mod(np.angle(alpha), TWO_PI))


def counting_function(traj, theta=None, alpha=1.0):
    """ N_n(theta) = 2pi (floor((Psi_{n-1}(theta) + a) / 2pi) - floor((Psi_{n-1}(0) + a) / 2pi)), a = arg alpha.

    This is the increasing version of n theta - 2 Im(log X_n(e^{i theta}) - log X_n(1)). The trajectory must be at
    step n-1 and contain theta = 0.
    """
    a = _phase_offset(_check_alpha(alpha))
    zero = _select(traj, [0.0])[0]
    idx = _select(traj, theta)
    base = np.floor((traj.psi[zero] + a) / TWO_PI)
    return TWO_PI * (np.floor((traj.psi[idx] + a) / TWO_PI) - base)


def imaginary_log_field(traj, alpha=1.0):
    """ 2 Im log X_n(e^{i theta}) over the mesh, factor by factor with principal logs. """
    alpha = _check_alpha(alpha)
    return traj.logphi_star.imag + 2.0 * np.angle(1.0 - alpha * np.exp(1j * traj.psi))


def prufer_phase_at(gammas, theta):
    """ Replay Psi_k at arbitrary angles, k = len(gammas). """
    theta = np.asarray(theta, dtype=float)
    psi = theta.copy()
    for gamma in np.asarray(gammas, dtype=complex):
        psi = prufer_step(psi, theta, gamma, log_factor(gamma, psi))
    return psi


def eigenangles(gammas, alpha, resolution=64):
    """ The n angles theta in [0, 2pi) with X_n(e^{i theta}) = 0, from the jumps of the counting function.

    ``gammas`` holds gamma_0..gamma_{n-2}; each jump of floor((Psi_{n-1} + a) / 2pi) is bracketed on a mesh of
    ``resolution * n`` points and refined with Brent's method.
    """
    gammas = np.asarray(gammas, dtype=complex)
    n = gammas.size + 1
    a = _phase_offset(_check_alpha(alpha))
    grid = TWO_PI * np.arange(resolution * n + 1) / (resolution * n)
    values = prufer_phase_at(gammas, grid) + a

    def level_gap(theta, level):
        return float(prufer_phase_at(gammas, np.array([theta]))[0] + a - TWO_PI * level)

    angles = []
    lo_levels = np.floor(values[:-1] / TWO_PI)
    hi_levels = np.floor(values[1:] / TWO_PI)
    for i in np.nonzero(hi_levels > lo_levels)[0]:
        for level in range(int(lo_levels[i]) + 1, int(hi_levels[i]) + 1):
            angles.append(brentq(level_gap, grid[i], grid[i + 1], args=(level,), xtol=1e-14, rtol=1e-14))
    return np.sort(np.mod(np.asarray(angles), TWO_PI))


def char_poly_roots_angles(coeffs):
    """ Angles of the roots of X_n found by the simultaneous root iteration, sorted in [0, 2pi). """
    roots, _ = simultaneous_roots(coeffs)
    # one Newton polish on top of the simultaneous iteration
    derivative = P.polyder(coeffs)
    roots = roots - P.polyval(roots, coeffs) / P.polyval(roots, derivative)
    return np.sort(np.mod(np.angle(roots), TWO_PI))
