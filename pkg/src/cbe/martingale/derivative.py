import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.integrate import trapezoid

from ..errors import ArgumentError
from ..random import check_beta
from .mgf import NormalizerSums, normalizer_sums, s_beta

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class MartingaleSnapshot:
    k: int
    density: np.ndarray
    mass: float
    proper_density: np.ndarray
    proper_mass: float
    excluded_mass: Optional[float] = None


def check_dyadic(k, strict=True):
    k = int(k)
    if k < 2:
        raise ArgumentError(f'The derivative martingale is evaluated at k >= 2, got k={k}')
    if strict and k & (k - 1):
        raise ArgumentError(f'The derivative martingale is evaluated along k = 2^j, got k={k}')
    return k


def periodic_trapezoid(values, theta):
    """ Trapezoid rule over [0, 2pi) for samples on a sorted mesh, closing the last interval through 2pi. """
    values = np.asarray(values)
    theta = np.asarray(theta, dtype=float)
    nodes = np.append(theta, theta[0] + TWO_PI)
    return float(trapezoid(np.append(values, values[0]), nodes))


def _uniform_theta(count):
    return TWO_PI * np.arange(count) / count


def derivative_density(phi, k, beta, theta=None, strict=True, clip=True):
    """ D_k = (1/2pi) exp(sqrt(beta/2) phi_k - log k) (sqrt(2) log k - sqrt(beta/4) phi_k)_+ and its mass B_k.

    ``theta`` defaults to the uniform mesh carrying ``phi``. With ``clip=False`` the positive part is dropped.
    """
    k = check_dyadic(k, strict)
    beta = check_beta(beta)
    phi = np.asarray(phi, dtype=float)
    theta = _uniform_theta(phi.size) if theta is None else theta
    log_k = np.log(k)
    weight = np.sqrt(2.0) * log_k - np.sqrt(beta / 4.0) * phi
    if clip:
        weight = np.maximum(weight, 0.0)
    density = np.exp(np.sqrt(beta / 2.0) * phi - log_k) * weight / TWO_PI
    return density, periodic_trapezoid(density, theta)


def proper_martingale(phi, j, beta, sums: Optional[NormalizerSums] = None, theta=None):
    """ D_hat_j = exp(s_beta phi_j - sum H_k(s_beta)) (sum H_k'(s_beta) - phi_j) and B_hat_j = (1/2pi) int D_hat_j.

    The sums run over k = 0..j-1, which makes exp(s_beta phi_j - sum H_k) an exact martingale.
    """
    beta = check_beta(beta)
    sums = sums or normalizer_sums(max(j, 2), beta)
    if sums.j_max < j:
        raise ArgumentError(f'Normalizer sums reach j={sums.j_max}, but j={j} was requested')
    phi = np.asarray(phi, dtype=float)
    theta = _uniform_theta(phi.size) if theta is None else theta
    martingale = np.exp(s_beta(beta) * phi - sums.h_sum(j))
    density = martingale * (sums.dh_sum(j) - phi)
    return density, periodic_trapezoid(density, theta) / TWO_PI


def truncation_mass(phi, k, beta, eta, theta=None, strict=True):
    """ Mass of exp(sqrt(beta/2) phi_k - log k) |sqrt(2) log k - sqrt(beta/4) phi_k| where the normalized deviation
    (sqrt(2) log k - sqrt(beta/4) phi_k) / sqrt(log k) lies outside K = [eta/2, 2/eta]; eta = 0 means K = (0, inf).
    """
    k = check_dyadic(k, strict)
    beta = check_beta(beta)
    if eta < 0 or eta > 2:
        raise ArgumentError(f'Window parameter eta must lie in [0, 2], got {eta}')
    phi = np.asarray(phi, dtype=float)
    theta = _uniform_theta(phi.size) if theta is None else theta
    log_k = np.log(k)
    deviation = np.sqrt(2.0) * log_k - np.sqrt(beta / 4.0) * phi
    normalized = deviation / np.sqrt(log_k)
    if eta == 0:
        outside = normalized <= 0
    else:
        outside = (normalized < eta / 2.0) | (normalized > 2.0 / eta)
    integrand = np.exp(np.sqrt(beta / 2.0) * phi - log_k) * np.abs(deviation) * outside
    return periodic_trapezoid(integrand, theta)


def martingale_snapshot(phi, k, beta, sums=None, theta=None, eta=None, strict=True):
    """ Density, mass, proper density and proper mass at step k, plus the excluded mass when ``eta`` is given. """
    density, mass = derivative_density(phi, k, beta, theta, strict)
    proper_density, proper_mass = proper_martingale(phi, k, beta, sums, theta)
    excluded = None if eta is None else truncation_mass(phi, k, beta, eta, theta, strict)
    logging.debug(f'Martingale snapshot k={k}: B_k={mass:.6g}, B_hat_k={proper_mass:.6g}')
    return MartingaleSnapshot(k=k, density=density, mass=mass, proper_density=proper_density,
                              proper_mass=proper_mass, excluded_mass=excluded)
