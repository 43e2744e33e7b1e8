"""
 Moment generating functions of log(1 - gamma_j) and the normalizing sums of the proper martingale.

 E[exp(s Re log(1 - gamma_j) + t Im log(1 - gamma_j))]
     = G(1 + b) G(1 + s + b) / (G(1 + b + (s + it)/2) G(1 + b + (s - it)/2)),   b = beta (j + 1) / 2,

 evaluated through log-Gamma. For real s, t the two denominator factors are conjugate, so the value is real.
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import digamma, loggamma

from ..errors import ArgumentError, PoleError
from ..opuc import Sigma
from ..random import check_beta, modulus_shape

DIFF_STEP = 1e-6


@dataclass(frozen=True)
class MgfSpec:
    s: float
    t: float
    j: int
    beta: float
    value: float


def log_mgf(s, t, j, beta):
    beta = check_beta(beta)
    b = modulus_shape(np.asarray(j), beta)
    s = np.asarray(s, dtype=float)
    if np.any(1.0 + s + b <= 0):
        raise PoleError(float(np.min(s)), int(np.max(j)), beta)
    half = (s + 1j * np.asarray(t, dtype=float)) / 2.0
    value = loggamma(1.0 + b) + loggamma(1.0 + s + b) - loggamma(1.0 + b + half) - loggamma(1.0 + b + np.conj(half))
    return np.real(value)


def mgf(s, t, j, beta):
    value = np.exp(log_mgf(s, t, j, beta))
    return float(value) if np.ndim(value) == 0 else value


def mgf_spec(s, t, j, beta):
    return MgfSpec(s=float(s), t=float(t), j=int(j), beta=float(beta), value=mgf(s, t, j, beta))


def s_beta(beta):
    return float(np.sqrt(check_beta(beta) / 2.0))


def log_mgf_h(s, k, beta, sigma=Sigma.REAL):
    """ H_k(s) = log E[exp(2 s Re(sigma log(1 - gamma_k)))]. """
    if Sigma.parse(sigma) is Sigma.REAL:
        return log_mgf(2.0 * np.asarray(s), 0.0, k, beta)
    return log_mgf(0.0, -2.0 * np.asarray(s), k, beta)


def log_mgf_h_derivative(s, k, beta, sigma=Sigma.REAL, step=DIFF_STEP):
    """ H_k'(s) by central difference with a relative step. """
    h = step * max(1.0, abs(float(s)))
    return (log_mgf_h(s + h, k, beta, sigma) - log_mgf_h(s - h, k, beta, sigma)) / (2.0 * h)


def digamma_derivative(s, k, beta, sigma=Sigma.REAL):
    """ Closed form of H_k'(s) through the digamma function. """
    b = modulus_shape(np.asarray(k), check_beta(beta))
    if Sigma.parse(sigma) is Sigma.REAL:
        return 2.0 * digamma(1.0 + 2.0 * s + b) - 2.0 * digamma(1.0 + b + s)
    return 2.0 * np.imag(digamma(1.0 + b + 1j * s))


@dataclass(frozen=True)
class NormalizerSums:
    """ Partial sums over k = 0..j-1 of H_k(s) and H_k'(s), stored for every j = 0..j_max. """
    beta: float
    s: float
    sigma: Sigma
    h_cumsum: np.ndarray
    dh_cumsum: np.ndarray

    @property
    def j_max(self):
        return self.h_cumsum.size - 1

    def h_sum(self, j):
        return float(self.h_cumsum[j])

    def dh_sum(self, j):
        return float(self.dh_cumsum[j])

    def g_estimate(self, j):
        """ sum H_k(s) - log j, whose limit is the constant g_beta. """
        return self.h_sum(j) - float(np.log(j))

    def h_estimate(self, j):
        """ sum H_k'(s) - sqrt(8/beta) log j, whose limit is the constant h_beta. """
        return self.dh_sum(j) - float(np.sqrt(8.0 / self.beta) * np.log(j))


def normalizer_sums(j_max, beta, s=None, sigma=Sigma.REAL):
    """ Normalizers of the proper martingale exp(s phi_j - sum_{k<j} H_k(s)) (sum_{k<j} H_k'(s) - phi_j). """
    if j_max < 2:
        raise ArgumentError(f'Normalizer sums need j_max >= 2, got {j_max}')
    beta = check_beta(beta)
    sigma = Sigma.parse(sigma)
    s = s_beta(beta) if s is None else float(s)
    k = np.arange(j_max)
    h = log_mgf_h(s, k, beta, sigma)
    step = DIFF_STEP * max(1.0, abs(s))
    dh = (log_mgf_h(s + step, k, beta, sigma) - log_mgf_h(s - step, k, beta, sigma)) / (2.0 * step)
    logging.debug(f'Normalizer sums up to j={j_max} for beta={beta}, sigma={sigma}, s={s}')
    return NormalizerSums(beta=beta, s=s, sigma=sigma, h_cumsum=np.concatenate([[0.0], np.cumsum(h)]),
                          dh_cumsum=np.concatenate([[0.0], np.cumsum(dh)]))
