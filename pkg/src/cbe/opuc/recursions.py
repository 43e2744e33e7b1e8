"""
 Mesh-vectorized kernels for one step of the Prüfer, relative Prüfer and field recursions.

 All kernels take the pre-update state and return new arrays; phases are never reduced mod 2pi. The principal
 branch of log(1 - gamma e^{i psi}) is continuous because |gamma| < 1 keeps the argument in the right half-plane.
"""
from enum import Enum

import numpy as np

from ..errors import ArgumentError


class Sigma(Enum):
    """ Direction of the field: sigma = 1 gives log |Phi*|^2, sigma = i gives -2 Im log Phi*. """
    REAL = '1'
    IMAGINARY = 'i'

    def __str__(self):
        return self.value

    @property
    def unit(self):
        return 1.0 + 0j if self is Sigma.REAL else 1j

    @staticmethod
    def parse(value):
        if isinstance(value, Sigma):
            return value
        text = str(value).strip().lower()
        if text in ('1', 'real', 're'):
            return Sigma.REAL
        if text in ('i', 'imaginary', 'im'):
            return Sigma.IMAGINARY
        raise ArgumentError(f'Unknown field direction "{value}"')


def log_factor(gamma, psi):
    """ log(1 - gamma e^{i psi}), principal branch. """
    return np.log1p(-gamma * np.exp(1j * psi))


def prufer_step(psi, theta, gamma, log_term=None):
    """ Psi_{k+1} = Psi_k + theta - 2 Im log(1 - gamma_k e^{i Psi_k}). """
    if log_term is None:
        log_term = log_factor(gamma, psi)
    return psi + theta - 2.0 * log_term.imag


def relative_prufer_step(rel_psi, theta, gamma):
    """ psi_{k+1} = psi_k + theta - 2 Im(log(1 - gamma_k e^{i psi_k}) - log(1 - gamma_k)). """
    return rel_psi + theta - 2.0 * (log_factor(gamma, rel_psi).imag - np.log1p(-gamma).imag)


def field_step(phi, logphi_star, psi, gamma, sigma, log_term=None):
    """ Advance phi and 2 log Phi* by one coefficient, both using the pre-update Psi_k. """
    if log_term is None:
        log_term = log_factor(gamma, psi)
    phi_next = phi + 2.0 * (Sigma.parse(sigma).unit * log_term).real
    return phi_next, logphi_star + 2.0 * log_term
