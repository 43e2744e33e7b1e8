"""
 Samplers for the random inputs of the circular beta ensemble.

 Gamma variates of arbitrary positive shape come from numpy's ``standard_gamma``, which uses the Marsaglia-Tsang
 squeeze/rejection scheme (boosted by a uniform power for shapes below one); its acceptance probability is at
 least 0.95 for every shape >= 1.
"""
from dataclasses import dataclass

import numpy as np

from ..errors import ArgumentError, InvalidBeta

TWO_PI = 2.0 * np.pi


def check_beta(beta):
    if not beta > 0:
        raise InvalidBeta(beta)
    return float(beta)


def modulus_shape(k, beta):
    """ The shape b = beta (k+1) / 2 for which |gamma_k|^2 ~ Beta(1, b). """
    return beta * (k + 1) / 2.0


@dataclass(frozen=True)
class Verblunsky:
    k: int
    beta: float
    gamma: complex

    def __str__(self):
        return f'gamma_{self.k}={self.gamma:.6g} (beta={self.beta})'


def sample_gamma_decomposition(stream, k, beta):
    """ Draw (Z, Gamma_a) with Z a standard complex Gaussian built as sqrt(E) e^{i Theta} and
    Gamma_a ~ Gamma(beta (k+1) / 2). The coefficient Z / sqrt(|Z|^2 + Gamma_a) then has the law of gamma_k. """
    beta = check_beta(beta)
    if k < 0:
        raise ArgumentError(f'Coefficient index must be nonnegative, got {k}')
    gen = stream.generator
    e = gen.standard_exponential()
    gamma_a = gen.standard_gamma(modulus_shape(k, beta))
    theta = TWO_PI * gen.random()
    return np.sqrt(e) * np.exp(1j * theta), float(gamma_a)


def sample_verblunsky(stream, k, beta):
    """ gamma_k = sqrt(E / (E + Gamma)) e^{i Theta}, with E ~ Exp(1), Gamma ~ Gamma(beta (k+1)/2) and
    Theta ~ Unif[0, 2pi) independent. """
    z, gamma_a = sample_gamma_decomposition(stream, k, beta)
    return Verblunsky(k=k, beta=float(beta), gamma=complex(z / np.sqrt(abs(z) ** 2 + gamma_a)))


def sample_verblunsky_block(stream, k0, count, beta):
    """ Draw gamma_{k0}, ..., gamma_{k0 + count - 1} with vectorized draws, in the order all exponentials,
    all gammas, all phases. """
    beta = check_beta(beta)
    gen = stream.generator
    ks = np.arange(k0, k0 + count)
    e = gen.standard_exponential(count)
    g = gen.standard_gamma(modulus_shape(ks, beta))
    theta = TWO_PI * gen.random(count)
    return np.sqrt(e / (e + g)) * np.exp(1j * theta)


def sample_std_complex_gaussian(stream, size=None):
    """ Z = X + iY with X, Y independent N(0, 1/2). """
    xy = stream.generator.normal(scale=np.sqrt(0.5), size=(2,) if size is None else (2, size))
    z = xy[0] + 1j * xy[1]
    return complex(z) if size is None else z


def sample_uniform_phase(stream, size=None):
    """ A uniform point of the unit circle. """
    return np.exp(1j * TWO_PI * stream.generator.random(size))
