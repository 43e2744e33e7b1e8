from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import ArgumentError
from ..random import check_beta


class Statistic(Enum):
    PHI = 'phi'
    LOG_ABS = 'log_abs'
    IMAG = 'imag'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Centering:
    n: int
    beta: float
    statistic: Statistic
    m_n: float
    scale: float

    @property
    def value(self):
        return self.scale * self.m_n


def m_n(n):
    """ log n - (3/4) log log n. """
    if n < 3:
        raise ArgumentError(f'The centering needs n >= 3 so that log log n is defined, got n={n}')
    return float(np.log(n) - 0.75 * np.log(np.log(n)))


def statistic_scale(beta, statistic):
    statistic = Statistic(statistic)
    if statistic is Statistic.LOG_ABS:
        return float(np.sqrt(2.0 / beta))
    return float(np.sqrt(8.0 / beta))


def centering(n, beta, statistic=Statistic.PHI):
    """ m_n together with the scale of the statistic: sqrt(8/beta) for the field phi (and the imaginary field),
    sqrt(2/beta) for log |X_n|. """
    beta = check_beta(beta)
    statistic = Statistic(statistic)
    return Centering(n=n, beta=beta, statistic=statistic, m_n=m_n(n), scale=statistic_scale(beta, statistic))


def k1_plus(k1):
    """ k1 exp((log k1)^{29/30}). """
    return float(k1 * np.exp(np.log(k1) ** (29.0 / 30.0)))


def k1_hat(k1):
    """ k1 exp((log k1)^{19/20}). """
    return float(k1 * np.exp(np.log(k1) ** (19.0 / 20.0)))


def n1_plus(n, k1):
    return int(np.floor(n / k1_plus(k1)))
