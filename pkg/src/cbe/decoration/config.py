from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..errors import ArgumentError
from ..extremes import k1_hat, k1_plus, m_n
from ..opuc import Sigma
from ..random import check_beta

MAX_DT = 1e-2
DEFAULT_DT_FRACTION = 1e-3


@dataclass
class SdeConfig:
    """ Parameters of the decoration diffusions.

    Times run over [T_-, T_+] with T_- = log(k1/k1+), T_dagger = log(k1/k1_hat) and T_+ = log k1. The window
    [-2pi k1, 0] is sampled with pitch 2pi/(4 k5) unless ``theta`` is given. ``noise_scale`` multiplies the Brownian
    increments, 0 giving the deterministic skeleton. ``n`` selects the centering sqrt(8/beta) m_n of the matched
    variant; without it both variants are centered by sqrt(8/beta) log k1+.
    """
    beta: float
    k1: float
    sigma: Sigma = Sigma.REAL
    k4: float = 5.0
    k5: int = 4
    dt: Optional[float] = None
    noise_scale: float = 1.0
    n: Optional[int] = None
    theta: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        self.beta = check_beta(self.beta)
        self.sigma = Sigma.parse(self.sigma)
        if self.k1 <= np.e:
            raise ArgumentError(f'Decoration windows need k1 > e so that T_- < T_dagger < T_+, got k1={self.k1}')
        if self.k5 < 2:
            raise ArgumentError(f'Lattice parameter k5 must be at least 2, got {self.k5}')
        if self.dt is None:
            self.dt = min(DEFAULT_DT_FRACTION * (self.t_plus - self.t_minus), MAX_DT)
        if not 0 < self.dt <= MAX_DT:
            raise ArgumentError(f'Time step must lie in (0, {MAX_DT}], got dt={self.dt}')
        if self.noise_scale < 0:
            raise ArgumentError(f'Noise scale must be nonnegative, got {self.noise_scale}')
        if self.theta is None:
            count = int(round(4 * self.k5 * self.k1))
            self.theta = np.linspace(-2.0 * np.pi * self.k1, 0.0, count + 1)
        else:
            self.theta = np.asarray(self.theta, dtype=float)
            if np.any(self.theta < -2.0 * np.pi * self.k1 - 1e-12) or np.any(self.theta > 1e-12):
                raise ArgumentError(f'Window points must lie in [-2pi k1, 0] for k1={self.k1}')

    @property
    def t_minus(self):
        return float(np.log(self.k1 / k1_plus(self.k1)))

    @property
    def t_dagger(self):
        return float(np.log(self.k1 / k1_hat(self.k1)))

    @property
    def t_plus(self):
        return float(np.log(self.k1))

    @property
    def log_k1_plus(self):
        return float(np.log(k1_plus(self.k1)))

    @property
    def scale(self):
        """ sqrt(8/beta). """
        return float(np.sqrt(8.0 / self.beta))

    @property
    def flat_centering(self):
        return self.scale * self.log_k1_plus

    @property
    def matched_centering(self):
        return self.scale * m_n(self.n) if self.n is not None else self.flat_centering

    @property
    def pitch(self):
        return 2.0 * np.pi / (4 * self.k5)

    def time_grid(self):
        steps = max(int(np.ceil((self.t_plus - self.t_minus) / self.dt - 1e-9)), 1)
        return np.linspace(self.t_minus, self.t_plus, steps + 1)

    def __str__(self):
        return (f'SdeConfig(beta={self.beta}, k1={self.k1}, sigma={self.sigma}, k4={self.k4}, k5={self.k5}, '
                f'dt={self.dt:.3g}, window={self.theta.size})')
    __repr__ = __str__
