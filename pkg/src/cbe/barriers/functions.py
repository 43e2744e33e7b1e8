"""
 Deterministic barrier and envelope functions.

 All evaluators are vectorized over their time (or index) argument and raise DomainError outside the stated domain.
"""
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

import numpy as np

from ..errors import ArgumentError, DomainError
from ..random import check_beta

EXACT_HARMONIC_LIMIT = 10 ** 6
EULER_GAMMA = 0.57721566490153286061


class BarrierKind(Enum):
    UPPER_ALL = 'upper_all'
    BANANA_UPPER = 'banana_upper'
    BANANA_LOWER = 'banana_lower'
    ENVELOPE_UPPER = 'envelope_upper'
    ENVELOPE_LOWER = 'envelope_lower'
    DECORATION_UPPER = 'decoration_upper'
    DECORATION_LOWER = 'decoration_lower'
    DECORATION_END = 'decoration_end'
    BROWNIAN_END = 'brownian_end'

    def __str__(self):
        return self.value


@lru_cache(maxsize=1)
def _harmonic_table():
    return np.concatenate([[0.0], np.cumsum(1.0 / np.arange(1, EXACT_HARMONIC_LIMIT + 1))])


def harmonic_number(k):
    """ H_k by summation up to 10^6 and by log k + gamma + 1/(2k) beyond. """
    k = np.asarray(k)
    if np.any(k < 0):
        raise DomainError('harmonic number index', k, '[0, inf)')
    exact = _harmonic_table()[np.minimum(k, EXACT_HARMONIC_LIMIT).astype(np.int64)]
    safe = np.maximum(k, 1).astype(float)
    value = np.where(k <= EXACT_HARMONIC_LIMIT, exact, np.log(safe) + EULER_GAMMA + 0.5 / safe)
    return float(value) if value.ndim == 0 else value


def _power(x, exponent):
    return np.power(np.maximum(x, 0.0), exponent)


@dataclass(frozen=True)
class BarrierSpec:
    """ A barrier function and the parameters it depends on.

    ``n`` is the size for the upper, banana and Brownian-end barriers, ``size`` the horizon N of the
    envelopes, ``t_plus`` and ``k5`` the final time and lattice parameter of the decoration barriers.
    """
    kind: BarrierKind
    n: Optional[int] = None
    p: int = 1
    size: Optional[int] = None
    t_plus: Optional[float] = None
    k5: int = 4

    def __post_init__(self):
        kind = BarrierKind(self.kind)
        object.__setattr__(self, 'kind', kind)
        if kind in (BarrierKind.UPPER_ALL, BarrierKind.BANANA_UPPER, BarrierKind.BANANA_LOWER,
                    BarrierKind.BROWNIAN_END) and (self.n is None or self.n < 3):
            raise ArgumentError(f'Barrier {kind} needs a size n >= 3, got {self.n}')
        if kind in (BarrierKind.ENVELOPE_UPPER, BarrierKind.ENVELOPE_LOWER) and (self.size is None or self.size < 2):
            raise ArgumentError(f'Barrier {kind} needs a horizon N >= 2, got {self.size}')
        if kind in (BarrierKind.DECORATION_UPPER, BarrierKind.DECORATION_LOWER, BarrierKind.DECORATION_END) \
                and self.t_plus is None:
            raise ArgumentError(f'Barrier {kind} needs the final time T_+')
        if self.p < 1:
            raise ArgumentError(f'Banana barriers need p >= 1, got {self.p}')

    def value(self, x):
        return barrier_value(self, x)


def _check_domain(x, lo, hi, what):
    if np.any(x < lo) or np.any(x > hi):
        raise DomainError(what, x, f'[{lo}, {hi}]')


def upper_all(k, n):
    """ A_k = H_k + H_k^{1/100} while H_k <= log(n)/2, H_k + (H_n - H_k)^{1/100} - (3/4) log n after. """
    k = np.asarray(k)
    _check_domain(k, 0, n, 'upper barrier index')
    hk, hn = harmonic_number(k), harmonic_number(n)
    half = 0.5 * np.log(n)
    return np.where(hk <= half, hk + _power(hk, 0.01), hk + _power(hn - hk, 0.01) - 0.75 * np.log(n))


def banana_exponent(p, sign):
    """ 1/2 - sign p/(2p+1), sign = +1 for the upper barrier. """
    return 0.5 - sign * p / (2.0 * p + 1.0)


def banana(t, n, p, sign):
    t = np.asarray(t, dtype=float)
    log_n = np.log(n)
    _check_domain(t, 0.0, log_n, 'banana barrier time')
    a = banana_exponent(p, sign)
    return np.where(t <= 0.5 * log_n, t - _power(t, a),
                    t - _power(log_n - t, a) - 0.75 * np.log(log_n))


def envelope(k, size, exponent):
    """ u_k (exponent 1/10) and l_k (exponent 9/10) of the two-sided envelope with horizon N. """
    k = np.asarray(k)
    _check_domain(k, 0, size, 'envelope index')
    return np.where(k <= size // 2, -_power(k, exponent), -_power(size - k, exponent) - 0.75 * np.log(size))


def decoration_envelope(t, t_plus, sign):
    """ (t - T_+) - (T_+ - t)^{1/2 - sign 3/7}. """
    t = np.asarray(t, dtype=float)
    if np.any(t > t_plus):
        raise DomainError('decoration barrier time', t, f'(-inf, {t_plus}]')
    return (t - t_plus) - _power(t_plus - t, 0.5 - sign * 3.0 / 7.0)


def decoration_end(t, t_plus, k5):
    """ t - T_+ + (T_+ - t + (log k5)^50)^{1/50}. """
    t = np.asarray(t, dtype=float)
    if np.any(t > t_plus):
        raise DomainError('decoration barrier time', t, f'(-inf, {t_plus}]')
    return t - t_plus + _power(t_plus - t + np.log(k5) ** 50, 0.02)


def brownian_end(t, n, k5):
    """ t - (3/4) log log n + (1/sqrt 2) (t (H_n - t + (log k5)^50) / H_n)^{1/50}. """
    t = np.asarray(t, dtype=float)
    hn = harmonic_number(n)
    _check_domain(t, 0.0, hn, 'Brownian barrier time')
    return t - 0.75 * np.log(np.log(n)) + _power(t * (hn - t + np.log(k5) ** 50) / hn, 0.02) / np.sqrt(2.0)


def barrier_value(spec, x):
    kind = spec.kind
    if kind is BarrierKind.UPPER_ALL:
        value = upper_all(x, spec.n)
    elif kind is BarrierKind.BANANA_UPPER:
        value = banana(x, spec.n, spec.p, +1)
    elif kind is BarrierKind.BANANA_LOWER:
        value = banana(x, spec.n, spec.p, -1)
    elif kind is BarrierKind.ENVELOPE_UPPER:
        value = envelope(x, spec.size, 0.1)
    elif kind is BarrierKind.ENVELOPE_LOWER:
        value = envelope(x, spec.size, 0.9)
    elif kind is BarrierKind.DECORATION_UPPER:
        value = decoration_envelope(x, spec.t_plus, +1)
    elif kind is BarrierKind.DECORATION_LOWER:
        value = decoration_envelope(x, spec.t_plus, -1)
    elif kind is BarrierKind.DECORATION_END:
        value = decoration_end(x, spec.t_plus, spec.k5)
    else:
        value = brownian_end(x, spec.n, spec.k5)
    return float(value) if np.ndim(value) == 0 else value


def entrance_window(k2, beta):
    """ (s_-, s_+) with s_pm = sqrt(8/beta) (log k2 - (log k2)^{0.5 -+ 0.01}). """
    beta = check_beta(beta)
    if k2 < 3:
        raise DomainError('entrance time k2', k2, '[3, inf)')
    log_k2 = np.log(k2)
    scale = np.sqrt(8.0 / beta)
    return float(scale * (log_k2 - log_k2 ** 0.51)), float(scale * (log_k2 - log_k2 ** 0.49))
