import numpy as np

from ..errors import ArgumentError


def fejer_kernel(m, z):
    """ F_m(z) = (1/m) |1 - z^m|^2 / |1 - z|^2 on the unit circle, with F_m(1) = m.

    Evaluated through the equivalent form (1/m) sin^2(m t / 2) / sin^2(t / 2), z = e^{it}, which stays accurate
    next to z = 1.
    """
    if m < 1:
        raise ArgumentError(f'Fejér kernel order must be positive, got {m}')
    t = np.angle(np.asarray(z, dtype=complex))
    half = np.sin(t / 2.0)
    near_one = np.abs(half) < 1e-12
    safe = np.where(near_one, 1.0, half)
    values = np.where(near_one, float(m), np.sin(m * t / 2.0) ** 2 / (m * safe ** 2))
    return float(values) if np.ndim(values) == 0 else values


def fejer_sum_identity(m, r, t, kernel=fejer_kernel):
    """ |sum_{j=1}^{rm} F_m(e(t + j/(rm))) - rm| with e(x) = exp(2 pi i x). """
    if m < 1 or r < 1:
        raise ArgumentError(f'Fejér sums need m, r >= 1, got m={m}, r={r}')
    count = r * m
    points = np.exp(2j * np.pi * (t + np.arange(1, count + 1) / count))
    return float(abs(np.sum(kernel(m, points)) - count))
