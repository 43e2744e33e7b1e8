"""
 Coupled decoration diffusions.

 Every window point theta follows
     dL_t(theta) = i theta e^t / k1 g(t) dt + sqrt(4/beta) e^{i Im L_t(theta)} e^{i phase} dW_t
 with one complex Brownian motion W (E|dW|^2 = 2 dt) shared by all theta, and is read through
     U_t(theta) = Re(sigma (L_t(theta) - i theta (e^t - 1) / k1)) - centering.
 The matched variant has g = 1 and a supplied initial profile; the flat variant starts from 0 and has
 g = 1[t >= T_dagger], so that before T_dagger all theta share a single path.
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import ArgumentError, IntegrationError
from ..opuc import Sigma
from ..utils.resources import check_memory_budget


class DecorationVariant(Enum):
    MATCHED = 'matched'
    FLAT = 'flat'

    def __str__(self):
        return self.value


@dataclass
class DecorationPath:
    """ Recorded solution: ``L`` and ``U`` have one row per recorded time and one column per window point. """
    config: object
    variant: DecorationVariant
    times: np.ndarray
    theta: np.ndarray
    L: np.ndarray
    U: np.ndarray
    centering: float
    phase: float = 0.0
    barrier_ok: np.ndarray = None

    @property
    def terminal_L(self):
        return self.L[-1]

    @property
    def terminal_U(self):
        return self.U[-1]


def complex_increments(gen, dt, size=None):
    """ Increments of a standard complex Brownian motion, E|dW|^2 = 2 dt. """
    return np.sqrt(dt) * (gen.standard_normal(size) + 1j * gen.standard_normal(size))


def _gated_exp_integral(t0, t1, gate):
    """ int_{t0}^{t1} e^s 1[s >= gate] ds. """
    lo = max(t0, gate)
    return np.exp(t1) - np.exp(lo) if t1 > lo else 0.0


def project(L, theta, times, sigma, k1, centering):
    """ U = -Re(sigma (L - i theta (e^t - 1) / k1)) - centering, broadcast over (time, theta). """
    shift = 1j * np.outer(np.expm1(times), theta) / k1
    return -(Sigma.parse(sigma).unit * (L - shift)).real - centering


def integrate(config, initial_L, stream, variant, phase=0.0, record_every=1, mem_cap_mb=None):
    times = config.time_grid()
    theta = config.theta
    recorded = np.arange(0, times.size, record_every)
    if recorded[-1] != times.size - 1:
        recorded = np.append(recorded, times.size - 1)
    check_memory_budget(recorded.size * theta.size * 24, mem_cap_mb, what='decoration path')

    gate = config.t_dagger if variant is DecorationVariant.FLAT else -np.inf
    coefficient = np.sqrt(4.0 / config.beta) * np.exp(1j * phase)
    gen = stream.generator
    L = np.broadcast_to(np.asarray(initial_L, dtype=complex), theta.shape).copy()
    out = np.empty((recorded.size, theta.size), dtype=complex)
    out[0] = L
    slot = 1
    for i in range(times.size - 1):
        t0, t1 = times[i], times[i + 1]
        dw = config.noise_scale * complex_increments(gen, t1 - t0)
        L = L + 1j * theta / config.k1 * _gated_exp_integral(t0, t1, gate) + coefficient * np.exp(1j * L.imag) * dw
        if slot < recorded.size and recorded[slot] == i + 1:
            if not np.all(np.isfinite(L)):
                raise IntegrationError(f'Decoration diffusion diverged at t={t1:.6g}')
            out[slot] = L
            slot += 1
    centering = config.flat_centering if variant is DecorationVariant.FLAT else config.matched_centering
    rec_times = times[recorded]
    U = project(out, theta, rec_times, config.sigma, config.k1, centering)
    logging.debug(f'Integrated {variant} decoration diffusion: {times.size - 1} steps, {theta.size} window points')
    return DecorationPath(config=config, variant=variant, times=rec_times, theta=theta, L=out, U=U,
                          centering=centering, phase=phase)


def simulate_coupled(config, initial_L, stream, record_every=1, mem_cap_mb=None):
    """ The matched variant started from ``initial_L`` (one complex value per window point, or a constant). """
    initial = np.asarray(initial_L, dtype=complex)
    if initial.ndim > 0 and initial.shape != config.theta.shape:
        raise ArgumentError(f'Initial profile has shape {initial.shape}, window has {config.theta.shape}')
    return integrate(config, initial, stream, DecorationVariant.MATCHED, 0.0, record_every, mem_cap_mb)


def simulate_flat(config, stream, phase=0.0, record_every=1, mem_cap_mb=None):
    """ The flat variant: L = 0 at T_-, drift switched on at T_dagger, fixed phase folded into the noise. """
    return integrate(config, 0.0, stream, DecorationVariant.FLAT, phase, record_every, mem_cap_mb)


@dataclass
class GapTrajectory:
    times: np.ndarray
    delta: np.ndarray

    @property
    def minimum(self):
        return np.min(self.delta, axis=-1)

    @property
    def maximum(self):
        return np.max(self.delta, axis=-1)


def phase_gap_dynamics(config, stream, initial_gap, theta=0.0, initial_phase=0.0, n_paths=1):
    """ Delta_t = Im L_t(theta) - Im L^o_t(theta) - Im L_{T_-}(theta_j) for the two variants driven by one W:
        d Delta = theta e^t / k1 1[t < T_dagger] dt + sqrt(4/beta) Im((e^{i Im L} - e^{i (Im L - Delta)}) dW),
    integrated jointly with d Im L = theta e^t / k1 dt + sqrt(4/beta) Im(e^{i Im L} dW). One row per path.
    """
    times = config.time_grid()
    gen = stream.generator
    scale = np.sqrt(4.0 / config.beta)
    im_l = np.full(n_paths, float(initial_phase))
    delta = np.full(n_paths, float(initial_gap))
    out = np.empty((n_paths, times.size))
    out[:, 0] = delta
    for i in range(times.size - 1):
        t0, t1 = times[i], times[i + 1]
        dw = config.noise_scale * complex_increments(gen, t1 - t0, n_paths)
        full = np.exp(t1) - np.exp(t0)
        after = _gated_exp_integral(t0, t1, config.t_dagger)
        noise_l = np.exp(1j * im_l) * dw
        noise_o = np.exp(1j * (im_l - delta)) * dw
        delta = delta + theta / config.k1 * (full - after) + scale * (noise_l - noise_o).imag
        im_l = im_l + theta / config.k1 * full + scale * noise_l.imag
        out[:, i + 1] = delta
    return GapTrajectory(times=times, delta=out)
