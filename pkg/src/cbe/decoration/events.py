from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..barriers import bridge_crossing_prob, decoration_end, decoration_envelope


@dataclass(frozen=True)
class BarrierOutcome:
    """ Per-window-point flags of the decoration barrier event on the time grid, and optionally the survival
    weights of the continuous-time event given the grid values. """
    flags: np.ndarray
    survival: Optional[np.ndarray] = None

    @property
    def pass_fraction(self):
        return float(np.mean(self.flags))


def _bridge_survival(U, upper, lower, times, variance_rate):
    """ Product over grid steps of the probability that the Brownian bridge between recorded values stays
    strictly between the barriers; an absent lower barrier is given as None. """
    dt = np.diff(times)[:, None] * variance_rate
    gaps_up = upper[:, None] - U
    survival = np.prod(1.0 - bridge_crossing_prob(gaps_up[:-1], gaps_up[1:], dt), axis=0)
    if lower is not None:
        gaps_down = U - lower[:, None]
        survival *= np.prod(1.0 - bridge_crossing_prob(gaps_down[:-1], gaps_down[1:], dt), axis=0)
    return survival


def barrier_event(path, k4=None, k5=None, bridge_correction=False):
    """ The decoration ray event: sqrt(8/beta) A^-_t <= U_t <= sqrt(8/beta) A^+_t on [T_dagger, T_+ - k4] and
    U_t <= sqrt(8/beta) (t - T_+ + (T_+ - t + (log k5)^50)^{1/50}) on [T_+ - k4, T_+], checked on the recorded
    grid. With ``bridge_correction`` the grid check is complemented by the Brownian-bridge crossing probability
    between consecutive grid times. """
    config = path.config
    k4 = config.k4 if k4 is None else k4
    k5 = config.k5 if k5 is None else k5
    scale = config.scale
    t_plus = config.t_plus
    times = path.times
    U = path.U

    banana = (times >= config.t_dagger - 1e-12) & (times <= t_plus - k4)
    tail = times >= t_plus - k4
    flags = np.ones(U.shape[1], dtype=bool)
    if np.any(banana):
        upper = scale * decoration_envelope(times[banana], t_plus, +1)
        lower = scale * decoration_envelope(times[banana], t_plus, -1)
        flags &= np.all((U[banana] >= lower[:, None]) & (U[banana] <= upper[:, None]), axis=0)
    if np.any(tail):
        cap = scale * decoration_end(times[tail], t_plus, k5)
        flags &= np.all(U[tail] <= cap[:, None], axis=0)
    path.barrier_ok = flags

    survival = None
    if bridge_correction:
        variance_rate = 4.0 / config.beta * config.noise_scale ** 2
        survival = flags.astype(float)
        if variance_rate > 0:
            if np.sum(banana) > 1:
                survival *= _bridge_survival(U[banana], scale * decoration_envelope(times[banana], t_plus, +1),
                                             scale * decoration_envelope(times[banana], t_plus, -1),
                                             times[banana], variance_rate)
            if np.sum(tail) > 1:
                survival *= _bridge_survival(U[tail], scale * decoration_end(times[tail], t_plus, k5), None,
                                             times[tail], variance_rate)
    return BarrierOutcome(flags=flags, survival=survival)
