"""
 The field engine: a mesh-indexed state (Psi_k, phi_k, 2 log Phi*_k) advanced by one shared coefficient sequence.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from ..errors import ArgumentError, InvariantViolation, MissingSnapshot
from ..random import check_beta, sample_verblunsky_block
from ..utils.resources import check_memory_budget, timing
from .mesh import Mesh
from .recursions import Sigma, field_step, log_factor, prufer_step, relative_prufer_step

TWO_PI = 2.0 * np.pi
DEFAULT_CHUNK = 4096
# psi, phi, complex 2 log Phi* and the optional relative phase
BYTES_PER_POINT = 8 + 8 + 16 + 8


@dataclass(frozen=True)
class FieldSnapshot:
    k: int
    psi: np.ndarray
    phi: np.ndarray
    logphi_star: np.ndarray
    relative_psi: Optional[np.ndarray] = None


class FieldTrajectory:
    """ Single-owner mutable field state. ``k`` counts the coefficients applied so far; ``logphi_star`` holds the
    complex 2 log Phi*_k(e^{i theta}). """
    def __init__(self, theta, beta, sigma=Sigma.REAL, track_relative=False, mesh=None):
        self.theta = np.asarray(theta, dtype=float)
        self.mesh = mesh
        self.beta = check_beta(beta)
        self.sigma = Sigma.parse(sigma)
        self.k = 0
        self.psi = self.theta.copy()
        self.phi = np.zeros_like(self.theta)
        self.logphi_star = np.zeros(self.theta.shape, dtype=complex)
        self.relative_psi = self.theta.copy() if track_relative else None
        self.checkpoints: Dict[int, FieldSnapshot] = {}
        self.coefficients: Optional[np.ndarray] = None

    @staticmethod
    def initial(mesh_or_theta, beta, sigma=Sigma.REAL, track_relative=False):
        if isinstance(mesh_or_theta, Mesh):
            return FieldTrajectory(mesh_or_theta.points, beta, sigma, track_relative, mesh=mesh_or_theta)
        return FieldTrajectory(mesh_or_theta, beta, sigma, track_relative)

    @property
    def n(self):
        return self.k

    def advance(self, gamma):
        """ Apply gamma_k to every component at once; all updates read the pre-update Psi_k. """
        log_term = log_factor(gamma, self.psi)
        self.phi, self.logphi_star = field_step(self.phi, self.logphi_star, self.psi, gamma, self.sigma, log_term)
        if self.relative_psi is not None:
            self.relative_psi = relative_prufer_step(self.relative_psi, self.theta, gamma)
        self.psi = prufer_step(self.psi, self.theta, gamma, log_term)
        self.k += 1
        return self

    def snapshot(self):
        rel = None if self.relative_psi is None else self.relative_psi.copy()
        snap = FieldSnapshot(self.k, self.psi.copy(), self.phi.copy(), self.logphi_star.copy(), rel)
        self.checkpoints[self.k] = snap
        return snap

    def at(self, k):
        """ The snapshot at step k (the live state if k is the current step). """
        if k == self.k:
            rel = self.relative_psi
            return FieldSnapshot(self.k, self.psi, self.phi, self.logphi_star, rel)
        if k not in self.checkpoints:
            raise MissingSnapshot(k, self.checkpoints.keys())
        return self.checkpoints[k]

    def copy(self):
        other = FieldTrajectory(self.theta, self.beta, self.sigma, mesh=self.mesh)
        other.k = self.k
        other.psi = self.psi.copy()
        other.phi = self.phi.copy()
        other.logphi_star = self.logphi_star.copy()
        other.relative_psi = None if self.relative_psi is None else self.relative_psi.copy()
        other.checkpoints = dict(self.checkpoints)
        return other

    def __str__(self):
        return f'FieldTrajectory(k={self.k}, beta={self.beta}, sigma={self.sigma}, mesh_len={self.theta.size})'
    __repr__ = __str__


def reflect(traj):
    """ The field of the conjugated coefficients, read off the given one through theta -> -theta.

    Conjugating every gamma_k maps Psi_k(theta) to -Psi_k(-theta) and 2 log Phi*_k(theta) to its conjugate at
    -theta. The mesh must be symmetric under theta -> -theta mod 2pi; a phase read at 2pi - theta instead of -theta
    carries an extra 2pi (k+1).
    """
    count = traj.theta.size
    mirrored = np.mod(-traj.theta, TWO_PI)
    perm = np.searchsorted(traj.theta, mirrored - 1e-12)
    perm = np.clip(perm, 0, count - 1)
    if np.any(np.abs(traj.theta[perm] - mirrored) > 1e-9):
        raise ArgumentError('Reflection needs a mesh symmetric under theta -> -theta')
    wraps = TWO_PI * (traj.k + 1) * np.rint((mirrored + traj.theta) / TWO_PI)
    other = FieldTrajectory(traj.theta, traj.beta, traj.sigma, mesh=traj.mesh)
    other.k = traj.k
    other.psi = wraps - traj.psi[perm]
    other.logphi_star = np.conj(traj.logphi_star[perm])
    other.phi = traj.phi[perm] if traj.sigma is Sigma.REAL else -traj.phi[perm]
    if traj.relative_psi is not None:
        other.relative_psi = wraps - traj.relative_psi[perm]
    return other


class CoefficientSource:
    """ Draws gamma_0, gamma_1, ... from a stream in fixed-size blocks, so that the sequence does not depend on how
    consumers split their requests. """
    def __init__(self, stream, beta, chunk=DEFAULT_CHUNK, keep=False, conjugate=False, start=0):
        self.stream = stream
        self.beta = check_beta(beta)
        self.chunk = chunk
        self.keep = keep
        self.conjugate = conjugate
        self.next_index = start
        self._buffer = np.empty(0, dtype=complex)
        self._offset = 0
        self.drawn = []

    def take(self, count):
        out = []
        while count > 0:
            if self._offset == self._buffer.size:
                self._buffer = sample_verblunsky_block(self.stream, self.next_index, self.chunk, self.beta)
                self.next_index += self.chunk
                if self.conjugate:
                    self._buffer = np.conj(self._buffer)
                self._offset = 0
            piece = self._buffer[self._offset:self._offset + count]
            self._offset += piece.size
            count -= piece.size
            out.append(piece)
        gammas = np.concatenate(out) if out else np.empty(0, dtype=complex)
        if self.keep:
            self.drawn.append(gammas)
        return gammas

    @property
    def history(self):
        return np.concatenate(self.drawn) if self.drawn else np.empty(0, dtype=complex)


def dyadic_schedule(n):
    """ Steps 2^j <= n, plus n itself. """
    steps = {2 ** j for j in range(int(np.floor(np.log2(n))) + 1)} if n >= 1 else set()
    steps.add(n)
    return sorted(steps)


def resolve_schedule(schedule, n):
    if schedule is None:
        return []
    if isinstance(schedule, str):
        if schedule != 'dyadic':
            raise ArgumentError(f'Unknown checkpoint schedule "{schedule}"')
        return dyadic_schedule(n)
    steps = sorted({int(k) for k in schedule})
    if steps and (steps[0] < 0 or steps[-1] > n):
        raise ArgumentError(f'Checkpoint steps must lie in [0, {n}], got {steps}')
    return steps


def check_prufer_structure(traj, previous_floor=None, atol=1e-9):
    """ Check the Prüfer monotonicity in theta and, when relative phases are tracked, the three structural facts
    of the relative phase: psi_k >= 0 for theta >= 0, floor(psi_k / 2pi) nondecreasing in k and
    {psi_k}_{2pi} >= theta on [0, 2pi). Returns the list of violated properties and the current floor. """
    violations = []
    order = np.argsort(traj.theta)
    if np.any(np.diff(traj.psi[order]) < -atol):
        violations.append('prufer-monotone')
    floor = None
    if traj.relative_psi is not None:
        rel = traj.relative_psi
        nonneg = traj.theta >= 0
        if np.any(rel[nonneg] < -atol):
            violations.append('relative-nonnegative')
        floor = np.floor((rel + atol) / TWO_PI)
        if previous_floor is not None and np.any(floor < previous_floor):
            violations.append('relative-floor-monotone')
        window = (traj.theta >= 0) & (traj.theta < TWO_PI)
        frac = rel - TWO_PI * floor
        if np.any(frac[window] < traj.theta[window] - atol):
            violations.append('relative-fraction-bound')
    return violations, floor


class FieldRunner:
    """ Incremental driver: advance a trajectory through a coefficient source, taking snapshots on schedule. """
    def __init__(self, trajectory, source, schedule=(), validate=False):
        self.trajectory = trajectory
        self.source = source
        self.schedule = set(schedule)
        self.validate = validate
        self._floor = None
        self.violations = []
        if 0 in self.schedule and trajectory.k == 0:
            trajectory.snapshot()

    def advance(self, steps):
        traj = self.trajectory
        remaining = steps
        while remaining > 0:
            block = self.source.take(min(remaining, self.source.chunk))
            for gamma in block:
                traj.advance(gamma)
                if traj.k in self.schedule:
                    traj.snapshot()
                if self.validate:
                    self._check()
            remaining -= block.size
        return traj

    def _check(self):
        traj = self.trajectory
        violated, self._floor = check_prufer_structure(traj, self._floor)
        if violated:
            self.violations.extend((traj.k, v) for v in violated)
            raise InvariantViolation(violated[0], traj.k)

    def continue_with(self, source):
        """ Keep the current state but draw further coefficients from another source. """
        source.next_index = self.trajectory.k
        return FieldRunner(self.trajectory, source, self.schedule, self.validate)


def estimate_trajectory_bytes(mesh_len, n_checkpoints):
    return mesh_len * BYTES_PER_POINT * (n_checkpoints + 1)


def run_field(stream, n, mesh, sigma=Sigma.REAL, beta=2.0, checkpoint_schedule=None, track_relative=False,
              validate=False, conjugate=False, mem_cap_mb=None, keep_coefficients=False):
    """ Run the field recursions for k = 0..n-1 over one shared coefficient sequence drawn from ``stream``.

    :param checkpoint_schedule: None, 'dyadic' (steps 2^j plus n) or an iterable of steps to snapshot.
    :param conjugate: use conj(gamma_k), which reflects the field theta -> -theta.
    :param mem_cap_mb: memory cap in MB for mesh x checkpoints; defaults to CBE_MEM_CAP_MB.
    """
    if n < 1:
        raise ArgumentError(f'Field runs need n >= 1, got {n}')
    schedule = resolve_schedule(checkpoint_schedule, n)
    mesh_len = len(mesh) if isinstance(mesh, Mesh) else np.asarray(mesh).size
    check_memory_budget(estimate_trajectory_bytes(mesh_len, len(schedule)), mem_cap_mb, what='field trajectory')

    traj = FieldTrajectory.initial(mesh, beta, sigma, track_relative)
    source = CoefficientSource(stream, beta, keep=keep_coefficients, conjugate=conjugate)
    runner = FieldRunner(traj, source, schedule, validate)
    with timing(f'Field run n={n} on {mesh_len} mesh points, {len(schedule)} checkpoints', level=logging.DEBUG):
        runner.advance(n)
    if keep_coefficients:
        traj.coefficients = source.history
    return traj
