"""
 Trajectory snapshot export.

 CSV columns: theta, psi, phi, re_logphistar, im_logphistar.

 Binary layout (little-endian): a header record {n: u8, k: u8, beta: f8, sigma: u8, mesh_len: u8} (sigma is 1 for
 the real direction and 2 for the imaginary one), followed by five contiguous float64 arrays of length mesh_len in
 the CSV column order.
"""
import numpy as np

from ..errors import ArgumentError
from .recursions import Sigma
from .trajectory import FieldSnapshot, FieldTrajectory

CSV_COLUMNS = ('theta', 'psi', 'phi', 're_logphistar', 'im_logphistar')
HEADER_DTYPE = np.dtype([('n', '<u8'), ('k', '<u8'), ('beta', '<f8'), ('sigma', '<u8'), ('mesh_len', '<u8')])
_SIGMA_CODES = {Sigma.REAL: 1, Sigma.IMAGINARY: 2}


def _columns(traj, snapshot):
    return np.column_stack([traj.theta, snapshot.psi, snapshot.phi, snapshot.logphi_star.real,
                            snapshot.logphi_star.imag])


def write_csv(traj, filename, k=None):
    snapshot = traj.at(traj.k if k is None else k)
    np.savetxt(filename, _columns(traj, snapshot), delimiter=',', header=','.join(CSV_COLUMNS), comments='',
               fmt='%.17g')


def read_csv(filename):
    """ Returns the table as a dict of column name to array. """
    table = np.loadtxt(filename, delimiter=',', skiprows=1, ndmin=2)
    return {name: table[:, i] for i, name in enumerate(CSV_COLUMNS)}


def write_binary(traj, filename, n=None, k=None):
    snapshot = traj.at(traj.k if k is None else k)
    header = np.zeros(1, dtype=HEADER_DTYPE)
    header['n'] = traj.k if n is None else n
    header['k'] = snapshot.k
    header['beta'] = traj.beta
    header['sigma'] = _SIGMA_CODES[traj.sigma]
    header['mesh_len'] = traj.theta.size
    with open(filename, 'wb') as f:
        f.write(header.tobytes())
        f.write(np.ascontiguousarray(_columns(traj, snapshot).T, dtype='<f8').tobytes())


def read_binary(filename):
    """ Load a binary dump back into a FieldTrajectory positioned at the dumped step. """
    with open(filename, 'rb') as f:
        raw = f.read()
    header = np.frombuffer(raw, dtype=HEADER_DTYPE, count=1)[0]
    mesh_len = int(header['mesh_len'])
    arrays = np.frombuffer(raw, dtype='<f8', offset=HEADER_DTYPE.itemsize)
    if arrays.size != 5 * mesh_len:
        raise ArgumentError(f'Corrupt trajectory dump "{filename}": expected {5 * mesh_len} values, got {arrays.size}')
    theta, psi, phi, re_log, im_log = arrays.reshape(5, mesh_len)
    sigma = {code: s for s, code in _SIGMA_CODES.items()}[int(header['sigma'])]
    traj = FieldTrajectory(theta.copy(), float(header['beta']), sigma)
    traj.k = int(header['k'])
    traj.psi = psi.copy()
    traj.phi = phi.copy()
    traj.logphi_star = re_log + 1j * im_log
    traj.checkpoints[traj.k] = FieldSnapshot(traj.k, traj.psi, traj.phi, traj.logphi_star)
    return traj, int(header['n'])
