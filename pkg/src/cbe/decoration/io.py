"""
 Decoration path dumps.

 Binary layout (little-endian): a header record holding the configuration {beta, k1, sigma, k4, k5, dt,
 noise_scale, variant, centering, phase} followed by t_len and theta_len, then the arrays times, theta, re L, im L
 and U, all float64, the last three of shape (t_len, theta_len) in row-major order.
"""
import numpy as np

from ..errors import ArgumentError
from ..opuc import Sigma
from .config import SdeConfig
from .sde import DecorationPath, DecorationVariant

HEADER_DTYPE = np.dtype([('beta', '<f8'), ('k1', '<f8'), ('sigma', '<u8'), ('k4', '<f8'), ('k5', '<u8'),
                         ('dt', '<f8'), ('noise_scale', '<f8'), ('variant', '<u8'), ('centering', '<f8'),
                         ('phase', '<f8'), ('t_len', '<u8'), ('theta_len', '<u8')])
_SIGMA_CODES = {Sigma.REAL: 1, Sigma.IMAGINARY: 2}
_VARIANT_CODES = {DecorationVariant.MATCHED: 1, DecorationVariant.FLAT: 2}


def write_path(path, filename):
    config = path.config
    header = np.zeros(1, dtype=HEADER_DTYPE)
    for name in ('beta', 'k1', 'k4', 'k5', 'dt', 'noise_scale'):
        header[name] = getattr(config, name)
    header['sigma'] = _SIGMA_CODES[config.sigma]
    header['variant'] = _VARIANT_CODES[path.variant]
    header['centering'] = path.centering
    header['phase'] = path.phase
    header['t_len'], header['theta_len'] = path.L.shape
    with open(filename, 'wb') as f:
        f.write(header.tobytes())
        for array in (path.times, path.theta, path.L.real, path.L.imag, path.U):
            f.write(np.ascontiguousarray(array, dtype='<f8').tobytes())


def read_path(filename):
    with open(filename, 'rb') as f:
        raw = f.read()
    header = np.frombuffer(raw, dtype=HEADER_DTYPE, count=1)[0]
    t_len, theta_len = int(header['t_len']), int(header['theta_len'])
    arrays = np.frombuffer(raw, dtype='<f8', offset=HEADER_DTYPE.itemsize)
    expected = t_len + theta_len + 3 * t_len * theta_len
    if arrays.size != expected:
        raise ArgumentError(f'Corrupt decoration dump "{filename}": expected {expected} values, got {arrays.size}')
    times, rest = arrays[:t_len], arrays[t_len:]
    theta, rest = rest[:theta_len], rest[theta_len:]
    re_l, im_l, U = rest.reshape(3, t_len, theta_len)
    sigma = {code: s for s, code in _SIGMA_CODES.items()}[int(header['sigma'])]
    variant = {code: v for v, code in _VARIANT_CODES.items()}[int(header['variant'])]
    config = SdeConfig(beta=float(header['beta']), k1=float(header['k1']), sigma=sigma, k4=float(header['k4']),
                       k5=int(header['k5']), dt=float(header['dt']), noise_scale=float(header['noise_scale']),
                       theta=theta.copy())
    return DecorationPath(config=config, variant=variant, times=times.copy(), theta=theta.copy(), L=re_l + 1j * im_l,
                          U=U.copy(), centering=float(header['centering']), phase=float(header['phase']))
