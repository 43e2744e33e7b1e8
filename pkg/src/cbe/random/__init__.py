
from .streams import RngStream, new_stream
from .samplers import Verblunsky, sample_verblunsky, sample_verblunsky_block, sample_gamma_decomposition, \
    sample_std_complex_gaussian, sample_uniform_phase, check_beta, modulus_shape

__all__ = ['RngStream', 'new_stream', 'Verblunsky', 'sample_verblunsky', 'sample_verblunsky_block',
           'sample_gamma_decomposition', 'sample_std_complex_gaussian', 'sample_uniform_phase', 'check_beta',
           'modulus_shape']
