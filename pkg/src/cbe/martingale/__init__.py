
from .mgf import MgfSpec, NormalizerSums, mgf, mgf_spec, log_mgf, log_mgf_h, log_mgf_h_derivative, \
    digamma_derivative, normalizer_sums, s_beta
from .derivative import MartingaleSnapshot, check_dyadic, periodic_trapezoid, derivative_density, \
    proper_martingale, truncation_mass, martingale_snapshot

__all__ = ['MgfSpec', 'NormalizerSums', 'mgf', 'mgf_spec', 'log_mgf', 'log_mgf_h', 'log_mgf_h_derivative',
           'digamma_derivative', 'normalizer_sums', 's_beta', 'MartingaleSnapshot', 'check_dyadic',
           'periodic_trapezoid', 'derivative_density', 'proper_martingale', 'truncation_mass', 'martingale_snapshot']
