
from .laws import k0, k0_series, k0_asymptotic, fhk_density, fhk_cdf, gumbel_cdf, gumbel_density, \
    two_gumbel_sum_cdf, two_gumbel_sum_density, sample_gumbel, sample_two_gumbel_sum, sample_fhk, LimitKind, \
    LimitLaw, gumbel_scale, density_table, write_density_table
from .gof import GofReport, anderson_darling, gof, shifted_gumbel_fit

__all__ = ['k0', 'k0_series', 'k0_asymptotic', 'fhk_density', 'fhk_cdf', 'gumbel_cdf', 'gumbel_density',
           'two_gumbel_sum_cdf', 'two_gumbel_sum_density', 'sample_gumbel', 'sample_two_gumbel_sum', 'sample_fhk',
           'LimitKind', 'LimitLaw', 'gumbel_scale', 'density_table', 'write_density_table', 'GofReport',
           'anderson_darling', 'gof', 'shifted_gumbel_fit']
