
from .configuration import MarkedPoint, PointConfiguration, FiniteIntensity, write_configuration, read_configuration
from .metrics import arc_distance, dist_point, dist_config, distance_matrix, bottleneck_assignment, \
    average_assignment, ProcessDistance, dist_process_estimate, WeightedMeasure, BoundedLipschitzEstimate, \
    default_dictionary, d_bl
from .poisson import sample_poisson
from .bounds import pp_bound, intensity_factor, intensity_change_bound, WrappedGaussianTv, wrapped_gaussian_density, \
    wrapped_gaussian_tv, wrapped_gaussian_tv_reference, histogram_noise_floor

__all__ = ['MarkedPoint', 'PointConfiguration', 'FiniteIntensity', 'write_configuration', 'read_configuration',
           'arc_distance', 'dist_point', 'dist_config', 'distance_matrix', 'bottleneck_assignment',
           'average_assignment', 'ProcessDistance', 'dist_process_estimate', 'WeightedMeasure',
           'BoundedLipschitzEstimate', 'default_dictionary', 'd_bl', 'sample_poisson', 'pp_bound',
           'intensity_factor', 'intensity_change_bound', 'WrappedGaussianTv', 'wrapped_gaussian_density',
           'wrapped_gaussian_tv', 'wrapped_gaussian_tv_reference', 'histogram_noise_floor']
