
from .functions import BarrierKind, BarrierSpec, barrier_value, harmonic_number, upper_all, banana, \
    banana_exponent, envelope, decoration_envelope, decoration_end, brownian_end, entrance_window
from .bessel import BesselBridgeSpec, bessel_bridge_density, bessel_bridge_cdf, sample_bessel_bridge, \
    sample_vmf_directions, bridge_grid, bridge_positive_prob, bridge_crossing_prob, fit_tail_constant, log_sinh

__all__ = ['BarrierKind', 'BarrierSpec', 'barrier_value', 'harmonic_number', 'upper_all', 'banana',
           'banana_exponent', 'envelope', 'decoration_envelope', 'decoration_end', 'brownian_end', 'entrance_window',
           'BesselBridgeSpec', 'bessel_bridge_density', 'bessel_bridge_cdf', 'sample_bessel_bridge',
           'sample_vmf_directions', 'bridge_grid', 'bridge_positive_prob', 'bridge_crossing_prob',
           'fit_tail_constant', 'log_sinh']
