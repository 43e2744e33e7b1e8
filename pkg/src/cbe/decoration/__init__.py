
from .config import SdeConfig
from .sde import DecorationVariant, DecorationPath, GapTrajectory, simulate_coupled, simulate_flat, \
    phase_gap_dynamics, complex_increments
from .events import BarrierOutcome, barrier_event
from .sampling import DecorationSamples, sample_decoration, decoration_from_path, decoration_intensity, \
    intensity_window, intensity_mass, decorated_poisson_intensity
from .rays import OneRayResult, one_ray_probability, predicted_shape
from .io import write_path, read_path

__all__ = ['SdeConfig', 'DecorationVariant', 'DecorationPath', 'GapTrajectory', 'simulate_coupled', 'simulate_flat',
           'phase_gap_dynamics', 'complex_increments', 'BarrierOutcome', 'barrier_event', 'DecorationSamples',
           'sample_decoration', 'decoration_from_path', 'decoration_intensity', 'intensity_window',
           'intensity_mass', 'decorated_poisson_intensity', 'OneRayResult', 'one_ray_probability',
           'predicted_shape', 'write_path', 'read_path']
