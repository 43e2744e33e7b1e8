
from .mesh import Mesh, MeshKind
from .recursions import Sigma, prufer_step, relative_prufer_step, field_step, log_factor
from .trajectory import FieldTrajectory, FieldSnapshot, FieldRunner, CoefficientSource, run_field, reflect, \
    dyadic_schedule, check_prufer_structure
from .szego import SzegoPolynomials, szego_coefficients, char_poly_coefficients, simultaneous_roots
from .charpoly import CharPolyEval, eval_char_poly, counting_function, imaginary_log_field, prufer_phase_at, \
    eigenangles, char_poly_roots_angles
from .sampling import sample_eigenangles, sample_two_point_gaps, sample_char_poly_at_one
from .io import write_csv, read_csv, write_binary, read_binary

__all__ = ['Mesh', 'MeshKind', 'Sigma', 'prufer_step', 'relative_prufer_step', 'field_step', 'log_factor',
           'FieldTrajectory', 'FieldSnapshot', 'FieldRunner', 'CoefficientSource', 'run_field', 'dyadic_schedule',
           'check_prufer_structure', 'SzegoPolynomials', 'szego_coefficients', 'char_poly_coefficients',
           'simultaneous_roots', 'CharPolyEval', 'eval_char_poly', 'counting_function', 'imaginary_log_field',
           'prufer_phase_at', 'eigenangles', 'char_poly_roots_angles', 'sample_eigenangles',
           'sample_two_point_gaps', 'sample_char_poly_at_one', 'reflect', 'write_csv',
           'read_csv', 'write_binary', 'read_binary']
