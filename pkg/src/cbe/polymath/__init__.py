
from .poly import CirclePoly, eval_at_roots, circle_max, random_polynomial
from .bernstein import BernsteinRatio, bernstein_ratio
from .fejer import fejer_kernel, fejer_sum_identity
from .interpolation import InterpolationBrackets, interpolation_brackets, brackets_from_values, local_extrema, \
    fit_near_far_constant, check_refinement

__all__ = ['CirclePoly', 'eval_at_roots', 'circle_max', 'random_polynomial', 'BernsteinRatio', 'bernstein_ratio',
           'fejer_kernel', 'fejer_sum_identity', 'InterpolationBrackets', 'interpolation_brackets',
           'brackets_from_values', 'local_extrema', 'fit_near_far_constant', 'check_refinement']
