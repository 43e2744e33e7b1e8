
from .centering import Statistic, Centering, centering, m_n, statistic_scale, k1_plus, k1_hat, n1_plus
from .arcs import ArcDecomposition, arc_decomposition
from .maxima import GlobalMax, ArcMaxima, LocalExtremum, ImaginaryExtremes, global_max, arc_maxima, \
    decoration_window, extract_extremal_process, V_statistic, local_extremes, imaginary_extremes, \
    counting_deviation_range, write_decorations, uniform_count

__all__ = ['Statistic', 'Centering', 'centering', 'm_n', 'statistic_scale', 'k1_plus', 'k1_hat', 'n1_plus',
           'ArcDecomposition', 'arc_decomposition', 'GlobalMax', 'ArcMaxima', 'LocalExtremum', 'ImaginaryExtremes',
           'global_max', 'arc_maxima', 'decoration_window', 'extract_extremal_process', 'V_statistic',
           'local_extremes', 'imaginary_extremes', 'counting_deviation_range', 'write_decorations', 'uniform_count']
