
import logging
from .version import __version__, __version_info__
from .errors import CbeError
from .random import RngStream, new_stream
from .opuc import Sigma, Mesh, run_field

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = ['__version__', '__version_info__', 'CbeError', 'RngStream', 'new_stream', 'Sigma', 'Mesh', 'run_field']
