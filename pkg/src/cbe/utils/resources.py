"""
 Timing and memory accounting for long Monte Carlo runs.
"""
import contextlib
import logging
import os
import time

from ..errors import ResourceBudgetExceeded

MEM_CAP_VARIABLE = 'CBE_MEM_CAP_MB'
MB = 1024 * 1024


def get_mem_usage():
    """ Return the resident memory as reported by psutil, or None if psutil is not available on the platform. """
    try:
        import psutil  # pylint: disable=import-outside-toplevel
    except ImportError:
        return None
    return psutil.Process().memory_info().rss


def memory_cap_mb(default=None):
    """ The declared memory cap in MB, taken from the CBE_MEM_CAP_MB environment variable. """
    value = os.environ.get(MEM_CAP_VARIABLE)
    if value is None or value.strip() == '':
        return default
    return float(value)


def check_memory_budget(requested_bytes, cap_mb=None, what='operation'):
    """ Raise if an allocation of ``requested_bytes`` on top of the current resident memory would exceed the cap.
    A cap of None means no cap. """
    cap_mb = memory_cap_mb() if cap_mb is None else cap_mb
    if cap_mb is None:
        return
    current = get_mem_usage() or 0
    requested_mb = (requested_bytes + current) / MB
    if requested_mb > cap_mb:
        logging.debug(f'Memory budget check failed for {what}: {requested_mb:.1f}MB > {cap_mb:.1f}MB')
        raise ResourceBudgetExceeded(requested_mb, cap_mb)


class Timer:
    def __init__(self):
        self.start_time = time.time()
        self.start_clock = self._clock()
        self.start_mem = get_mem_usage()

    @staticmethod
    def _clock():
        times = os.times()
        return times[0] + times[1]

    def elapsed(self):
        return time.time() - self.start_time

    def cpu(self):
        return self._clock() - self.start_clock

    def as_dict(self):
        return {'wall_clock_s': self.elapsed(), 'cpu_s': self.cpu()}

    def __str__(self):
        memory = ''
        if self.start_mem is not None:
            current = get_mem_usage()
            memory = f', rss {current / MB:.1f}MB ({(current - self.start_mem) / MB:+.1f}MB)'
        return f'[{self.cpu():.2f}s CPU, {self.elapsed():.2f}s wall-clock{memory}]'


@contextlib.contextmanager
def timing(text, level=logging.INFO):
    timer = Timer()
    logging.log(level, f"{text}...")
    yield timer
    logging.log(level, f"{text}: {timer}")
