"""
 Reproducible random streams.

 Every stream is a Philox counter-based generator keyed by the pair (seed, stream_id), so that replicas never
 share state and any position of a stream can be reached without replaying it.
"""
import numpy as np

from ..errors import ArgumentError

_UINT64 = 2 ** 64
_WORDS_PER_BLOCK = 4  # Philox4x64 produces four 64-bit words per counter increment


def _check_uint64(name, value):
    if not isinstance(value, (int, np.integer)) or not 0 <= int(value) < _UINT64:
        raise ArgumentError(f'{name} must be a 64-bit unsigned integer, got {value!r}')
    return int(value)


class RngStream:
    """ A single-owner random stream identified by (seed, stream_id).

    The stream exposes a numpy ``Generator`` through ``generator``; ``position`` counts the number of 64-bit
    words consumed so far, which for uniform doubles is exactly the number of draws.
    """
    def __init__(self, seed, stream_id=0):
        self.seed = _check_uint64('seed', seed)
        self.stream_id = _check_uint64('stream_id', stream_id)
        key = np.random.SeedSequence([self.seed, self.stream_id]).generate_state(2, dtype=np.uint64)
        self.bit_generator = np.random.Philox(key=key)
        self.generator = np.random.Generator(self.bit_generator)

    @property
    def position(self):
        state = self.bit_generator.state
        counter = int(state['state']['counter'][0])
        buffer_pos = int(state['buffer_pos'])
        return _WORDS_PER_BLOCK * counter + buffer_pos - _WORDS_PER_BLOCK

    def advance_to(self, position):
        """ Move the stream so that the next draw is the one a fresh stream would produce after ``position``
        64-bit words. Works in both directions. """
        position = _check_uint64('position', position)
        block, remainder = divmod(position, _WORDS_PER_BLOCK)
        state = self.bit_generator.state
        state['state']['counter'] = np.array([block, 0, 0, 0], dtype=np.uint64)
        state['buffer_pos'] = _WORDS_PER_BLOCK
        state['has_uint32'] = 0
        state['uinteger'] = 0
        self.bit_generator.state = state
        if remainder:
            self.bit_generator.random_raw(remainder)
        return self

    def fast_forward(self, count):
        return self.advance_to(self.position + int(count))

    def spawn(self, stream_id):
        """ A fresh stream with the same seed and a different stream id. """
        return RngStream(self.seed, stream_id)

    def uniform(self, size=None):
        return self.generator.random(size)

    def __str__(self):
        return f'RngStream(seed={self.seed}, stream_id={self.stream_id}, position={self.position})'
    __repr__ = __str__


def new_stream(seed, stream_id=0):
    """ Create a deterministic stream at position 0. """
    return RngStream(seed, stream_id)
