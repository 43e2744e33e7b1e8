import hashlib
import sys

import numpy as np


def int_to_bytes(value):
    return value.to_bytes((value.bit_length() + 7) // 8, 'big', signed=True) or b'\0'


def _encode(elem):
    if isinstance(elem, str):
        return elem.encode()
    if isinstance(elem, (bool, np.bool_)):
        return b'\1' if elem else b'\0'
    if isinstance(elem, (int, np.integer)):
        return int_to_bytes(int(elem))
    if isinstance(elem, (float, np.floating)):
        return float(elem).hex().encode()
    return str(elem).encode()


def consistent_hash(iterable):
    """ A hash of the elements that does not depend on the interpreter's hash seed. """
    h = hashlib.sha256()
    for elem in iterable:
        h.update(_encode(elem))
        h.update(b'\x1f')
    return int(h.hexdigest(), base=16) & (2**sys.hash_info.width - 1)


def config_fingerprint(values):
    """ Hex fingerprint of a flat key-value mapping, independent of key order. """
    flat = []
    for key in sorted(values):
        flat.extend([key, values[key]])
    return f'{consistent_hash(flat):016x}'
