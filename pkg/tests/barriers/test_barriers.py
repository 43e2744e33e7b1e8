import numpy as np
import pytest

from cbe.barriers import BarrierKind, BarrierSpec, barrier_value, harmonic_number, upper_all, banana, \
    banana_exponent, envelope, decoration_envelope, decoration_end, brownian_end, entrance_window
from cbe.errors import ArgumentError, DomainError


def test_harmonic_numbers():
    assert harmonic_number(0) == 0.0
    assert harmonic_number(1) == 1.0
    assert harmonic_number(10) == pytest.approx(sum(1.0 / k for k in range(1, 11)))
    assert harmonic_number(2 * 10 ** 6) == pytest.approx(harmonic_number(10 ** 6) + np.log(2.0), abs=1e-6)
    assert np.allclose(harmonic_number(np.array([1, 2, 3])), [1.0, 1.5, 11.0 / 6.0])
    with pytest.raises(DomainError):
        harmonic_number(-1)


def test_upper_all():
    n = 1000
    k = np.arange(n + 1)
    values = upper_all(k, n)
    assert values[0] == 0.0
    assert values[-1] == pytest.approx(harmonic_number(n) - 0.75 * np.log(n))
    with pytest.raises(DomainError):
        upper_all(n + 1, n)


def test_banana():
    assert banana_exponent(1, +1) == pytest.approx(1.0 / 6.0)
    assert banana_exponent(1, -1) == pytest.approx(5.0 / 6.0)
    n = 10 ** 4
    t = np.linspace(1.0, np.log(n) / 2, 20)
    assert np.all(banana(t, n, 1, +1) >= banana(t, n, 1, -1))
    with pytest.raises(DomainError):
        banana(np.log(n) + 1.0, n, 1, +1)


def test_envelopes():
    size = 100
    assert envelope(0, size, 0.1) == 0.0
    assert envelope(size, size, 0.9) == pytest.approx(-0.75 * np.log(size))
    assert envelope(10, size, 0.9) < envelope(10, size, 0.1)


def test_decoration_barriers():
    t_plus = 5.0
    assert decoration_envelope(t_plus, t_plus, +1) == 0.0
    t = np.linspace(0.0, 4.0, 9)
    assert np.all(decoration_envelope(t, t_plus, +1) >= decoration_envelope(t, t_plus, -1))
    assert decoration_end(t_plus, t_plus, 4) == pytest.approx(np.log(4))
    with pytest.raises(DomainError):
        decoration_envelope(t_plus + 0.1, t_plus, +1)
    with pytest.raises(DomainError):
        decoration_end(t_plus + 0.1, t_plus, 4)


def test_brownian_end():
    n = 1000
    assert brownian_end(0.0, n, 4) == pytest.approx(-0.75 * np.log(np.log(n)))
    with pytest.raises(DomainError):
        brownian_end(harmonic_number(n) + 1.0, n, 4)


def test_entrance_window():
    low, high = entrance_window(1000, 2.0)
    assert low < high < 2.0 * np.log(1000)
    with pytest.raises(DomainError):
        entrance_window(2, 2.0)


def test_barrier_spec():
    spec = BarrierSpec('upper_all', n=100)
    assert spec.kind is BarrierKind.UPPER_ALL
    assert isinstance(spec.value(10), float)
    assert barrier_value(spec, 10) == pytest.approx(float(upper_all(10, 100)))
    assert np.allclose(BarrierSpec(BarrierKind.DECORATION_LOWER, t_plus=3.0).value(np.array([0.0, 1.0])),
                       decoration_envelope(np.array([0.0, 1.0]), 3.0, -1))
    with pytest.raises(ArgumentError):
        BarrierSpec(BarrierKind.UPPER_ALL)
    with pytest.raises(ArgumentError):
        BarrierSpec(BarrierKind.ENVELOPE_UPPER, size=1)
    with pytest.raises(ArgumentError):
        BarrierSpec(BarrierKind.DECORATION_END)
    with pytest.raises(ValueError):
        BarrierSpec('no-such-barrier', n=10)
