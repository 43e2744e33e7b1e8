import numpy as np
import pytest

from cbe.errors import ArgumentError, InvalidBeta
from cbe.random import new_stream, sample_verblunsky, sample_verblunsky_block, sample_std_complex_gaussian, \
    sample_uniform_phase, modulus_shape

from ..common.montecarlo import within_se


def test_streams_are_reproducible():
    a = new_stream(42, 7).uniform(100)
    b = new_stream(42, 7).uniform(100)
    assert np.array_equal(a, b)


def test_distinct_stream_ids_are_independent():
    a = new_stream(42, 0).uniform(100)
    b = new_stream(42, 1).uniform(100)
    assert not np.allclose(a, b)
    assert abs(np.corrcoef(new_stream(1, 0).uniform(10000), new_stream(1, 1).uniform(10000))[0, 1]) < 0.05


def test_position_counts_uniform_draws():
    stream = new_stream(3)
    assert stream.position == 0
    stream.uniform(7)
    assert stream.position == 7


@pytest.mark.parametrize("position", [0, 1, 4, 5, 13])
def test_advance_to_matches_replay(position):
    reference = new_stream(9, 2).uniform(position + 6)
    stream = new_stream(9, 2).advance_to(position)
    assert np.array_equal(stream.uniform(6), reference[position:])


def test_advance_backwards_replays():
    stream = new_stream(9, 2)
    first = stream.uniform(10)
    stream.advance_to(0)
    assert np.array_equal(stream.uniform(10), first)
    stream.advance_to(3).fast_forward(2)
    assert stream.position == 5
    assert stream.uniform() == first[5]


def test_spawn_keeps_seed():
    stream = new_stream(5, 1)
    sibling = stream.spawn(8)
    assert sibling.seed == 5 and sibling.stream_id == 8
    assert np.array_equal(sibling.uniform(4), new_stream(5, 8).uniform(4))


@pytest.mark.parametrize("seed", [-1, 2 ** 64, 1.5])
def test_invalid_seed(seed):
    with pytest.raises(ArgumentError):
        new_stream(seed)


def test_verblunsky_inside_unit_disk():
    stream = new_stream(11)
    for k in (0, 1, 10, 1000):
        assert abs(sample_verblunsky(stream, k, 2.0).gamma) < 1.0


@pytest.mark.parametrize("beta, k", [(2.0, 0), (1.0, 3), (4.0, 10)])
def test_verblunsky_modulus_mean(beta, k):
    # |gamma_k|^2 ~ Beta(1, b) has mean 1 / (1 + b)
    stream = new_stream(12)
    values = [abs(sample_verblunsky(stream, k, beta).gamma) ** 2 for _ in range(20000)]
    assert within_se(values, 1.0 / (1.0 + modulus_shape(k, beta)))


def test_verblunsky_block_modulus_mean():
    stream = new_stream(13)
    block = np.concatenate([sample_verblunsky_block(stream, 0, 4, 2.0) for _ in range(5000)]).reshape(-1, 4)
    for k in range(4):
        assert within_se(np.abs(block[:, k]) ** 2, 1.0 / (1.0 + modulus_shape(k, 2.0)))


def test_invalid_beta():
    with pytest.raises(InvalidBeta):
        sample_verblunsky(new_stream(0), 0, 0.0)
    with pytest.raises(ArgumentError):
        sample_verblunsky_block(new_stream(0), 0, 3, -1.0)


def test_complex_gaussian_and_phase():
    z = sample_std_complex_gaussian(new_stream(14), 50000)
    assert within_se(np.abs(z) ** 2, 1.0)
    assert within_se(z.real, 0.0)
    phases = sample_uniform_phase(new_stream(15), 1000)
    assert np.allclose(np.abs(phases), 1.0)
