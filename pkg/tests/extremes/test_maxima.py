import json

import numpy as np
import pytest

from cbe.errors import ArgumentError, MeshError
from cbe.extremes import Statistic, centering, m_n, k1_plus, k1_hat, n1_plus, arc_decomposition, global_max, \
    arc_maxima, extract_extremal_process, imaginary_extremes, counting_deviation_range, write_decorations, \
    local_extremes
from cbe.opuc import Mesh, Sigma, imaginary_log_field, run_field
from cbe.random import new_stream

from ..common.montecarlo import small_field


def test_centering():
    assert m_n(100) == pytest.approx(np.log(100) - 0.75 * np.log(np.log(100)))
    center = centering(100, 2.0)
    assert center.scale == pytest.approx(2.0)
    assert center.value == pytest.approx(2.0 * m_n(100))
    assert centering(100, 2.0, Statistic.LOG_ABS).scale == pytest.approx(1.0)
    with pytest.raises(ArgumentError):
        m_n(2)


def test_k1_scales_are_ordered():
    for k1 in (16, 256, 4096):
        assert k1 < k1_hat(k1) < k1_plus(k1)
    assert n1_plus(10 ** 6, 16) == int(np.floor(10 ** 6 / k1_plus(16)))


def test_arc_decomposition():
    arcs = arc_decomposition(10, 3)
    assert arcs.count == 4
    assert arcs.ends[-1] == pytest.approx(2 * np.pi)
    assert arcs.theta_sup[-1] == pytest.approx(0.0)
    assert list(arcs.arc_of([0.0, 2 * np.pi * 0.29, 2 * np.pi * 0.31, 2 * np.pi * 0.95])) == [1, 1, 2, 4]
    with pytest.raises(ArgumentError):
        arc_decomposition(10, 11)


def test_global_max_brackets_the_continuum_max():
    n, m = 16, 4
    coarse = run_field(new_stream(20), n, Mesh.uniform(n, 2 * m * n * 4))
    fine = run_field(new_stream(20), n, Mesh.uniform(n, 2 * m * n * 64))
    result = global_max(coarse, m=m)
    continuum = float(np.max(fine.phi))
    assert result.value <= continuum + 1e-9
    assert continuum <= result.upper_bound + 1e-9
    assert result.upper_bound == pytest.approx(result.value + np.log(m / (m - 1)))


def test_global_max_needs_roots_of_unity():
    traj = small_field(seed=1, n=16, points=100)
    with pytest.raises(MeshError):
        global_max(traj, m=4)
    imaginary = small_field(seed=1, n=16, points=128, sigma=Sigma.IMAGINARY)
    with pytest.raises(ArgumentError):
        global_max(imaginary)


def test_arc_maxima_match_brute_force():
    n, k1 = 32, 4
    traj = run_field(new_stream(21), n, Mesh.arcs(n, k1, 4))
    arcs = arc_decomposition(n, k1)
    result = arc_maxima(traj, arcs, chunk=3)
    ids = arcs.arc_of_index(np.arange(traj.theta.size), traj.theta.size)
    for j in range(arcs.count):
        assert result.values[j] == np.max(traj.phi[ids == j + 1])
        assert ids[result.argmax_index[j]] == j + 1
    assert np.max(result.values) == np.max(traj.phi)


def test_extremal_process():
    n, k1 = 32, 4
    traj = run_field(new_stream(22), n, Mesh.arcs(n, k1, 4))
    arcs = arc_decomposition(n, k1)
    config = extract_extremal_process(traj, arcs)
    center = centering(n, 2.0)
    assert len(config) == arcs.count
    assert np.allclose(config.heights, arc_maxima(traj, arcs).values - center.value)
    assert np.allclose(config.thetas, arcs.theta_sup)
    # the decoration ends at the arc supremum
    for point, idx in zip(config, np.arange(1, arcs.count + 1) * (traj.theta.size // arcs.count)):
        assert abs(point.f[-1]) == pytest.approx(np.exp(traj.phi[idx % traj.theta.size] - center.value))
    with pytest.raises(ArgumentError):
        extract_extremal_process(traj, arc_decomposition(64, k1))


def test_local_extremes_without_heights():
    n, k1 = 32, 4
    traj = run_field(new_stream(23), n, Mesh.arcs(n, k1, 4))
    extremes = local_extremes(traj, arc_decomposition(n, k1), with_heights=False)
    assert [e.j for e in extremes] == list(range(1, 9))
    assert all(e.V_j is None for e in extremes)


def test_imaginary_extremes_and_counting_range():
    traj = small_field(seed=24, n=63, points=1024)
    result = imaginary_extremes(traj)
    assert result.n == 64
    assert result.i_plus + np.sqrt(4.0) * m_n(64) >= result.i_minus - np.sqrt(4.0) * m_n(64)
    field = imaginary_log_field(traj)
    # max over arcs of N(theta2) - N(theta1) - n (theta2 - theta1) is the range of the imaginary field
    assert counting_deviation_range(traj) == pytest.approx(field.max() - field.min(), abs=1e-8)
    assert result.i_plus - result.i_minus == pytest.approx(field.max() - field.min() - 2 * np.sqrt(4.0) * m_n(64))


def test_write_decorations(tmp_path):
    n, k1 = 16, 4
    traj = run_field(new_stream(25), n, Mesh.arcs(n, k1, 4))
    config = extract_extremal_process(traj, arc_decomposition(n, k1))
    filename = tmp_path / 'decorations.json'
    write_decorations(config, str(filename))
    with open(filename, encoding='utf8') as f:
        data = json.load(f)
    assert len(data) == len(config)
    assert all(len(row) == config[0].f.size for row in data)
