import numpy as np

from cbe.experiments import build_config, run, run_kernels, with_kernel
from cbe.experiments.kernels import summarize
from cbe.polymath import fejer_kernel


def _corrupted_fejer(m, z):
    return fejer_kernel(m, z) * (1.0 + 1e-6 * np.real(z))


def test_kernels_pass():
    results = run_kernels(polynomials=60, max_degree=6)
    assert [r.name for r in results] == ['fejer-sum-identity', 'bernstein-ratio', 'interpolation-bracket',
                                         'mgf-closed-form', 'bridge-density-mass', 'k0-cross-check', 'fhk-mass']
    assert all(r.passed for r in results), [r.as_dict() for r in results if not r.passed]


def test_corrupted_fejer_kernel_fails():
    results = run_kernels(polynomials=10, max_degree=4, kernels=with_kernel('fejer', _corrupted_fejer))
    failed = [r.name for r in results if not r.passed]
    assert failed == ['fejer-sum-identity']


def test_corrupted_mgf_fails_the_summary():
    config = build_config('verify-kernels', overrides={'polynomials': 10, 'max_degree': 4})
    kernels = with_kernel('mgf', lambda s, t, j, beta: 1.0 + 1e-3 * s)
    aggregates, passed = summarize(config, {}, kernels=kernels)
    assert not passed
    assert aggregates['failures'] == ['mgf-closed-form']


def test_verify_kernels_experiment():
    report = run(build_config('verify-kernels', overrides={'polynomials': 30, 'max_degree': 5}))
    assert report.passed
    assert report.aggregates['failures'] == []
    assert len(report.aggregates['kernels']) == 7
