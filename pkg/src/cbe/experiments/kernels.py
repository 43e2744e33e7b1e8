"""
 verify-kernels: the deterministic acceptance suite.

 Each kernel reads its implementation from a ``KernelSet``, so that a corrupted implementation can be injected and
 shown to fail the suite.
"""
import logging
from dataclasses import dataclass, asdict, replace
from typing import Callable

import numpy as np
from scipy import integrate

from ..barriers import BesselBridgeSpec, bessel_bridge_density
from ..limits import fhk_density, k0, k0_asymptotic, k0_series
from ..martingale import mgf
from ..polymath import bernstein_ratio, circle_max, eval_at_roots, fejer_kernel, fejer_sum_identity, \
    random_polynomial
from ..random import modulus_shape, new_stream
from ..utils.resources import timing
from .registry import Experiment

POLY_STREAM = 1 << 42


@dataclass(frozen=True)
class KernelSet:
    fejer: Callable = fejer_kernel
    mgf: Callable = mgf
    bridge_density: Callable = bessel_bridge_density
    k0: Callable = k0
    fhk_density: Callable = fhk_density


@dataclass(frozen=True)
class KernelResult:
    name: str
    value: float
    threshold: float
    passed: bool

    def as_dict(self):
        return asdict(self)


def _result(name, value, threshold):
    value = float(value)
    return KernelResult(name=name, value=value, threshold=threshold, passed=bool(np.isfinite(value)
                                                                               and value <= threshold))


def check_fejer(kernels, **_):
    worst = 0.0
    for m in range(1, 17):
        for r in (1, 2, 3):
            for t in (0.0, 0.123, 0.5, 0.77):
                worst = max(worst, fejer_sum_identity(m, r, t, kernel=kernels.fejer))
    return _result('fejer-sum-identity', worst, 1e-10)


def _corpus(seed, count, max_degree):
    stream = new_stream(seed, POLY_STREAM)
    degrees = 1 + np.arange(count) % max_degree
    return [random_polynomial(stream, int(d)) for d in degrees]


def check_bernstein(kernels, corpus, **_):
    worst = max(bernstein_ratio(poly).ratio for poly in corpus)
    return _result('bernstein-ratio', worst - 1.0, 1e-6)


def check_interpolation(kernels, corpus, refinements, **_):
    """ Largest relative excess of the continuum maximum of |Q|^2 over m/(m-1) times its maximum on the
    (2mk)-th roots of unity; nonpositive when the bracket holds. """
    worst = -np.inf
    for poly in corpus:
        _, top = circle_max(poly)
        for m in refinements:
            mesh_max = float(np.max(eval_at_roots(poly, 2 * m * poly.degree)))
            worst = max(worst, top / (m / (m - 1) * mesh_max) - 1.0)
    return _result('interpolation-bracket', worst, 1e-9)


def check_mgf(kernels, **_):
    """ E|1 - gamma_j|^2 = 1 + E|gamma_j|^2 = 1 + 1/(1 + b) and E 1 = 1 on a (j, beta) grid. """
    worst = 0.0
    for beta in (0.5, 1.0, 2.0, 4.0):
        for j in (0, 1, 5, 50):
            b = modulus_shape(j, beta)
            worst = max(worst, abs(kernels.mgf(2.0, 0.0, j, beta) / (1.0 + 1.0 / (1.0 + b)) - 1.0),
                        abs(kernels.mgf(0.0, 0.0, j, beta) - 1.0))
    return _result('mgf-closed-form', worst, 1e-10)


def check_bridge_density(kernels, **_):
    worst = 0.0
    for spec in (BesselBridgeSpec(0.0, 1.0, 0.5, 0.5), BesselBridgeSpec(0.0, 4.0, 0.2, 1.5),
                 BesselBridgeSpec(1.0, 11.0, 2.0, 0.1)):
        t = 0.5 * (spec.t0 + spec.t1)
        total, _ = integrate.quad(lambda u: kernels.bridge_density(spec, t, u), 0.0, np.inf,
                                  epsabs=1e-13, epsrel=1e-12, limit=400)
        worst = max(worst, abs(total - 1.0))
    return _result('bridge-density-mass', worst, 1e-8)


def check_k0(kernels, **_):
    """ K0 by quadrature against the small-argument series and the large-argument expansion. """
    worst = 0.0
    for z in np.geomspace(0.01, 2.0, 12):
        worst = max(worst, abs(kernels.k0(z) / k0_series(z) - 1.0))
    for z in np.linspace(20.0, 50.0, 7):
        worst = max(worst, abs(kernels.k0(z) / k0_asymptotic(z) - 1.0))
    return _result('k0-cross-check', worst, 1e-8)


def check_fhk_mass(kernels, **_):
    total, _ = integrate.quad(kernels.fhk_density, -40.0, 10.0, points=[-5.0, 0.0, 2.0], epsabs=1e-13, epsrel=1e-12,
                              limit=400)
    return _result('fhk-mass', abs(total - 1.0), 1e-8)


CHECKS = (check_fejer, check_bernstein, check_interpolation, check_mgf, check_bridge_density, check_k0,
          check_fhk_mass)


def run_kernels(seed=0, polynomials=1000, max_degree=12, refinements=(2, 4, 8), kernels=None):
    """ Run every deterministic kernel check; returns the list of results. """
    kernels = kernels or KernelSet()
    corpus = _corpus(seed, polynomials, max_degree)
    results = []
    for check in CHECKS:
        with timing(f'Kernel check {check.__name__}', level=logging.DEBUG):
            result = check(kernels, corpus=corpus, refinements=refinements)
        logging.info(f'{result.name}: {result.value:.3g} (threshold {result.threshold:g}) '
                     f'{"ok" if result.passed else "FAILED"}')
        results.append(result)
    return results


def with_kernel(name, implementation):
    """ A kernel set with one implementation replaced. """
    return replace(KernelSet(), **{name: implementation})


def replica(config, stream, index):
    return {}


def summarize(config, records, kernels=None):
    results = run_kernels(config.seed, config['polynomials'], config['max_degree'], config['refinements'], kernels)
    aggregates = {'kernels': [r.as_dict() for r in results],
                  'failures': [r.name for r in results if not r.passed]}
    return aggregates, not aggregates['failures']


EXPERIMENT = Experiment('verify-kernels', replica, summarize)
