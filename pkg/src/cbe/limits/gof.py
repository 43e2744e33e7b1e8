import logging
from dataclasses import dataclass, asdict

import numpy as np
from scipy import stats

from ..errors import ArgumentError
from .laws import EULER_GAMMA, LimitKind, LimitLaw

MIN_SAMPLES = 100


@dataclass(frozen=True)
class GofReport:
    n: int
    ks: float
    ks_pvalue: float
    anderson_darling: float
    resampled_pvalue: float
    resamples: int
    law: str

    def as_dict(self):
        return asdict(self)


def anderson_darling(samples, cdf):
    """ A^2 = -n - (1/n) sum_i (2i - 1) (log F(x_(i)) + log(1 - F(x_(n+1-i)))). """
    x = np.sort(np.asarray(samples, dtype=float))
    n = x.size
    f = np.clip(cdf(x), 1e-300, 1.0 - 1e-16)
    i = np.arange(1, n + 1)
    return float(-n - np.mean((2 * i - 1) * (np.log(f) + np.log1p(-f[::-1]))))


def gof(samples, law: LimitLaw, stream=None, resamples=200):
    """ KS and Anderson-Darling statistics of the samples against the law's distribution function, with the
    asymptotic KS p-value and, given a stream, a parametric-bootstrap p-value of the KS statistic. """
    samples = np.asarray(samples, dtype=float)
    if samples.size < MIN_SAMPLES:
        raise ArgumentError(f'Goodness-of-fit needs at least {MIN_SAMPLES} samples, got {samples.size}')
    ks = stats.kstest(samples, law.cdf)
    resampled = float('nan')
    if stream is not None and resamples > 0:
        exceed = 0
        for _ in range(resamples):
            boot = law.sample(stream, samples.size)
            exceed += stats.kstest(boot, law.cdf).statistic >= ks.statistic
        resampled = (1.0 + exceed) / (1.0 + resamples)
    report = GofReport(n=int(samples.size), ks=float(ks.statistic), ks_pvalue=float(ks.pvalue),
                       anderson_darling=anderson_darling(samples, law.cdf), resampled_pvalue=float(resampled),
                       resamples=int(resamples if stream is not None else 0), law=str(law))
    logging.debug(f'GOF against {law}: KS {report.ks:.4g} (p={report.ks_pvalue:.3g}), AD {report.anderson_darling:.4g}')
    return report


def shifted_gumbel_fit(samples, scale, shifts=None, stream=None, resamples=0):
    """ Location fit of samples to C + G + shift, G Gumbel with the given scale.

    ``shifts`` are per-sample random shifts (e.g. log of derivative-martingale masses over sqrt(2 beta)), subtracted
    before fitting. The constant C is estimated by the method of moments (E G = gamma scale) and the residuals are
    tested against the fitted shifted Gumbel.
    """
    samples = np.asarray(samples, dtype=float)
    if shifts is not None and np.shape(shifts) != samples.shape:
        raise ArgumentError('Shifts must be given per sample')
    residual = samples if shifts is None else samples - np.asarray(shifts, dtype=float)
    location = float(np.mean(residual) - EULER_GAMMA * scale)
    law = LimitLaw(LimitKind.SHIFTED_GUMBEL, scale=scale, shift=location)
    report = gof(residual, law, stream=stream, resamples=resamples)
    return {'location': location, 'scale': float(scale), 'gof': report.as_dict()}
