"""
 Experiment configurations: one ``[cbe]`` section of ``key = value`` pairs, validated against the schema of the
 target experiment before anything runs. Command-line values override file values.
"""
import configparser
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

from ..errors import ArgumentError, ConfigurationError, UnknownConfigKey
from ..opuc import Sigma
from ..utils.hashing import config_fingerprint
from ..utils.resources import memory_cap_mb

SECTION = 'cbe'


def _float_list(text):
    if isinstance(text, (list, tuple)):
        return [float(x) for x in text]
    return [float(x) for x in str(text).replace(',', ' ').split()]


def _int_list(text):
    if isinstance(text, (list, tuple)):
        return [int(x) for x in text]
    return [int(x) for x in str(text).replace(',', ' ').split()]


def _sigma(text):
    return str(Sigma.parse(text))


def _optional_float(text):
    if text is None or str(text).strip().lower() in ('', 'none', 'auto'):
        return None
    return float(text)


@dataclass(frozen=True)
class Option:
    """ One key of an experiment schema: a parser from text, a default and an optional validity check. """
    parse: Callable[[Any], Any]
    default: Any
    check: Optional[Callable[[Any], bool]] = None
    requirement: str = ''


def _positive(x):
    return x > 0


def _nonnegative(x):
    return x >= 0


def _at_least(bound):
    return lambda x: x >= bound


COMMON = {
    'seed': Option(int, 0, lambda x: 0 <= x < 2 ** 64, 'a 64-bit unsigned integer'),
    'replicas': Option(int, 100, _nonnegative, '>= 0'),
    'workers': Option(int, 1, _positive, '>= 1'),
}

SCHEMAS: Dict[str, Dict[str, Option]] = {
    'max-dist': {
        'n': Option(int, 1024, _at_least(3), '>= 3'),
        'beta': Option(float, 2.0, _positive, '> 0'),
        'sigma': Option(_sigma, '1'),
        'k1': Option(int, 16, _at_least(1), '>= 1'),
        'k5': Option(int, 4, _at_least(2), '>= 2'),
        'm': Option(int, 4, _at_least(2), '>= 2'),
        'b': Option(float, 1.0, _positive, '> 0'),
        'alpha_phase': Option(float, 0.0),
    },
    'mart-conv': {
        'replicas': Option(int, 50, _nonnegative, '>= 0'),
        'n': Option(int, 8192, _at_least(4), '>= 4'),
        'beta': Option(float, 2.0, _positive, '> 0'),
        'sigma': Option(_sigma, '1'),
        'mesh_factor': Option(int, 16, _at_least(1), '>= 1'),
        'eta': Option(float, 0.05, _nonnegative, '>= 0'),
        'min_k': Option(int, 256, _at_least(2), '>= 2'),
    },
    'sde-decoration': {
        'replicas': Option(int, 200, _nonnegative, '>= 0'),
        'beta': Option(float, 2.0, _positive, '> 0'),
        'sigma': Option(_sigma, '1'),
        'k1': Option(float, 64.0, lambda x: x > 2.718281828459045, '> e'),
        'k4': Option(float, 5.0, _positive, '> 0'),
        'k5': Option(int, 4, _at_least(2), '>= 2'),
        'k7': Option(float, 1.0, _positive, '> 0'),
        'dt': Option(_optional_float, None, lambda x: x is None or 0 < x <= 1e-2, 'in (0, 0.01]'),
        'initial_gap': Option(float, 0.5, _nonnegative, '>= 0'),
        'gap_theta': Option(float, -6.283185307179586, lambda x: x <= 0, '<= 0'),
        'ray_heights': Option(_float_list, [3.0, 4.0, 5.0, 6.0, 7.0], lambda x: len(x) >= 2, 'two or more'),
        'ray_paths': Option(int, 20000, _at_least(2), '>= 2'),
    },
    'ppp-metrics': {
        'replicas': Option(int, 20, _nonnegative, '>= 0'),
        'max_points': Option(int, 6, lambda x: 1 <= x <= 8, 'in [1, 8]'),
        'masses': Option(_float_list, [0.5, 2.0, 10.0], lambda x: all(v >= 0 for v in x), 'nonnegative'),
        'poisson_draws': Option(int, 200, _positive, '> 0'),
        'variances': Option(_float_list, [0.05, 0.1, 0.2], lambda x: all(v > 0 for v in x), 'positive'),
        'tv_samples': Option(int, 100000, _at_least(2), '>= 2'),
    },
    'verify-kernels': {
        'replicas': Option(int, 0, _nonnegative, '>= 0'),
        'polynomials': Option(int, 1000, _positive, '> 0'),
        'max_degree': Option(int, 12, _at_least(1), '>= 1'),
        'refinements': Option(_int_list, [2, 4, 8], lambda x: all(m >= 2 for m in x), 'all >= 2'),
    },
    'limit-tables': {
        'replicas': Option(int, 10, _nonnegative, '>= 0'),
        'x_min': Option(float, -6.0),
        'x_max': Option(float, 6.0),
        'x_points': Option(int, 241, _at_least(2), '>= 2'),
        'samples': Option(int, 10000, _positive, '> 0'),
    },
    'counting-check': {
        'n': Option(int, 8, lambda x: 2 <= x <= 16, 'in [2, 16]'),
        'beta': Option(float, 2.0, _positive, '> 0'),
        'moment_sizes': Option(_int_list, [4, 16, 64], lambda x: all(v >= 1 for v in x), 'all >= 1'),
        'moment_samples': Option(int, 10000, _positive, '> 0'),
        'gap_samples': Option(int, 10000, _positive, '> 0'),
        'prufer_n': Option(int, 4096, _at_least(1), '>= 1'),
        'prufer_mesh': Option(int, 64, _at_least(1), '>= 1'),
    },
}

EXPERIMENT_NAMES = tuple(SCHEMAS)


@dataclass
class ExperimentConfig:
    """ A validated experiment configuration. ``out`` is where the report goes and is not part of the payload. """
    experiment: str
    values: Dict[str, Any] = field(default_factory=dict)
    out: Optional[str] = None
    mem_cap_mb: Optional[float] = None

    def __getitem__(self, key):
        return self.values[key]

    @property
    def seed(self):
        return self.values['seed']

    @property
    def replicas(self):
        return self.values['replicas']

    @property
    def workers(self):
        return self.values['workers']

    def echo(self):
        """ The values that determine the statistical payload (the worker count does not). """
        echo = {k: v for k, v in self.values.items() if k != 'workers'}
        echo['experiment'] = self.experiment
        return echo

    @property
    def fingerprint(self):
        return config_fingerprint({k: str(v) for k, v in self.echo().items()})

    def __str__(self):
        return f'ExperimentConfig({self.experiment}, {self.values})'


def schema_of(experiment):
    if experiment not in SCHEMAS:
        raise ConfigurationError(f'Unknown experiment "{experiment}". Expected one of: {", ".join(SCHEMAS)}')
    return {**COMMON, **SCHEMAS[experiment]}


def read_config_file(filename):
    """ The key-value pairs of the ``[cbe]`` section of an INI file. """
    parser = configparser.ConfigParser()
    if not parser.read(filename, encoding='utf8'):
        raise ConfigurationError(f'Cannot read configuration file "{filename}"')
    if not parser.has_section(SECTION):
        raise ConfigurationError(f'Configuration file "{filename}" has no [{SECTION}] section')
    return dict(parser.items(SECTION))


def build_config(experiment, file_values=None, overrides=None, out=None):
    """ Merge defaults, file values and overrides (in increasing priority), then parse and validate every key. """
    schema = schema_of(experiment)
    raw = {}
    for source in (file_values or {}, {k: v for k, v in (overrides or {}).items() if v is not None}):
        for key, value in source.items():
            key = key.replace('-', '_')
            if key == 'experiment':
                if value != experiment:
                    raise ConfigurationError(f'Configuration is for "{value}", not "{experiment}"')
                continue
            if key not in schema:
                raise UnknownConfigKey(key, experiment)
            raw[key] = value

    values = {}
    for key, option in schema.items():
        if key in raw:
            try:
                value = option.parse(raw[key])
            except (TypeError, ValueError, ArgumentError) as e:
                raise ConfigurationError(f'Bad value "{raw[key]}" for "{key}" of "{experiment}": {e}') from e
        else:
            value = option.default
        if option.check is not None and not option.check(value):
            raise ConfigurationError(f'Value {value!r} of "{key}" must be {option.requirement}')
        values[key] = value

    try:
        cap = memory_cap_mb()
    except ValueError as e:
        raise ConfigurationError(f'Bad memory cap in CBE_MEM_CAP_MB: {e}') from e
    config = ExperimentConfig(experiment=experiment, values=values, out=out, mem_cap_mb=cap)
    logging.debug(f'Configuration: {config}')
    return config


def load_config(experiment, filename=None, overrides=None, out=None):
    file_values = read_config_file(filename) if filename else None
    return build_config(experiment, file_values, overrides, out)
