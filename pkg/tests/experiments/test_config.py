import pytest

from cbe.errors import ConfigurationError, UnknownConfigKey
from cbe.experiments import EXPERIMENT_NAMES, build_config, load_config, read_config_file


def test_defaults_and_overrides():
    config = build_config('max-dist', overrides={'n': '64', 'k1': 4, 'seed': None})
    assert config['n'] == 64 and config['k1'] == 4
    assert config.seed == 0 and config.replicas == 100 and config.workers == 1
    assert config['sigma'] == '1'
    assert 'workers' not in config.echo() and config.echo()['experiment'] == 'max-dist'


def test_experiment_names():
    assert set(EXPERIMENT_NAMES) == {'max-dist', 'mart-conv', 'sde-decoration', 'ppp-metrics', 'verify-kernels',
                                     'limit-tables', 'counting-check'}
    with pytest.raises(ConfigurationError):
        build_config('no-such-experiment')


def test_unknown_keys_are_rejected():
    with pytest.raises(UnknownConfigKey):
        build_config('limit-tables', overrides={'k1': 4})
    with pytest.raises(ConfigurationError):
        build_config('limit-tables', {'experiment': 'max-dist'})


@pytest.mark.parametrize("overrides", [{'n': 'many'}, {'n': 2}, {'replicas': -1}, {'workers': 0},
                                       {'sigma': 'x'}, {'beta': 0}, {'seed': 2 ** 64}])
def test_bad_values(overrides):
    with pytest.raises(ConfigurationError):
        build_config('max-dist', overrides=overrides)


def test_list_options():
    config = build_config('sde-decoration', {'ray_heights': '3, 4 5', 'dt': 'auto'})
    assert config['ray_heights'] == [3.0, 4.0, 5.0]
    assert config['dt'] is None
    assert build_config('verify-kernels', overrides={'refinements': [2, 6]})['refinements'] == [2, 6]
    with pytest.raises(ConfigurationError):
        build_config('sde-decoration', {'ray_heights': '3'})
    with pytest.raises(ConfigurationError):
        build_config('sde-decoration', {'dt': '0.1'})


def test_config_file(tmp_path):
    filename = tmp_path / 'run.ini'
    filename.write_text('[cbe]\nexperiment = max-dist\nn = 128\nk1 = 8\nalpha-phase = 0.5\n')
    assert read_config_file(str(filename))['n'] == '128'
    config = load_config('max-dist', str(filename), overrides={'k1': 16}, out='results')
    assert config['n'] == 128 and config['k1'] == 16 and config['alpha_phase'] == 0.5
    assert config.out == 'results'
    empty = tmp_path / 'empty.ini'
    empty.write_text('[other]\nn = 1\n')
    with pytest.raises(ConfigurationError):
        read_config_file(str(empty))
    with pytest.raises(ConfigurationError):
        read_config_file(str(tmp_path / 'missing.ini'))


def test_fingerprint_ignores_workers():
    first = build_config('limit-tables', overrides={'workers': 1})
    second = build_config('limit-tables', overrides={'workers': 4})
    assert first.fingerprint == second.fingerprint
    assert build_config('limit-tables', overrides={'seed': 1}).fingerprint != first.fingerprint


def test_memory_cap_from_environment(monkeypatch):
    monkeypatch.setenv('CBE_MEM_CAP_MB', '512')
    assert build_config('limit-tables').mem_cap_mb == 512.0
    monkeypatch.setenv('CBE_MEM_CAP_MB', 'lots')
    with pytest.raises(ConfigurationError):
        build_config('limit-tables')
