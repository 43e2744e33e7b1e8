import json
import os

import pytest

from cbe.cli import EXIT_CONFIG, EXIT_FAILED, EXIT_OK, build_parser, evaluate_bounds, main, parse_assignment
from cbe.errors import ArgumentError
from cbe.experiments import kernels as kernels_module, limittables, runner
from cbe.experiments.registry import Experiment
from cbe.version import __version__


def test_parser():
    args = build_parser().parse_args(['run', 'max-dist', '--n', '64', '--k1', '4', '--set', 'm=4', '--out', 'x'])
    assert args.experiment == 'max-dist' and args.n == 64 and args.k1 == 4.0
    assert args.set == [('m', '4')]
    assert parse_assignment(' k5 = 8 ') == ('k5', '8')
    with pytest.raises(SystemExit):
        build_parser().parse_args(['run', 'no-such-experiment'])
    with pytest.raises(SystemExit):
        build_parser().parse_args(['run', 'max-dist', '--set', 'novalue'])


def test_version(capsys):
    with pytest.raises(SystemExit):
        main(['--version'])
    assert __version__ in capsys.readouterr().out


def test_run_with_no_replicas(tmp_path, capsys):
    out = str(tmp_path / 'report')
    code = main(['run', 'max-dist', '--n', '64', '--k1', '4', '--replicas', '0', '--out', out])
    assert code == EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert summary['experiment'] == 'max-dist' and summary['records'] == {}
    assert os.path.exists(os.path.join(out, 'report.json'))


def test_configuration_errors_exit_with_2(tmp_path):
    assert main(['run', 'max-dist', '--set', 'bogus=1', '--replicas', '0']) == EXIT_CONFIG
    assert main(['run', 'max-dist', '--n', '2', '--replicas', '0']) == EXIT_CONFIG
    assert main(['run', 'max-dist', '--config', str(tmp_path / 'missing.ini')]) == EXIT_CONFIG
    assert main(['run', 'max-dist', '--n', '64', '--k1', '128', '--replicas', '1']) == EXIT_CONFIG


def test_config_file_and_flags(tmp_path, capsys):
    filename = tmp_path / 'run.ini'
    filename.write_text('[cbe]\nn = 3\nk1 = 4\nreplicas = 0\n')
    # flags win over the file
    assert main(['run', 'max-dist', '--config', str(filename), '--n', '64']) == EXIT_OK
    assert main(['run', 'max-dist', '--config', str(filename), '--n', '2']) == EXIT_CONFIG


def test_failed_checks_exit_with_1(monkeypatch, capsys):
    monkeypatch.setitem(runner.EXPERIMENTS, 'limit-tables',
                        Experiment('limit-tables', limittables.replica, lambda config, records: ({}, False)))
    assert main(['run', 'limit-tables', '--replicas', '0']) == EXIT_FAILED
    assert json.loads(capsys.readouterr().out)['passed'] is False


def test_kernel_failures_exit_with_1(monkeypatch, capsys):
    def always_fails(kernels, **_):
        return kernels_module.KernelResult(name='always-fails', value=1.0, threshold=0.0, passed=False)
    monkeypatch.setattr(kernels_module, 'CHECKS', (kernels_module.check_mgf, always_fails))
    assert main(['verify']) == EXIT_FAILED
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith('ok') and lines[1].startswith('FAILED always-fails')


def test_verify(capsys):
    assert main(['verify', '--set', 'polynomials=20', '--set', 'max_degree=4']) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7 and all(line.startswith('ok') for line in lines)


def test_bounds(tmp_path, capsys):
    data = {'moments': [{'EP': 0.1, 'ET': 0.1, 'ETP': 0.01, 'L': 1.0}], 'var': 0.0, 'lam': 0.1, 'c': 1.0,
            'd_bl': 0.2, 'mass_pi': 1.0, 'mass_lambda': 1.5}
    filename = tmp_path / 'moments.json'
    filename.write_text(json.dumps(data))
    assert main(['bounds', str(filename)]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result['pp_bound'] == pytest.approx(0.3 ** 1.5 * 0.03)
    assert result['note'] == 'up to universal constant'
    assert result['intensity_change']['d2'] == pytest.approx(0.2 * (1 - 2.718281828459045 ** -1))
    assert main(['bounds', str(tmp_path / 'missing.json')]) == EXIT_CONFIG
    with pytest.raises(ArgumentError):
        evaluate_bounds({'moments': [], 'var': 1.0})
    bad = tmp_path / 'bad.json'
    bad.write_text(json.dumps({**data, 'moments': [{'EP': 0.1, 'ET': 0.1, 'ETP': 0.01, 'L': 0.0}]}))
    assert main(['bounds', str(bad)]) == EXIT_CONFIG
