import json
import os

import numpy as np
import pytest

from cbe.experiments import EXPERIMENTS, SCHEMA_VERSION, build_config, merge_records, run, run_replica, \
    summary_stats, write_report
from cbe.experiments.report import column

SMALL_MAX_DIST = {'n': 64, 'k1': 4, 'k5': 4, 'm': 4, 'seed': 7}


def test_registry_covers_every_experiment():
    assert set(EXPERIMENTS) == {'max-dist', 'mart-conv', 'sde-decoration', 'ppp-metrics', 'verify-kernels',
                                'limit-tables', 'counting-check'}


def test_no_replicas_gives_an_empty_report():
    report = run(build_config('max-dist', overrides={**SMALL_MAX_DIST, 'replicas': 0}))
    assert report.records == {}
    assert report.aggregates['centered_max'] == {'count': 0}
    assert report.passed is None
    payload = json.loads(report.payload_json())
    assert payload['schema_version'] == SCHEMA_VERSION and payload['record_counts'] == {}


def test_replicas_are_reproducible():
    config = build_config('max-dist', overrides={**SMALL_MAX_DIST, 'replicas': 2})
    assert run_replica(config, 1) == run_replica(config, 1)
    assert run_replica(config, 0) != run_replica(config, 1)


def test_payload_does_not_depend_on_workers():
    serial = run(build_config('max-dist', overrides={**SMALL_MAX_DIST, 'replicas': 3, 'workers': 1}))
    parallel = run(build_config('max-dist', overrides={**SMALL_MAX_DIST, 'replicas': 3, 'workers': 2}))
    assert serial.payload_json() == parallel.payload_json()
    assert serial.records == parallel.records
    assert serial.timing['workers'] == 1 and parallel.timing['workers'] == 2
    assert 'timing' not in json.loads(serial.payload_json())


def test_merge_is_associative():
    shards = [{'a': [{'x': 1}], 'b': [{'y': 1}]}, {'a': [{'x': 2}]}, {'b': [{'y': 2}], 'c': []}]
    whole = merge_records(shards)
    nested = merge_records([merge_records(shards[:2]), merge_records(shards[2:])])
    assert whole == nested
    assert column(whole['a'], 'x').tolist() == [1.0, 2.0]
    assert summary_stats(column(whole['a'], 'x')) == summary_stats(np.concatenate([column(s.get('a', []), 'x')
                                                                                    for s in shards]))


def test_summary_stats():
    stats = summary_stats([1.0, 2.0, 3.0, np.nan])
    assert stats['count'] == 3 and stats['mean'] == 2.0 and stats['sd'] == 1.0
    assert stats['q50'] == 2.0 and stats['min'] == 1.0 and stats['max'] == 3.0
    assert summary_stats([5.0])['sd'] == 0.0
    assert summary_stats([]) == {'count': 0}


def test_report_files(tmp_path):
    out = str(tmp_path / 'out')
    report = run(build_config('max-dist', overrides={**SMALL_MAX_DIST, 'replicas': 2}, out=out))
    with open(os.path.join(out, 'report.json')) as f:
        written = json.load(f)
    assert written['fingerprint'] == report.fingerprint
    assert set(written['timing']) >= {'wall_clock_s', 'cpu_s', 'replica_s', 'workers', 'replicas_per_s'}
    with open(os.path.join(out, 'maxima.csv')) as f:
        lines = f.read().splitlines()
    assert len(lines) == 3 and 'centered' in lines[0].split(',')
    again = write_report(report, out)
    assert again == os.path.join(out, 'report.json')


@pytest.mark.slow
def test_same_config_same_payload():
    config = build_config('limit-tables', overrides={'replicas': 2, 'samples': 500, 'x_points': 21})
    assert run(config).payload_json() == run(config).payload_json()
