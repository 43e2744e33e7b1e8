"""
 Experiment reports: the configuration echo, per-replica records grouped by record type, aggregates and timing.

 Everything but the ``timing`` block is a pure function of the configuration, so two runs of one configuration
 serialize to byte-identical payloads whatever the number of workers.
"""
import csv
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

SCHEMA_VERSION = 1
REPORT_FILE = 'report.json'
QUANTILES = (0.05, 0.25, 0.5, 0.75, 0.95)

Records = Dict[str, List[dict]]


def _jsonable(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f'Object of type {type(value).__name__} is not JSON serializable')


def summary_stats(values):
    """ Count, mean, sd, standard error, extremes and quantiles of a sample; only the count for an empty one. """
    values = np.asarray(values, dtype=float)
    values = values[np.isfinite(values)]
    if values.size == 0:
        return {'count': 0}
    sd = float(np.std(values, ddof=1)) if values.size > 1 else 0.0
    stats = {'count': int(values.size), 'mean': float(np.mean(values)), 'sd': sd,
             'se': sd / np.sqrt(values.size), 'min': float(np.min(values)), 'max': float(np.max(values))}
    stats.update({f'q{int(round(100 * q)):02d}': float(np.quantile(values, q)) for q in QUANTILES})
    return stats


def column(records, key, **where):
    """ The values of ``key`` over the records matching every ``where`` item. """
    return np.array([r[key] for r in records if all(r.get(k) == v for k, v in where.items())], dtype=float)


def merge_records(shards) -> Records:
    """ Fold per-replica record groups in replica order. """
    merged: Records = {}
    for shard in shards:
        for kind, rows in shard.items():
            merged.setdefault(kind, []).extend(rows)
    return merged


@dataclass
class ExperimentReport:
    experiment: str
    config: dict
    fingerprint: str
    records: Records = field(default_factory=dict)
    aggregates: dict = field(default_factory=dict)
    passed: Optional[bool] = None
    timing: dict = field(default_factory=dict)

    def payload(self):
        return {'schema_version': SCHEMA_VERSION, 'experiment': self.experiment, 'config': self.config,
                'fingerprint': self.fingerprint, 'aggregates': self.aggregates, 'passed': self.passed,
                'record_counts': {kind: len(rows) for kind, rows in sorted(self.records.items())}}

    def payload_json(self):
        return json.dumps(self.payload(), sort_keys=True, indent=2, default=_jsonable)

    def to_json(self):
        return json.dumps({**self.payload(), 'timing': self.timing}, sort_keys=True, indent=2, default=_jsonable)


def write_records_csv(rows, filename):
    fieldnames = sorted({key for row in rows for key in row})
    with open(filename, 'w', encoding='utf8', newline='') as f:
        writer = csv.DictWriter(f, fieldnames=fieldnames)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _jsonable(v) if isinstance(v, (np.generic, np.ndarray)) else v for k, v in row.items()})


def write_report(report, directory):
    """ ``report.json`` plus one ``<record type>.csv`` per record type. Returns the report path. """
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, REPORT_FILE)
    with open(path, 'w', encoding='utf8') as f:
        f.write(report.to_json())
    for kind, rows in report.records.items():
        if rows:
            write_records_csv(rows, os.path.join(directory, f'{kind}.csv'))
    logging.info(f'Report written to "{path}"')
    return path
