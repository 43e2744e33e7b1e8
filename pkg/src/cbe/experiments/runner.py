"""
 Replica scheduling: one replica = one stream (seed, replica index) = one worker task. Results come back in replica
 order and are folded before aggregation, so the payload does not depend on the number of workers.
"""
import logging
from multiprocessing import Pool

from ..random import new_stream
from ..utils.resources import Timer
from . import countingcheck, kernels, limittables, martconv, maxdist, pppmetrics, sdedecoration
from .report import ExperimentReport, merge_records, write_report

EXPERIMENTS = {module.EXPERIMENT.name: module.EXPERIMENT
               for module in (maxdist, martconv, sdedecoration, pppmetrics, kernels, limittables, countingcheck)}


def run_replica(config, index):
    experiment = EXPERIMENTS[config.experiment]
    return experiment.replica(config, new_stream(config.seed, index), index)


def _run_replica_task(args):
    return run_replica(*args)


def run_replicas(config):
    tasks = [(config, i) for i in range(config.replicas)]
    if config.workers == 1 or config.replicas <= 1:
        return [_run_replica_task(task) for task in tasks]
    with Pool(processes=min(config.workers, config.replicas)) as pool:
        return pool.map(_run_replica_task, tasks)


def run(config, summarize=None):
    """ Run all replicas of the configured experiment and fold them into a report.

    ``summarize`` replaces the experiment's own summary function (used to inject kernels into verify-kernels).
    """
    experiment = EXPERIMENTS[config.experiment]
    if experiment.validate is not None:
        experiment.validate(config)
    timer = Timer()
    logging.info(f'Running {config.experiment}: {config.replicas} replicas on {config.workers} workers')
    records = merge_records(run_replicas(config))
    replica_seconds = timer.elapsed()
    aggregates, passed = (summarize or experiment.summarize)(config, records)
    report = ExperimentReport(experiment=config.experiment, config=config.echo(), fingerprint=config.fingerprint,
                              records=records, aggregates=aggregates, passed=passed)
    report.timing = {**timer.as_dict(), 'replica_s': replica_seconds, 'workers': config.workers,
                     'replicas_per_s': config.replicas / replica_seconds if replica_seconds > 0 else None}
    logging.info(f'{config.experiment} finished: {timer}')
    if config.out:
        write_report(report, config.out)
    return report
