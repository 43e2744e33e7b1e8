
from .config import ExperimentConfig, Option, SCHEMAS, EXPERIMENT_NAMES, build_config, load_config, read_config_file
from .report import ExperimentReport, SCHEMA_VERSION, summary_stats, merge_records, write_report
from .registry import Experiment
from .runner import EXPERIMENTS, run, run_replica
from .kernels import KernelSet, KernelResult, run_kernels, with_kernel

__all__ = ['ExperimentConfig', 'Option', 'SCHEMAS', 'EXPERIMENT_NAMES', 'build_config', 'load_config',
           'read_config_file', 'ExperimentReport', 'SCHEMA_VERSION', 'summary_stats', 'merge_records', 'write_report',
           'Experiment', 'EXPERIMENTS', 'run', 'run_replica', 'KernelSet', 'KernelResult', 'run_kernels',
           'with_kernel']
