"""
 The ``cbe`` command line: ``cbe run <experiment>``, ``cbe verify`` and ``cbe bounds <moments.json>``.

 Exit codes: 0 on success, 1 when an experiment or a kernel fails its checks, 2 on configuration and argument errors
 (including an exceeded memory cap).
"""
import argparse
import json
import logging
import sys

from .errors import ArgumentError, CbeError, ConfigurationError, ResourceBudgetExceeded, VerificationFailure
from .experiments import EXPERIMENT_NAMES, load_config, run
from .pointprocess import intensity_change_bound, pp_bound
from .version import __version__

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2

# flags of ``cbe run`` that map one-to-one onto configuration keys
RUN_FLAGS = (('--n', int), ('--beta', float), ('--sigma', str), ('--k1', float), ('--k4', float), ('--k5', int),
             ('--k7', float), ('--dt', float), ('--replicas', int), ('--seed', int), ('--workers', int))


def parse_assignment(text):
    key, sep, value = text.partition('=')
    if not sep or not key.strip():
        raise argparse.ArgumentTypeError(f'Expected key=value, got "{text}"')
    return key.strip(), value.strip()


def build_parser():
    parser = argparse.ArgumentParser(prog='cbe', description='Monte Carlo lab for the extremes of the CbetaE '
                                                             'characteristic polynomial.')
    parser.add_argument('--version', action='version', version=f'cbe {__version__}')
    parser.add_argument('-v', '--verbose', action='store_true', help='Log at DEBUG level.')
    sub = parser.add_subparsers(dest='command', required=True)

    run_parser = sub.add_parser('run', help='Run a named experiment and write its report.')
    run_parser.add_argument('experiment', choices=EXPERIMENT_NAMES)
    run_parser.add_argument('--config', help='INI file with a [cbe] section of key = value pairs.')
    for flag, kind in RUN_FLAGS:
        run_parser.add_argument(flag, type=kind, default=None)
    run_parser.add_argument('--set', action='append', type=parse_assignment, default=[], metavar='KEY=VALUE',
                            help='Override any configuration key (repeatable).')
    run_parser.add_argument('--out', help='Directory for report.json and the per-record CSV files.')

    verify_parser = sub.add_parser('verify', help='Run the deterministic kernel suite.')
    verify_parser.add_argument('--config', help='INI file with a [cbe] section of key = value pairs.')
    verify_parser.add_argument('--seed', type=int, default=None)
    verify_parser.add_argument('--set', action='append', type=parse_assignment, default=[], metavar='KEY=VALUE')
    verify_parser.add_argument('--out', help='Directory for the verification report.')

    bounds_parser = sub.add_parser('bounds', help='Evaluate the Poisson-approximation bounds from a moments file.')
    bounds_parser.add_argument('moments', help='JSON file with "moments", "var", "lam" and optionally "c", '
                                               '"d_bl", "mass_pi" and "mass_lambda".')
    return parser


def _overrides(args):
    overrides = {flag[2:]: getattr(args, flag[2:], None) for flag, _ in RUN_FLAGS}
    overrides.update(dict(args.set))
    return overrides


def _summary(report):
    return {'experiment': report.experiment, 'passed': report.passed, 'fingerprint': report.fingerprint,
            'records': {kind: len(rows) for kind, rows in sorted(report.records.items())},
            'wall_clock_s': report.timing.get('wall_clock_s')}


def cmd_run(args):
    config = load_config(args.experiment, args.config, _overrides(args), args.out)
    report = run(config)
    print(json.dumps(_summary(report), indent=2))
    return EXIT_FAILED if report.passed is False else EXIT_OK


def cmd_verify(args):
    config = load_config('verify-kernels', args.config, _overrides(args), args.out)
    report = run(config)
    for result in report.aggregates['kernels']:
        print(f'{"ok    " if result["passed"] else "FAILED"} {result["name"]}: {result["value"]:.3g} '
              f'(threshold {result["threshold"]:g})')
    if report.aggregates['failures']:
        raise VerificationFailure(report.aggregates['failures'])
    return EXIT_OK


def evaluate_bounds(data):
    """ pp_bound and, when a bounded-Lipschitz value is given, intensity_change_bound on a parsed moments file. """
    try:
        c = float(data.get('c', 1.0))
        result = {'pp_bound': pp_bound(data['moments'], float(data['var']), float(data['lam']), c), 'c': c,
                  'note': 'up to universal constant'}
    except KeyError as e:
        raise ArgumentError(f'Moments file lacks the entry {e}') from e
    if 'd_bl' in data:
        result['intensity_change'] = intensity_change_bound(float(data['d_bl']), float(data.get('mass_pi', 0.0)),
                                                            float(data.get('mass_lambda', 0.0)))
    return result


def cmd_bounds(args):
    try:
        with open(args.moments, encoding='utf8') as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ArgumentError(f'Cannot read moments file "{args.moments}": {e}') from e
    print(json.dumps(evaluate_bounds(data), indent=2, sort_keys=True))
    return EXIT_OK


COMMANDS = {'run': cmd_run, 'verify': cmd_verify, 'bounds': cmd_bounds}


def configure_logging(verbose):
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO,
                        format='%(asctime)s %(levelname)s %(message)s', datefmt='%Y-%m-%d %H:%M:%S')


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except VerificationFailure as e:
        logging.error(str(e))
        return EXIT_FAILED
    except (ConfigurationError, ArgumentError, ResourceBudgetExceeded) as e:
        logging.error(str(e))
        return EXIT_CONFIG
    except CbeError as e:
        logging.error(str(e))
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
