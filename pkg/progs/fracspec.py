"""Program: FRACSPEC.

FRACSPEC: FRACtional evolution equations solved SPECtrally

Solves fractional evolution equations D^a u + A u = 0, 1 < a < 2, on
the model problems of the toolbox, tabulates Mittag-Leffler functions
and runs the verification suites.

Subcommands
-----------
solve
    Solve a problem described by a configuration file (INI or JSON).
verify
    Run a verification suite.
mlf
    Tabulate E_{a,b}(x) on a uniform grid.

Exit codes: 0 success, 1 failed verification, 2 invalid configuration
or arguments, 3 numerical failure.
"""

import argparse
import json
import os
import sys
import typing as tp

import numpy as np

from fracspec.base.errors import ArgumentError, ConfigError, NumericalError
from fracspec.base.interval import field_velocity_and_caputo, solve_field
from fracspec.logging import get_logger, set_verbosity
from fracspec.parser.base import ConfigFile
from fracspec.parser.config import TMPL_INI, RunConfig
from fracspec.parser.csv import write_field, write_table
from fracspec.tools.scalar import ScalarProblem, scalar_caputo, \
    scalar_memory, scalar_solution, scalar_velocity
from fracspec.tools.special import MLParams, mittag_leffler
from fracspec.tools.verify import SUITE_NAMES, list_checks, run_suite

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


class _Parser(argparse.ArgumentParser):
    """Argument parser exiting with the configuration error code."""

    def error(self, message: str) -> tp.NoReturn:
        self.print_usage(sys.stderr)
        _report_error('UsageError', message)
        sys.exit(EXIT_CONFIG)


def build_opts(parser: argparse.ArgumentParser) -> None:
    """Build commandline options.

    Builds commandline options inside input `parser`.

    Parameters
    ----------
    parser
        Parser to update.
    """
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Increase verbosity (-v: info, -vv: debug).')
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    psolve = subparsers.add_parser(
        'solve', help='Solve a problem described by a configuration file.')
    psolve.add_argument('-c', '--config',
                        help='Configuration file (INI or JSON).')
    psolve.add_argument('--gen-ini', metavar='FILE',
                        help='Create a documented INI file as example.')

    pverif = subparsers.add_parser('verify',
                                   help='Run a verification suite.')
    pverif.add_argument('-s', '--suite', choices=SUITE_NAMES, default='all',
                        help='Suite of checks (default: all).')
    pverif.add_argument('-r', '--report', metavar='FILE',
                        help='Write the JSON report to file.')
    pverif.add_argument('--list', action='store_true',
                        help='Only list the checks of the suite.')

    pmlf = subparsers.add_parser(
        'mlf', help='Tabulate the Mittag-Leffler function E_{a,b}(x).')
    pmlf.add_argument('--alpha', type=float, required=True,
                      help='First order, 0 < alpha <= 2.')
    pmlf.add_argument('--beta', type=float, required=True,
                      help='Second order, beta > 0.')
    pmlf.add_argument('--from', dest='x_min', type=float, required=True,
                      help='First argument.')
    pmlf.add_argument('--to', dest='x_max', type=float, required=True,
                      help='Last argument.')
    pmlf.add_argument('--steps', type=int, required=True,
                      help='Number of intervals of the grid.')
    pmlf.add_argument('--csv', metavar='FILE',
                      help='Write the table to a CSV file.')


def parse_args(args: tp.Sequence[str]) -> argparse.Namespace:
    """Parse arguments.

    Parses commandline arguments

    Parameters
    ----------
    args
        Commandline arguments

    Returns
    -------
    :obj:`argparse.Namespace`
        Object holding results as attributes.
    """
    parser = _Parser(prog='fracspec',
                     formatter_class=argparse.RawTextHelpFormatter,
                     description=__doc__.split('\n\n')[1])
    build_opts(parser)
    return parser.parse_args(args)


def _report_error(name: str, message: str) -> None:
    """Write a machine-readable error on stderr."""
    sys.stderr.write(json.dumps({'error': name, 'message': message},
                                sort_keys=True) + '\n')


def _write_manifest(fname: str,
                    config: RunConfig,
                    outputs: tp.Dict[str, str]) -> None:
    data = config.to_dict()
    data['outputs'] = outputs
    with open(fname, 'w', encoding='utf-8', newline='\n') as fobj:
        fobj.write(json.dumps(data, indent=2, sort_keys=True) + '\n')


def run_solve(config: RunConfig) -> tp.Dict[str, str]:
    """Solve the problem of a run and write the output files.

    Parameters
    ----------
    config
        Run configuration.

    Returns
    -------
    dict
        Output files, by content.
    """
    prefix = config.prefix
    outdir = os.path.dirname(prefix)
    if outdir:
        os.makedirs(outdir, exist_ok=True)
    outputs = {}
    times = config.times
    if config.kind == 'scalar':
        x0, y0 = config.scalar_data()
        prob = ScalarProblem(config.alpha, config.lam, x0, y0,
                             config.ml_tol)
        cols = [times, scalar_solution(prob, times),
                scalar_velocity(prob, times), scalar_caputo(prob, times),
                scalar_memory(prob, times)]
        outputs['u'] = f'{prefix}_u.csv'
        write_table(outputs['u'], ('t', 'u', 'u_t', 'caputo_u', 'memory'),
                    (list(row) for row in np.column_stack(cols)))
    else:
        prob = config.problem()
        u0 = config.initial_data('u0')
        u1 = config.initial_data('u1')
        args = (prob, config.alpha, u0, u1, config.positions, times,
                config.ml_tol)
        field = solve_field(*args)
        velocity, caputo = field_velocity_and_caputo(*args)
        for key, grid in (('u', field), ('ut', velocity),
                          ('caputo', caputo)):
            outputs[key] = f'{prefix}_{key}.csv'
            write_field(outputs[key], grid)
    outputs['manifest'] = f'{prefix}_manifest.json'
    _write_manifest(outputs['manifest'], config, outputs)
    logger.info('Output files: %s', ', '.join(outputs.values()))
    return outputs


def cmd_solve(args: argparse.Namespace) -> int:
    """Run the solve subcommand."""
    if args.gen_ini:
        with open(args.gen_ini, 'w', encoding='utf-8') as fobj:
            fobj.write(TMPL_INI)
        return EXIT_OK
    if not args.config:
        _report_error('ConfigError', 'Missing configuration file')
        return EXIT_CONFIG
    try:
        config = ConfigFile(args.config).get_config()
    except FileNotFoundError as err:
        _report_error('ConfigError', str(err))
        return EXIT_CONFIG
    run_solve(config)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run the verify subcommand."""
    if args.list:
        print('\n'.join(list_checks(args.suite)))
        return EXIT_OK
    report = run_suite(args.suite)
    text = report.to_json()
    if args.report:
        with open(args.report, 'w', encoding='utf-8', newline='\n') as fobj:
            fobj.write(text)
    else:
        sys.stdout.write(text)
    if not report.passed:
        logger.warning('Failed checks: %s', ', '.join(report.failed))
        return EXIT_VERIFY
    return EXIT_OK


def cmd_mlf(args: argparse.Namespace) -> int:
    """Run the mlf subcommand."""
    if args.steps < 1:
        raise ArgumentError('steps', 'Number of steps must be positive')
    if not args.x_max >= args.x_min:
        raise ArgumentError('to', 'Upper bound below lower bound')
    if not 0.0 < args.alpha <= 2.0:
        raise ArgumentError('alpha', 'Order must be in (0, 2]')
    rows = []
    for x in np.linspace(args.x_min, args.x_max, args.steps+1):
        res = mittag_leffler(MLParams(args.alpha, args.beta, x))
        rows.append((float(x), res.value, res.est_abs_error, res.branch))
    header = ('x', 'value', 'est_abs_error', 'branch')
    if args.csv:
        write_table(args.csv, header, rows)
    else:
        print(','.join(header))
        for row in rows:
            print(f'{row[0]:.17g},{row[1]:.17g},{row[2]:.3e},{row[3]}')
    return EXIT_OK


COMMANDS = {
    'solve': cmd_solve,
    'verify': cmd_verify,
    'mlf': cmd_mlf,
}


def run(argv: tp.Sequence[str]) -> int:
    """Run the program with arguments, return the exit code."""
    args = parse_args(argv)
    set_verbosity(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except (ConfigError, ArgumentError) as err:
        _report_error(type(err).__name__, str(err))
        return EXIT_CONFIG
    except NumericalError as err:
        _report_error(type(err).__name__, str(err))
        return EXIT_NUMERIC


def main() -> tp.NoReturn:
    """Run the main program."""
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
