#!/usr/bin/env python
import argparse
import logging
import sys

from dephasing.config import load_config
from dephasing.errors import ConfigError
from dephasing.tools import run_fig1, run_simulate, run_verify

logger = logging.getLogger('dephasing_run')

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG_ERROR = 2


def parse_args(args):
    ''' parse input arguments '''
    parser = argparse.ArgumentParser(
        description='Pure dephasing of two qubits in independent thermal baths: '
                    'time series, closed-form scans and self verification')
    parser.add_argument('-v', '--verbose', help='Log debug messages', action='store_true')
    parser.add_argument('-q', '--quiet', help='Log warnings and errors only', action='store_true')
    subparsers = parser.add_subparsers(dest='command', required=True)

    simulate = subparsers.add_parser('simulate', help='Concurrence of the evolved alpha family versus time')
    simulate.add_argument('--config', type=str, required=True,
                          help='JSON run configuration, or "default" for the shipped one')
    simulate.add_argument('--out', type=str, default=None, help='Output CSV file (standard output if omitted)')
    simulate.add_argument('-c', '--cores', type=int, default=1, help='Number of processes')

    fig1 = subparsers.add_parser('fig1', help='Closed-form eigenvalues mu1, mu2 on an (xi, eta) grid')
    fig1.add_argument('--config', type=str, required=True,
                      help='JSON grid configuration, or "default" for the shipped one')
    fig1.add_argument('--out', type=str, default=None, help='Output CSV file (standard output if omitted)')

    verify = subparsers.add_parser('verify', help='Run the verification suite')
    verify.add_argument('--seed', type=int, default=0, help='Seed of the sampled checks')
    verify.add_argument('--samples', type=int, default=10000, help='Samples of the upper bound scan')
    verify.add_argument('-c', '--cores', type=int, default=1, help='Number of processes')
    verify.add_argument('--tolerance-scale', type=float, default=1.,
                        help='Multiplier of every check tolerance (0 makes tolerance checks fail)')
    args = parser.parse_args(args)
    if getattr(args, 'cores', 1) < 1:
        parser.error('--cores must be >= 1')
    if args.command == 'verify' and args.samples < 1:
        parser.error('--samples must be >= 1')
    if args.command == 'verify' and args.tolerance_scale < 0:
        parser.error('--tolerance-scale must be >= 0')
    return args


def configure_logging(verbose, quiet):
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')


def write_output(ofile, runner, *args, **kwargs):
    """ Call runner with an output stream: the file ofile, or standard output """
    if ofile is None:
        return runner(*args, stream=sys.stdout, **kwargs)
    with open(ofile, 'w', newline='') as stream:
        result = runner(*args, stream=stream, **kwargs)
    logger.info('Wrote %s', ofile)
    return result


def main(args=None):
    args = parse_args(sys.argv[1:] if args is None else args)
    configure_logging(args.verbose, args.quiet)
    try:
        if args.command == 'simulate':
            config = load_config(args.config, 'simulate')
            write_output(args.out, run_simulate, config, cores=args.cores)
        elif args.command == 'fig1':
            config = load_config(args.config, 'fig1')
            write_output(args.out, run_fig1, config)
        else:
            results = run_verify(args.seed, args.samples, cores=args.cores,
                                 tolerance_scale=args.tolerance_scale, stream=sys.stdout)
            failed = [r.name for r in results if not r.passed]
            if failed:
                logger.error('Verification failed, first failing check: %s', failed[0])
                return EXIT_CHECK_FAILED
    except ConfigError as e:
        logger.error('%s', e)
        return EXIT_CONFIG_ERROR
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
