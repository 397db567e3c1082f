"""
The chiclass command line tool:

    chiclass <command> --input <file> [--format table|json] [--order N] [-v]

Exit codes: 0 on success or PASS, 1 on FAIL, 2 on an input error.
"""

import argparse
import logging
import sys

from chiclass.cli import config
from chiclass.cli.jobs import COMMANDS, JobSpecError, load_job
from chiclass.cli.report import EXIT_INPUT
from chiclass.cli.run import run

logger = logging.getLogger("chiclass")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chiclass",
        description="exact Hirzebruch class computations for complete intersections")
    parser.add_argument("command", type=str, choices=COMMANDS,
                        help="the computation to run")
    parser.add_argument("--input", type=str, required=True,
                        help="JSON job file describing the input")
    parser.add_argument("--format", type=str, choices=config.FORMATS, default=None,
                        help="output format (default: table)")
    parser.add_argument("--order", type=int, default=None,
                        help="truncation order for series checks (default: {})".format(
                            config.DEFAULT_ORDER))
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress messages, -vv for debugging output")
    return parser


def setup_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(format="%(name)s:%(levelname)s:%(message)s", level=level)


def main(argv=None, stdout=None):
    """ run the tool and return its exit code """
    if stdout is None:
        stdout = sys.stdout
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    try:
        job = load_job(args.input, command=args.command,
                       output_format=args.format, order=args.order)
        report = run(job)
    except JobSpecError as err:
        logger.error("invalid job: %s", err)
        sys.stderr.write("error: {}\n".format(err))
        return EXIT_INPUT
    except ValueError as err:
        logger.error("invalid input: %s", err)
        sys.stderr.write("error: {}\n".format(err))
        return EXIT_INPUT

    stdout.write(report.render(job.output_format))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
