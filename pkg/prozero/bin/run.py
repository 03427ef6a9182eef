"""
Script which runs the tasks of a problem file and writes the certificate
report (JSON, or a verdict table with --format text).

Exit codes: 0 when every task ran (whatever its verdict), 2 on an input
error. With --replay REPORT the script re-verifies an existing report
instead, see prozero.bin.replay.
"""

import logging
import sys
from argparse import ArgumentParser

from prozero import defaults

_LOGGER = logging.getLogger("prozero")


def get_argparser():
    """
    Returns an argument parser for this script
    """
    parser = ArgumentParser(description='Run the tasks of a prozero problem '
                                        'file.')
    parser.add_argument("problem", type=str,
                        help="Path to a problem file (JSON)")
    parser.add_argument("--out", type=str, default=None,
                        help="Path of the report file. A timing sidecar "
                             "'<out>.timing.json' is written next to it. "
                             "Defaults to stdout (no sidecar).")
    parser.add_argument("--window", type=int, default=None,
                        help="Window for tasks that do not set their own "
                             "(default from engine.yaml)")
    parser.add_argument("--format", type=str, default=None,
                        choices=("json", "text"),
                        help="Report format on stdout (default from "
                             "engine.yaml)")
    parser.add_argument("--degree_cap", "--degree-cap", type=int,
                        default=None,
                        help="Maximal total degree in Groebner computations")
    parser.add_argument("--jobs", type=int, default=None,
                        help="Parallelism hint. Never changes the report.")
    parser.add_argument("--config", type=str, default=None,
                        help="A copy of engine.yaml (see 'pz init') whose "
                             "values replace the engine defaults")
    parser.add_argument("--replay", type=str, default=None,
                        help="Re-verify the report at this path instead of "
                             "running the tasks")
    parser.add_argument("--log_level", "--log-level", type=str, default=None,
                        help="Logging level (default from engine.yaml)")
    return parser


class ScreenFormatter(logging.Formatter):
    """
    Screen-logger texture: messages print as they are, those of other levels
    than INFO get a [LEVEL] tag unless they already open with a [...] tag.
    """
    def format(self, record):
        message = super(ScreenFormatter, self).format(record)
        if record.levelno == logging.INFO or message.startswith("["):
            return message
        return "[{}] {}".format(record.levelname, message)


def get_logger(log_level=None):
    """
    Configures the 'prozero' logger once: one stream handler on stderr.
    stdout is reserved for reports.
    """
    logger = _LOGGER
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(ScreenFormatter("%(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
    logger.setLevel(str(log_level or defaults.LOG_LEVEL).upper())
    return logger


def apply_config(config_path=None):
    """ Loads engine.yaml (or a project copy) into prozero.defaults """
    defaults.load_engine_yaml(config_path)


def report_error(logger, error):
    location = getattr(error, "location", None)
    logger.error("[{}] {}{}".format(
        getattr(error, "code", type(error).__name__), error,
        " (at {})".format(location) if location else ""
    ))


def run(args):
    """
    Run the script according to args - Please refer to the argparser.

    Returns:
        int, the exit code
    """
    apply_config(args.config)
    logger = get_logger(args.log_level)
    if args.replay:
        from prozero.bin.replay import replay
        return replay(args.replay, args.problem, logger)

    from prozero.errors import INPUT_ERRORS
    from prozero.problems import (ProblemFile, run_problem, write_report,
                                  dumps_report, exit_code)
    try:
        problem = ProblemFile.from_file(args.problem, logger=logger)
        report, timing = run_problem(problem, window=args.window,
                                     jobs=args.jobs or defaults.JOBS,
                                     degree_cap=args.degree_cap,
                                     logger=logger)
    except INPUT_ERRORS as e:
        report_error(logger, e)
        return 2
    code = exit_code(report)
    if args.out:
        path = write_report(report, args.out, timing=timing)
        logger.info("[*] Report written to {}".format(path))
    else:
        logger.info("[*] Timing: {}".format(timing))
    out_format = args.format or defaults.FORMAT
    if out_format == "text":
        from prozero.evaluation import get_report_df, log_report_df_to_screen
        log_report_df_to_screen(get_report_df(report))
    elif not args.out:
        sys.stdout.write(dumps_report(report))
    return code


def entry_func(args=None):
    # Parse command line arguments
    parser = get_argparser()
    sys.exit(run(parser.parse_args(args)))


if __name__ == "__main__":
    entry_func()
