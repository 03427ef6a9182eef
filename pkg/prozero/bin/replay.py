"""
Script which re-verifies the checks of a report against subjects rebuilt
from the problem file the report was produced from.

Exit codes: 0 when every check replays, 1 when a check fails, 2 on an
incompatible report or malformed input.
"""

import sys
from argparse import ArgumentParser

from prozero.bin.run import get_logger, apply_config, report_error


def get_argparser():
    """
    Returns an argument parser for this script
    """
    parser = ArgumentParser(description='Replay the checks of a prozero '
                                        'report.')
    parser.add_argument("report", type=str, help="Path to the report")
    parser.add_argument("problem", type=str,
                        help="Path to the problem file of the report")
    parser.add_argument("--config", type=str, default=None,
                        help="Optional copy of engine.yaml")
    parser.add_argument("--log_level", "--log-level", type=str, default=None,
                        help="Logging level (default from engine.yaml)")
    return parser


def replay(report_path, problem_path, logger):
    """
    Replays every check of the report at 'report_path'.

    Returns:
        int, the exit code
    """
    from prozero.errors import INPUT_ERRORS, ReplayIncompatibleError
    from prozero.problems import ProblemFile, load_report, replay_report
    try:
        report = load_report(report_path)
        problem = ProblemFile.from_file(problem_path, logger=logger)
        result = replay_report(report, problem, logger=logger)
    except INPUT_ERRORS + (ReplayIncompatibleError,) as e:
        report_error(logger, e)
        return 2
    for task in result["tasks"]:
        for name in task["failing"]:
            print("FAILED task {} ({}): {}".format(task["index"],
                                                   task["kind"], name))
    checks = sum(t["checks"] for t in result["tasks"])
    logger.info("[*] Replayed {} checks of {} tasks: {}".format(
        checks, len(result["tasks"]), "ok" if result["ok"] else "FAILED"
    ))
    return 0 if result["ok"] else 1


def run(args):
    apply_config(args.config)
    logger = get_logger(args.log_level)
    return replay(args.report, args.problem, logger)


def entry_func(args=None):
    parser = get_argparser()
    sys.exit(run(parser.parse_args(args)))


if __name__ == "__main__":
    entry_func()
