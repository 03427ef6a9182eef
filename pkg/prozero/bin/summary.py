"""
Script for outputting a summary over one or more report files: one row per
task and the number of tasks per kind and verdict.

Useful for comparing runs of the same problem file with different windows.
"""

import sys
from glob import glob
from argparse import ArgumentParser

import pandas as pd


def get_argparser():
    """
    Returns an argument parser for this script
    """
    parser = ArgumentParser(description='Summary over prozero report '
                                        'file(s).')
    parser.add_argument("--report_pattern", "--report", type=str,
                        default="*.report.json",
                        help="Glob pattern used to match report files.")
    parser.add_argument("--print_all", action="store_true",
                        help="Print in addition the merged table of all "
                             "tasks of all reports.")
    parser.add_argument("--out_csv", type=str, default=None,
                        help="Optional path to store the merged table as CSV")
    return parser


def merge_reports(files):
    """
    Loads the report 'files' and concatenates their task tables.

    Returns:
        DataFrame indexed by (report, task)
    """
    from prozero.problems import load_report
    from prozero.evaluation import get_report_df
    frames = {file_: get_report_df(load_report(file_)) for file_ in files}
    return pd.concat(frames, names=["report"])


def print_summary(df, print_all=False):
    from prozero.evaluation import log_report_df_to_screen, verdict_counts
    if print_all:
        log_report_df_to_screen(df, txt="ALL TASKS")
    counts = verdict_counts(df).unstack(fill_value=0)
    log_report_df_to_screen(counts, txt="TASKS PER KIND AND VERDICT")
    errors = int((df["status"] != "ok").sum())
    print("Reports: {}, tasks: {}, errors: {}".format(
        df.index.get_level_values("report").nunique(), len(df), errors
    ))


def run(args):
    files = sorted(glob(args.report_pattern))
    if not files:
        print("No report files matched '{}'".format(args.report_pattern))
        return 1
    df = merge_reports(files)
    print_summary(df, args.print_all)
    if args.out_csv:
        from prozero.evaluation import log_report_df_to_file
        log_report_df_to_file(df, out_csv_file=args.out_csv)
    return 0


def entry_func(args=None):
    parser = get_argparser()
    sys.exit(run(parser.parse_args(args)))


if __name__ == "__main__":
    entry_func()
