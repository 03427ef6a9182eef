import pandas as pd

COLUMNS = ["kind", "name", "subject", "window", "status", "verdict",
           "checks"]


def _subject_string(subject):
    return ", ".join("{}={}".format(k, subject[k]) for k in sorted(subject))


def get_report_df(report):
    """
    One row per task of a report: kind, optional name, subject, window,
    status, verdict and number of replayable checks. Indexed by task index.
    """
    rows = []
    for record in report["tasks"]:
        rows.append({"kind": record["kind"],
                     "name": record.get("name", ""),
                     "subject": _subject_string(record.get("subject", {})),
                     "window": record["window"],
                     "status": record["status"],
                     "verdict": record["verdict"],
                     "checks": len(record.get("checks", []))})
    index = pd.Index([r["index"] for r in report["tasks"]], name="task")
    return pd.DataFrame(rows, columns=COLUMNS, index=index)


def verdict_counts(report_df):
    """ Number of tasks per (kind, verdict) """
    return report_df.groupby(["kind", "verdict"]).size().rename("tasks")


def log_report_df_to_screen(report_df, logger=print, txt=None):
    log = "[*] {}".format(txt or "VERDICTS")
    logger("\n" + log)
    logger("-" * len(log))
    logger(report_df.to_string())
    logger("-" * len(log))


def log_report_df_to_file(report_df, out_csv_file=None, out_txt_file=None):
    if out_csv_file:
        with open(out_csv_file, "w+") as out_csv:
            out_csv.write(report_df.to_csv())
    if out_txt_file:
        with open(out_txt_file, "w+") as out_txt:
            out_txt.write(report_df.to_string())
