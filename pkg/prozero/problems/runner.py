"""
Runs the tasks of a problem file into a deterministic report, writes it and
replays its checks.
"""

import json
import logging
import os
import time

from prozero import defaults
from prozero.errors import (INPUT_ERRORS, DegreeCapExceeded,
                            UndeterminedError, ReplayIncompatibleError,
                            ProblemFileError)
from prozero.towers import run_parallel, replay_checks, UNDETERMINED
from prozero.utils import degree_cap_context
from prozero.problems.tasks import TASKS, TaskContext, build_resolver

_LOGGER = logging.getLogger(__name__)

STATUS_OK = "ok"
STATUS_ERROR = "error"
CAP_EXCEEDED = "CAP_EXCEEDED"


def run_task(problem, index, window=None, jobs=1, logger=None):
    """
    Runs task 'index'. Inconclusive outcomes (degree cap, undetermined) are
    verdicts; input errors raised inside the task give an 'error' record.

    Returns:
        (record dict, elapsed seconds)
    """
    logger = logger or _LOGGER
    context = TaskContext(problem, index, problem.task_window(index, window),
                          jobs=jobs, logger=logger)
    record = {"index": index, "kind": context.kind,
              "window": context.window, "subject": context.subject()}
    if "name" in context.task:
        record["name"] = context.task["name"]
    logger.info("[*] Task {} ({}), window {}".format(index, context.kind,
                                                     context.window))
    start = time.perf_counter()
    try:
        record.update(TASKS[context.kind](context))
        record["status"] = STATUS_OK
    except DegreeCapExceeded as e:
        logger.warning("Task {}: {}".format(index, e))
        record.update({"status": STATUS_OK, "verdict": CAP_EXCEEDED,
                       "certificate": {"degree": e.degree, "cap": e.cap},
                       "checks": []})
    except UndeterminedError as e:
        record.update({"status": STATUS_OK, "verdict": UNDETERMINED,
                       "certificate": {"reason": str(e)}, "checks": []})
    except INPUT_ERRORS as e:
        logger.error("Task {} failed with {}: {}".format(index, e.code, e))
        record.update({"status": STATUS_ERROR, "verdict": e.code,
                       "error": {"code": e.code, "message": str(e)},
                       "checks": []})
    elapsed = time.perf_counter() - start
    logger.info("[*] Task {} ({}): {} in {:.3f}s".format(
        index, context.kind, record["verdict"], elapsed
    ))
    return record, elapsed


def run_problem(problem, window=None, jobs=1, degree_cap=None, logger=None):
    """
    Runs all tasks of 'problem' in listed order (concurrently up to 'jobs',
    which never changes the result).

    Args:
        problem:    (ProblemFile) The validated problem file
        window:     (int)  Window for tasks without their own window
        jobs:       (int)  Parallelism hint
        degree_cap: (int)  Groebner degree cap for this run

    Returns:
        (report dict, timing dict)

    Raises:
        ProblemFileError (and other input errors) if a definition cannot be
        built
    """
    logger = logger or _LOGGER
    jobs = int(jobs or 1)
    indices = range(len(problem.tasks))
    inner_jobs = jobs if len(indices) == 1 else 1
    with degree_cap_context(degree_cap):
        cap = defaults.DEGREE_CAP
        problem.build()
        outcomes = run_parallel(
            lambda i: run_task(problem, i, window, inner_jobs, logger),
            indices, jobs
        )
    records = [record for record, _ in outcomes]
    report = {"engine_version": defaults.engine_version,
              "report_schema_version": defaults.REPORT_SCHEMA_VERSION,
              "problem_sha256": problem.sha256, "degree_cap": cap,
              "tasks": records}
    timing = {"problem_sha256": problem.sha256,
              "tasks": [{"index": r["index"], "kind": r["kind"],
                         "seconds": round(t, 6)}
                        for r, t in outcomes],
              "total_seconds": round(sum(t for _, t in outcomes), 6)}
    return report, timing


def exit_code(report):
    """ 2 if any task hit an input error, otherwise 0 """
    errors = [r for r in report["tasks"] if r["status"] == STATUS_ERROR]
    return 2 if errors else 0


def dumps_report(report):
    """ The canonical serialization of a report """
    return json.dumps(report, sort_keys=True, indent=2,
                      ensure_ascii=False) + "\n"


def write_report(report, out_path, timing=None):
    """
    Writes the report to 'out_path' and the timing to the sidecar
    '<out_path>.timing.json'.
    """
    out_path = os.path.abspath(out_path)
    with open(out_path, "w", encoding="utf-8") as out_f:
        out_f.write(dumps_report(report))
    if timing is not None:
        with open(timing_path(out_path), "w", encoding="utf-8") as out_f:
            out_f.write(dumps_report(timing))
    return out_path


def timing_path(report_path):
    return report_path + ".timing.json"


def load_report(path):
    try:
        with open(path, "r", encoding="utf-8") as in_f:
            report = json.load(in_f)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ProblemFileError("Cannot read report '{}': {}".format(path, e),
                               location="$")
    if not isinstance(report, dict) or \
            not isinstance(report.get("tasks"), list):
        raise ProblemFileError("Report '{}' has no task list".format(path),
                               location="$.tasks")
    return report


def check_compatible(report, problem):
    """
    Raises:
        ReplayIncompatibleError if the report comes from another engine or
        schema version, or from a different problem file
    """
    if report.get("engine_version") != defaults.engine_version or \
            report.get("report_schema_version") != \
            defaults.REPORT_SCHEMA_VERSION:
        raise ReplayIncompatibleError(
            "Report of engine {} (schema {}) cannot be replayed by engine "
            "{} (schema {})".format(report.get("engine_version"),
                                    report.get("report_schema_version"),
                                    defaults.engine_version,
                                    defaults.REPORT_SCHEMA_VERSION)
        )
    if report.get("problem_sha256") != problem.sha256:
        raise ReplayIncompatibleError("Report was produced from a different "
                                      "problem file")
    for record in report["tasks"]:
        index = record.get("index")
        if not isinstance(index, int) or \
                not 0 <= index < len(problem.tasks) or \
                problem.tasks[index]["kind"] != record.get("kind"):
            raise ReplayIncompatibleError("Report task {!r} does not match "
                                          "the problem file".format(index))


def replay_report(report, problem, logger=None):
    """
    Re-executes every check of every successful task against subjects
    rebuilt from 'problem'.

    Returns:
        dict with per-task failing check names and the overall flag 'ok'
    """
    logger = logger or _LOGGER
    check_compatible(report, problem)
    results = []
    with degree_cap_context(report.get("degree_cap")):
        problem.build()
        for record in report["tasks"]:
            if record.get("status") != STATUS_OK:
                continue
            context = TaskContext(problem, record["index"], record["window"],
                                  logger=logger)
            checks = record.get("checks", [])
            failing = replay_checks(checks, build_resolver(context),
                                    logger=logger)
            if failing:
                logger.warning("[*] Task {} ({}): {} of {} checks fail on "
                               "replay".format(record["index"],
                                               record["kind"], len(failing),
                                               len(checks)))
            results.append({"index": record["index"],
                            "kind": record["kind"], "checks": len(checks),
                            "failing": failing})
    return {"tasks": results, "ok": not any(r["failing"] for r in results)}
