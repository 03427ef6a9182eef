import json
import logging
import os

import pytest

from prozero import defaults
from prozero.bin import run as run_script
from prozero.bin import replay as replay_script
from prozero.bin import init as init_script
from prozero.bin import summary as summary_script
from prozero.bin import pz


@pytest.fixture(autouse=True)
def restore_defaults():
    yield
    defaults.load_engine_yaml()


def run_cli(*args):
    return run_script.run(run_script.get_argparser().parse_args(list(args)))


def replay_cli(*args):
    return replay_script.run(
        replay_script.get_argparser().parse_args(list(args))
    )


@pytest.fixture
def example_path(example_problem, write_problem):
    return write_problem(example_problem, "example.json")


@pytest.fixture
def report_path(example_path, tmp_path):
    out = str(tmp_path / "example.report.json")
    assert run_cli(example_path, "--out", out) == 0
    return out


def test_run_writes_report_and_timing(report_path):
    with open(report_path) as in_f:
        report = json.load(in_f)
    assert [t["verdict"] for t in report["tasks"]][:2] == ["BOUNDED",
                                                           "PRO_ZERO"]
    assert os.path.exists(report_path + ".timing.json")


def test_run_to_stdout(example_path, capsys):
    assert run_cli(example_path, "--window", "4", "--jobs", "2") == 0
    report = json.loads(capsys.readouterr().out)
    # the command line window replaces the window of the file
    assert {t["window"] for t in report["tasks"]} == {4}


def test_run_text_format(example_path, capsys):
    assert run_cli(example_path, "--format", "text") == 0
    assert "PRO_ZERO" in capsys.readouterr().out


def test_replay(report_path, example_path):
    assert replay_cli(report_path, example_path) == 0
    assert run_cli(example_path, "--replay", report_path) == 0


def test_replay_tampered_report(report_path, example_path, capsys):
    with open(report_path) as in_f:
        report = json.load(in_f)
    report["tasks"][0]["checks"][0]["args"]["n"] = 1
    with open(report_path, "w") as out_f:
        json.dump(report, out_f)
    assert replay_cli(report_path, example_path) == 1
    assert "FAILED task 0 (bounded_torsion)" in capsys.readouterr().out


def test_replay_other_problem(report_path, example_problem, write_problem):
    example_problem["tasks"][1]["window"] = 4
    other = write_problem(example_problem, "other.json")
    assert replay_cli(report_path, other) == 2


def test_malformed_problem(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"schema_version": 1, "tasks": [', encoding="utf-8")
    assert run_cli(str(path)) == 2


def test_undefined_reference(example_problem, write_problem):
    example_problem["tasks"][0]["module"] = "missing"
    assert run_cli(write_problem(example_problem)) == 2


def test_task_error_exit_code(example_problem, write_problem, tmp_path):
    example_problem["tasks"].append({"kind": "koszul_homology",
                                     "sequence": "x", "module": "cubic",
                                     "degree": 3})
    out = str(tmp_path / "report.json")
    assert run_cli(write_problem(example_problem), "--out", out) == 2
    with open(out) as in_f:
        last = json.load(in_f)["tasks"][-1]
    assert last["status"] == "error"


def test_init_project(tmp_path):
    args = init_script.get_parser().parse_args(
        ["--name", "project", "--root", str(tmp_path), "--window", "4"]
    )
    folder = init_script.run(args)
    from prozero.hyperparameters import YAMLHParams
    hparams = YAMLHParams(os.path.join(folder, "engine.yaml"), no_log=True)
    assert hparams["window"] == 4
    assert os.path.exists(os.path.join(folder, "problems", "example.json"))
    with pytest.raises(OSError):
        init_script.run(args)
    args.overwrite = True
    assert init_script.run(args) == folder


def test_config_sets_window(tmp_path, example_problem, write_problem,
                            capsys):
    folder = init_script.run(init_script.get_parser().parse_args(
        ["--name", "project", "--root", str(tmp_path), "--window", "4"]
    ))
    del example_problem["window"]
    problem = write_problem(example_problem)
    assert run_cli(problem, "--config",
                   os.path.join(folder, "engine.yaml")) == 0
    report = json.loads(capsys.readouterr().out)
    assert {t["window"] for t in report["tasks"]} == {4}


def test_summary(report_path, tmp_path, capsys):
    pattern = str(tmp_path / "*.report.json")
    out_csv = str(tmp_path / "summary.csv")
    args = summary_script.get_argparser().parse_args(
        ["--report", pattern, "--out_csv", out_csv]
    )
    assert summary_script.run(args) == 0
    assert "Reports: 1, tasks: 7, errors: 0" in capsys.readouterr().out
    assert os.path.exists(out_csv)
    args.report_pattern = str(tmp_path / "*.nothing")
    assert summary_script.run(args) == 1


def test_pz_dispatch(report_path, example_path):
    with pytest.raises(SystemExit) as info:
        pz.entry_func(["replay", report_path, example_path])
    assert info.value.code == 0


@pytest.mark.parametrize("level,message,expected", [
    (logging.INFO, "[*] Running task 0", "[*] Running task 0"),
    (logging.WARNING, "Task 1: cap exceeded", "[WARNING] Task 1: cap "
                                              "exceeded"),
    (logging.ERROR, "[BAD_WINDOW] window 1", "[BAD_WINDOW] window 1"),
])
def test_screen_formatter(level, message, expected):
    record = logging.LogRecord("prozero", level, __file__, 1, message, None,
                               None)
    assert run_script.ScreenFormatter("%(message)s").format(record) == \
        expected
