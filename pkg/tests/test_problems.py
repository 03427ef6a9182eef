import copy

import pytest

from prozero import defaults
from prozero.errors import (ProblemFileError, UndefinedReferenceError,
                            PolynomialParseError, ReplayIncompatibleError)
from prozero.problems import (ProblemFile, run_problem, replay_report,
                              exit_code, dumps_report)

EXPECTED_VERDICTS = ["BOUNDED", "PRO_ZERO", "WEAKLY_PRO_REGULAR",
                     "ISOMORPHIC_TO_COMPLETION", "CARTIER", "PRO_ZERO",
                     "HOLDS"]


@pytest.fixture
def example_report(example_problem):
    problem = ProblemFile(example_problem)
    report, timing = run_problem(problem)
    return problem, report, timing


def test_example_verdicts(example_report):
    _, report, timing = example_report
    assert [t["verdict"] for t in report["tasks"]] == EXPECTED_VERDICTS
    assert all(t["status"] == "ok" for t in report["tasks"])
    assert all(t["window"] == 6 for t in report["tasks"])
    assert exit_code(report) == 0
    assert len(timing["tasks"]) == len(EXPECTED_VERDICTS)


def test_bounded_torsion_certificate(example_report):
    _, report, _ = example_report
    certificate = report["tasks"][0]["certificate"]
    assert certificate["witness"] == {"index": 3,
                                      "m": {"1": 4, "2": 5, "3": 6}}


def test_report_holds_no_timing(example_report):
    _, report, _ = example_report
    assert "seconds" not in dumps_report(report)


def test_replay_example(example_report):
    problem, report, _ = example_report
    result = replay_report(report, problem)
    assert result["ok"]
    assert sum(t["checks"] for t in result["tasks"]) > 0


def test_replay_detects_tampering(example_report):
    problem, report, _ = example_report
    tampered = copy.deepcopy(report)
    check = tampered["tasks"][0]["checks"][0]
    assert check["kind"] == "colon_stable"
    check["args"]["n"] = 1
    result = replay_report(tampered, problem)
    assert not result["ok"]
    assert result["tasks"][0]["failing"] == [check["name"]]


def test_replay_needs_same_problem(example_problem, example_report):
    _, report, _ = example_report
    changed = copy.deepcopy(example_problem)
    changed["name"] = "other"
    with pytest.raises(ReplayIncompatibleError):
        replay_report(report, ProblemFile(changed))


def test_jobs_do_not_change_report(example_problem):
    first, _ = run_problem(ProblemFile(example_problem), jobs=1)
    second, _ = run_problem(ProblemFile(example_problem), jobs=2)
    assert dumps_report(first) == dumps_report(second)


def test_window_override_order(example_problem):
    data = copy.deepcopy(example_problem)
    data["tasks"][0]["window"] = 4
    problem = ProblemFile(data)
    assert problem.task_window(0, 8) == 4
    assert problem.task_window(1, 8) == 8
    assert problem.task_window(1) == 6


def _minimal(**sections):
    data = {"schema_version": 1,
            "rings": {"r": {"coefficients": "QQ", "variables": ["x"]}},
            "modules": {"m": {"ring": "r", "free": 1}},
            "sequences": {"s": {"ring": "r", "elements": ["x"]}},
            "tasks": [{"kind": "regular", "sequence": "s", "module": "m"}]}
    data.update(sections)
    return data


@pytest.mark.parametrize("change,location", [
    ({"schema_version": 2}, "$.schema_version"),
    ({"window": 1}, "$.window"),
    ({"tasks": []}, "$.tasks"),
    ({"tasks": [{"kind": "unknown"}]}, "$.tasks[0].kind"),
    ({"tasks": [{"kind": "regular", "sequence": "s", "module": "m",
                 "extra": 1}]}, "$.tasks[0]"),
])
def test_schema_errors(change, location):
    with pytest.raises(ProblemFileError) as info:
        ProblemFile(_minimal(**change))
    assert info.value.location == location


def test_undefined_reference():
    data = _minimal(tasks=[{"kind": "regular", "sequence": "s",
                            "module": "missing"}])
    with pytest.raises(UndefinedReferenceError) as info:
        ProblemFile(data)
    assert info.value.location == "$.tasks[0].module"
    assert info.value.code == "UNDEFINED_REFERENCE"


def test_bad_polynomial_is_located():
    data = _minimal(sequences={"s": {"ring": "r", "elements": ["x + z"]}})
    problem = ProblemFile(data)
    with pytest.raises(PolynomialParseError) as info:
        problem.build()
    assert info.value.location == "$.sequences.s.elements[0]"


def test_task_input_error_is_recorded():
    data = _minimal(tasks=[{"kind": "koszul_homology", "sequence": "s",
                            "module": "m", "degree": 5}])
    report, _ = run_problem(ProblemFile(data), window=4)
    record = report["tasks"][0]
    assert record["status"] == "error"
    assert record["verdict"] == "DEGREE_OUT_OF_RANGE"
    assert exit_code(report) == 2


def test_degree_cap_is_recorded():
    before = defaults.DEGREE_CAP
    report, _ = run_problem(ProblemFile(_minimal()), degree_cap=12)
    assert report["degree_cap"] == 12
    assert report["tasks"][0]["verdict"] == "REGULAR"
    assert defaults.DEGREE_CAP == before


def test_chart_audit_kind_names():
    data = {"schema_version": 1,
            "rings": {"plane": {"coefficients": "QQ",
                                "variables": ["x", "y"]}},
            "ideals": {"line": {"ring": "plane", "generators": ["y"]}},
            "divisors": {"line": {"ring": "plane", "ideal": "line",
                                  "charts": [["1", "y"]]}},
            "tasks": [{"kind": "chart_torsion_audit", "divisor": "line",
                       "x": "x"},
                      {"kind": "lemma_5_2_audit", "divisor": "line",
                       "x": "x"}]}
    problem = ProblemFile(data)
    report, _ = run_problem(problem, window=4)
    first, second = report["tasks"]
    assert first["verdict"] == second["verdict"] == "AGREE"
    assert first["checks"] == second["checks"]
    assert replay_report(report, problem)["ok"]
