import pytest

from prozero.errors import NotCheckableError, DegreeOutOfRangeError
from prozero.modules import FpModule, certify_isomorphism
from prozero.koszul import SequenceSpec
from prozero.rings import Ideal
from prozero.completion import (Filtration, filtration_tower, adic_tower,
                                row_tower, composite_bitower, level_towers,
                                level_square_commutes,
                                cech_homology_report, cech_cohomology_report,
                                gm_composite_check, VANISHES,
                                ISOMORPHIC_TO_COMPLETION)
from prozero.problems.subjects import SubjectResolver, add_composite_subjects
from prozero.towers import (lim_lim1, replay_checks, UNDETERMINED,
                            ZERO_CERTIFIED, PRESENTED)


def test_cech_homology_of_truncated_ring(cubic_sequence, cubic_module):
    zeroth = cech_homology_report(0, cubic_sequence, cubic_module, window=6)
    assert zeroth.conclusion == ISOMORPHIC_TO_COMPLETION
    first = cech_homology_report(1, cubic_sequence, cubic_module, window=6)
    assert first.conclusion == VANISHES
    assert "top_degree" in first.evidence
    assert first.to_dict()["checks"]


def test_cech_homology_undetermined(qx, truncations):
    report = cech_homology_report(0, SequenceSpec(qx, ["x"]), truncations,
                                  window=6)
    assert report.conclusion == UNDETERMINED
    assert report.diagnostics


def test_cech_degree_out_of_range(cubic_sequence, cubic_module):
    with pytest.raises(DegreeOutOfRangeError):
        cech_homology_report(2, cubic_sequence, cubic_module, window=6)


def test_cech_cohomology(cubic_sequence, cubic_module, qx):
    report = cech_cohomology_report(1, cubic_sequence, cubic_module,
                                    window=6)
    assert report["conclusion"] == VANISHES
    line = cech_cohomology_report(1, SequenceSpec(qx, ["x"]),
                                  FpModule.free(qx, 1), window=6)
    assert line["conclusion"] == UNDETERMINED


def test_filtrations_decrease(plane):
    module = FpModule.free(plane, 1)
    assert Filtration.adic(module, Ideal(plane, ["x", "y"])).verify(4) == []
    sequence = SequenceSpec(plane, ["x", "y"])
    assert Filtration.sequence_powers(module, sequence).verify(4) == []


def test_filtration_not_decreasing(qx):
    module = FpModule.free(qx, 1)
    oscillating = Filtration.from_rule(
        module, lambda n: ["x^{}".format(n % 2)], name="oscillating"
    )
    assert oscillating.verify(4) == [1, 3]
    with pytest.raises(NotCheckableError):
        gm_composite_check(module, oscillating, SequenceSpec(qx, ["x"]),
                           window=4)


def test_adic_tower_has_no_lim1(cubic_sequence, cubic_module):
    report = lim_lim1(adic_tower(cubic_module, cubic_sequence, window=6))
    assert report.lim1_status == ZERO_CERTIFIED


def test_zero_filtration_tower_is_constant(cubic_module):
    tower = filtration_tower(cubic_module, Filtration.zero(cubic_module),
                             window=6)
    report = lim_lim1(tower)
    assert report.lim_status == PRESENTED
    assert report.lim1_status == ZERO_CERTIFIED


def test_composite_completion(cubic_sequence, cubic_module):
    result = gm_composite_check(cubic_module, Filtration.zero(cubic_module),
                                cubic_sequence, window=6)
    assert result["route"] == "diagonal_pro_zero"
    assert result["agree"]
    assert all(level["isomorphic"] for level in result["levels"])
    assert result["diagonal_consistency"]["equivalent"]


def test_composite_completion_through_rows(qx, truncations):
    sequence = SequenceSpec(qx, ["x"])
    filtration = Filtration.zero(truncations)
    result = gm_composite_check(truncations, filtration, sequence, window=6)
    assert result["route"] == "rows_lim1_zero"
    assert result["agree"]
    assert sorted(result["rows"]) == ["row:{}".format(n) for n in range(1, 7)]
    assert all(row["lim1"]["status"] == ZERO_CERTIFIED
               for row in result["rows"].values())
    assert all(level["isomorphic"] for level in result["levels"])
    assert all(level["natural"] for level in result["levels"][:-1])


def test_composite_rows_run_over_the_filtration(qx, truncations):
    sequence = SequenceSpec(qx, ["x"])
    filtration = Filtration.sequence_powers(truncations, sequence)
    bitower = composite_bitower(truncations, filtration, sequence, window=6)
    row = row_tower(bitower, filtration, 2)
    assert row.window == 6
    for m in range(1, 7):
        assert row.subquotient(m).equals(bitower.cell(2, m))


def test_composite_checks_replay(qx, truncations):
    sequence = SequenceSpec(qx, ["x"])
    filtration = Filtration.zero(truncations)
    result = gm_composite_check(truncations, filtration, sequence, window=6)
    resolver = add_composite_subjects(SubjectResolver(), truncations,
                                      filtration, sequence, 6)
    assert not replay_checks(result["checks"], resolver)
    square = next(c for c in result["checks"] if c["kind"] == "level_square")
    tampered = dict(square, args={"n": 6})
    assert replay_checks([tampered], resolver) == [square["name"]]


def test_composite_levels_follow_transitions(cubic_sequence, cubic_module):
    composite, combined = level_towers(
        cubic_module, Filtration.zero(cubic_module), cubic_sequence, window=4
    )
    for n in range(1, 4):
        assert level_square_commutes(composite, combined, n)
        assert certify_isomorphism(composite.subquotient(n),
                                   combined.subquotient(n)) is not None


def test_composite_completion_on_crossing_lines(cross):
    module = FpModule.free(cross, 1)
    filtration = Filtration.from_rule(module,
                                      lambda n: ["y^{}".format(n)],
                                      name="y-adic")
    result = gm_composite_check(module, filtration,
                                SequenceSpec(cross, ["x"]), window=6)
    assert result["route"] == "diagonal_pro_zero"
    assert result["agree"]
    assert all(level["isomorphic"] and level.get("natural", True)
               for level in result["levels"])
