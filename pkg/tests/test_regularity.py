import pytest

from prozero.modules import FpModule
from prozero.koszul import SequenceSpec
from prozero.regularity import (is_regular_sequence, is_bounded_torsion,
                                is_pro_regular, is_weakly_pro_regular,
                                colon_module, colon_tower,
                                audit_equivalences, permutation_audit,
                                REGULAR, NOT_REGULAR, BOUNDED,
                                NOT_BOUNDED_WITHIN_WINDOW, PRO_REGULAR,
                                NOT_PRO_REGULAR_WITHIN_WINDOW,
                                WEAKLY_PRO_REGULAR,
                                NOT_WEAKLY_PRO_REGULAR_WITHIN_WINDOW)
from prozero.towers import replay_checks


@pytest.fixture
def cross_pair(cross):
    return SequenceSpec(cross, ["x", "y"]), FpModule.free(cross, 1)


def test_regular_sequences(qx, plane, cubic_sequence, cubic_module):
    assert is_regular_sequence(SequenceSpec(qx, ["x"]),
                               FpModule.free(qx, 1)).verdict == REGULAR
    assert is_regular_sequence(SequenceSpec(plane, ["x", "y"]),
                               FpModule.free(plane, 1)).holds
    verdict = is_regular_sequence(cubic_sequence, cubic_module)
    assert verdict.verdict == NOT_REGULAR
    assert verdict.witness == {"failing_index": 1}


def test_unit_is_not_regular(qx):
    verdict = is_regular_sequence(SequenceSpec(qx, ["1"]),
                                  FpModule.free(qx, 1))
    assert verdict.verdict == NOT_REGULAR
    assert verdict.witness == {"quotient_zero": True}


def test_colon_module(cubic_sequence, cubic_module):
    assert colon_module(cubic_sequence, 1, cubic_module, 2) \
        .module.vector_space_dimension() == 2
    assert colon_module(cubic_sequence, 1, cubic_module, 0).is_zero()


def test_bounded_torsion(cubic_sequence, cubic_module):
    certificate = is_bounded_torsion(cubic_module, "x", window=6)
    assert certificate.verdict == BOUNDED
    assert certificate.witness == {"index": 3,
                                   "m": {"1": 4, "2": 5, "3": 6}}
    resolver = {"instance": (cubic_sequence, cubic_module),
                "colon:1": colon_tower(cubic_sequence, 1, cubic_module, 6)}
    assert not replay_checks(certificate.checks, resolver)


def test_escalating_torsion(escalating_ring):
    module = FpModule.free(escalating_ring, 1)
    certificate = is_bounded_torsion(module, "x", window=8)
    assert certificate.verdict == NOT_BOUNDED_WITHIN_WINDOW
    assert certificate.witness["escalation"] == {
        str(n): ["y{}".format(n)] for n in range(1, 9)
    }
    resolver = {"instance": (SequenceSpec(escalating_ring, ["x"]), module)}
    escalations = [c for c in certificate.checks if c["kind"] == "escalation"]
    assert len(escalations) == 8
    assert not replay_checks(escalations, resolver)


def test_pro_regular(cubic_sequence, cubic_module, cross_pair):
    assert is_pro_regular(cubic_sequence, cubic_module,
                          window=6).verdict == PRO_REGULAR
    assert is_pro_regular(*cross_pair, window=6).holds


def test_truncations_not_pro_regular_within_window(qx, truncations):
    sequence = SequenceSpec(qx, ["x"])
    assert is_pro_regular(sequence, truncations, window=6).verdict == \
        NOT_PRO_REGULAR_WITHIN_WINDOW
    assert is_weakly_pro_regular(sequence, truncations, window=6).verdict \
        == NOT_WEAKLY_PRO_REGULAR_WITHIN_WINDOW


def test_weakly_pro_regular(cross_pair):
    verdict = is_weakly_pro_regular(*cross_pair, window=6)
    assert verdict.verdict == WEAKLY_PRO_REGULAR
    assert set(verdict.witness["m"]) == {"1", "2"}
    assert len(verdict.towers) == 2


def test_jobs_do_not_change_verdicts(cross_pair):
    serial = is_weakly_pro_regular(*cross_pair, window=6, jobs=1)
    parallel = is_weakly_pro_regular(*cross_pair, window=6, jobs=2)
    assert serial.to_dict() == parallel.to_dict()


def test_audit(cubic_sequence, cubic_module):
    audit = audit_equivalences(cubic_sequence, cubic_module, window=6)
    assert audit["verdicts"]["regular"]["verdict"] == NOT_REGULAR
    assert audit["verdicts"]["pro_regular"]["verdict"] == PRO_REGULAR
    assert audit["verdicts"]["weakly_pro_regular"]["verdict"] == \
        WEAKLY_PRO_REGULAR
    assert audit["violations"] == []
    assert audit["checks"]


def test_permutation_audit(cross_pair):
    audit = permutation_audit(*cross_pair, window=6)
    assert audit["agree"]
    assert len(audit["permutations"]) == 2
    assert audit["verdict"] == WEAKLY_PRO_REGULAR


def test_single_element_verdicts_coincide(quintic_instance):
    sequence, module = quintic_instance
    torsion = is_bounded_torsion(module, "x", window=8)
    pro = is_pro_regular(sequence, module, window=8)
    assert torsion.verdict == BOUNDED
    assert torsion.witness["index"] == 5
    assert pro.verdict == PRO_REGULAR
    expected = {"1": 6, "2": 7, "3": 8, "4": 9}
    assert torsion.witness["m"] == expected
    assert pro.witness["m"] == {"1": expected}
    weak = is_weakly_pro_regular(sequence, module, window=8)
    assert weak.verdict == WEAKLY_PRO_REGULAR
    resolver = {"instance": (sequence, module),
                "colon:1": colon_tower(sequence, 1, module, 8)}
    assert not replay_checks(torsion.checks, resolver)
    assert not replay_checks(pro.all_checks(), resolver)


def test_stationary_level_is_replayed(quintic_instance):
    sequence, module = quintic_instance
    certificate = is_bounded_torsion(module, "x", window=8)
    check = next(c for c in certificate.checks
                 if c["kind"] == "stationary_level")
    assert check["args"] == {"n": 5}
    tampered = dict(check, args={"n": 4})
    resolver = {"colon:1": colon_tower(sequence, 1, module, 8)}
    assert replay_checks([tampered], resolver) == [check["name"]]


def test_audit_of_late_stationary_torsion(quintic_instance):
    audit = audit_equivalences(*quintic_instance, window=8)
    assert audit["violations"] == []
    assert not audit["partial"]
    face = audit["faces"]["bounded_torsion_levels"]
    assert face["uniform_index"] == 5
    assert face["pro_regular"]
    assert all(d["agree"] for d in audit["faces"]["cech_faces"]["degrees"])
