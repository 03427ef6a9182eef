import pytest

from prozero.errors import (BadLevelsError, TowerConstructionError,
                            NotCheckableError)
from prozero.koszul import SequenceSpec, koszul_tower
from prozero.modules import FpModule, ModuleMap, Subquotient
from prozero.regularity import colon_tower
from prozero.towers import (explicit_tower, DirectTower, BiTower,
                            is_pro_zero, is_mittag_leffler, lim_lim1,
                            is_ind_zero, tower_consistency_audit,
                            six_term_check, bi_pro_zero_equivalence,
                            replay_checks, PRO_ZERO,
                            NOT_PRO_ZERO_WITHIN_WINDOW, ML_CERTIFIED,
                            ML_STABILIZED_WITHIN_WINDOW, IND_ZERO,
                            ZERO_CERTIFIED, PRESENTED, UNDETERMINED,
                            FINITE_LENGTH_LEVELS, SURJECTIVE_BY_CONSTRUCTION,
                            DIVISIBILITY_BY_CONSTRUCTION,
                            EVENTUALLY_CONSTANT_BY_CONSTRUCTION,
                            TORSION_CHAIN_BY_CONSTRUCTION)


@pytest.fixture
def cubic_h1(cubic_sequence, cubic_module):
    return koszul_tower(1, cubic_sequence, cubic_module, window=6)


@pytest.fixture
def doubling(integers):
    """ ZZ <-2- ZZ <-2- ZZ ... """
    return explicit_tower(integers, [(1, [])], [[[2]]], window=6,
                          tags=[DIVISIBILITY_BY_CONSTRUCTION])


def _constant(ring, relations=(), window=6):
    return explicit_tower(ring, [(1, [[r] for r in relations])], [[[1]]],
                          window=window, stable_from=1,
                          tags=[EVENTUALLY_CONSTANT_BY_CONSTRUCTION])


def test_pro_zero_witness(cubic_h1):
    certificate = is_pro_zero(cubic_h1)
    assert certificate.verdict == PRO_ZERO
    assert certificate.witness == {"m": {"1": 4, "2": 5, "3": 6}}
    assert not certificate.replay({"tower": cubic_h1})


def test_truncations_not_pro_zero_within_window(qx, truncations):
    tower = koszul_tower(1, SequenceSpec(qx, ["x"]), truncations, window=6)
    certificate = is_pro_zero(tower)
    assert certificate.verdict == NOT_PRO_ZERO_WITHIN_WINDOW
    assert certificate.witness["offenders"] == [1, 2, 3]
    assert certificate.diagnostics
    assert not certificate.replay({"tower": tower})


def test_tampered_check_fails(cubic_h1):
    certificate = is_pro_zero(cubic_h1)
    check = dict(certificate.checks[0])
    check["args"] = dict(check["args"], m=1)
    assert replay_checks([check], {"tower": cubic_h1}) == [check["name"]]


def test_mittag_leffler_from_pro_zero(cubic_h1):
    certificate = is_mittag_leffler(cubic_h1)
    assert certificate.verdict == ML_CERTIFIED
    assert certificate.witness["permanence"] == "pro_zero"


def test_mittag_leffler_needs_window_three(cubic_sequence, cubic_module):
    tower = koszul_tower(1, cubic_sequence, cubic_module, window=2)
    with pytest.raises(ValueError):
        is_mittag_leffler(tower)


def test_stabilized_without_permanence(qx):
    tower = explicit_tower(qx, [(1, [])], [[[1]]], window=6)
    certificate = is_mittag_leffler(tower)
    assert certificate.verdict == ML_STABILIZED_WITHIN_WINDOW
    assert certificate.diagnostics


def test_lim_of_pro_zero_tower(cubic_h1):
    report = lim_lim1(cubic_h1)
    assert report.rule_applied == "R1_PRO_ZERO"
    assert report.vanishes


def test_lim_of_constant_tower(qx):
    report = lim_lim1(_constant(qx))
    assert report.lim_status == PRESENTED
    assert report.lim1_status == ZERO_CERTIFIED
    assert report.rule_applied == "R3_EVENTUALLY_CONSTANT"
    assert report.to_dict()["lim"]["level"] == 1


def test_lim_by_divisibility(doubling):
    report = lim_lim1(doubling)
    assert report.lim_status == ZERO_CERTIFIED
    assert report.lim1_status == UNDETERMINED
    assert report.rule_applied == "R5_DIVISIBILITY"
    assert not report.classified
    assert is_pro_zero(doubling).verdict == NOT_PRO_ZERO_WITHIN_WINDOW


def test_consistency_audit_flags_vanishing_without_pro_zero(doubling):
    audit = tower_consistency_audit(doubling)
    assert audit["consistent"]
    assert audit["vanishing_without_pro_zero"]


def test_consistency_audit_of_pro_zero_tower(cubic_h1):
    audit = tower_consistency_audit(cubic_h1)
    assert audit["consistent"]
    assert not audit["vanishing_without_pro_zero"]


def test_tags_are_verified(qx):
    tower = explicit_tower(qx, [(1, [])], [[["x"]]], window=4,
                           tags=[SURJECTIVE_BY_CONSTRUCTION])
    with pytest.raises(TowerConstructionError):
        tower.materialize()


def test_finite_length_tag(cubic_sequence, cubic_module):
    tower = koszul_tower(1, cubic_sequence, cubic_module, window=6,
                         tags=[FINITE_LENGTH_LEVELS])
    assert tower.has_verified_tag(FINITE_LENGTH_LEVELS)


def test_eventually_constant_needs_level(qx):
    with pytest.raises(TowerConstructionError):
        explicit_tower(qx, [(1, [])], [[[1]]],
                       tags=[EVENTUALLY_CONSTANT_BY_CONSTRUCTION])


def test_levels_outside_window(cubic_h1):
    with pytest.raises(BadLevelsError):
        cubic_h1.module(7)
    with pytest.raises(BadLevelsError):
        cubic_h1.transition(1, 2)


def test_ind_zero(cubic, cubic_module):
    tower = DirectTower(
        module_rule=lambda n: cubic_module,
        step_rule=lambda n: ModuleMap(cubic_module, cubic_module, [["x"]]),
        window=8
    )
    certificate = is_ind_zero(tower)
    assert certificate.verdict == IND_ZERO
    assert certificate.witness["m"] == {"1": 4, "2": 5, "3": 6, "4": 7}


@pytest.mark.parametrize("relations,f", [
    (((), (), ("x",)), "x"),
    ((("x^2",), ("x^3",), ("x",)), "x"),
    (((), (), ("1",)), 1),
])
def test_six_term_sequence(qx, relations, f):
    first, second, third = (_constant(qx, r) for r in relations)
    report = six_term_check(
        first, second, third,
        lambda n: ModuleMap(first.module(n), second.module(n), [[f]]),
        lambda n: ModuleMap(second.module(n), third.module(n), [[1]])
    )
    assert report["checkable"]
    assert report["exact"]
    assert report["level"] == 1


@pytest.mark.parametrize("ring,horizontal,vertical,pro_zero", [
    ("cubic", "x", 1, True),
    ("cubic", 1, "x", True),
    ("qx", 1, 1, False),
])
def test_bi_pro_zero_equivalence(request, ring, horizontal, vertical,
                                 pro_zero):
    ring = request.getfixturevalue(ring)
    module = FpModule.free(ring, 1)
    bitower = BiTower(
        cell_rule=lambda n, m: Subquotient.whole(module),
        horizontal_rule=lambda n, m: ring.matrix([[horizontal]]),
        vertical_rule=lambda n, m: ring.matrix([[vertical]]),
        window=6
    )
    report = bi_pro_zero_equivalence(bitower)
    assert report["bi_pro_zero"] == pro_zero
    assert report["equivalent"]
    assert report["squares_commute"]
    if pro_zero:
        assert report["diagonal"]["verdict"] == PRO_ZERO
    else:
        assert report["diagonal"]["verdict"] == NOT_PRO_ZERO_WITHIN_WINDOW
        assert len(report["offending_cells"]) == 9


def test_six_term_needs_exact_levels(qx):
    first, second, third = _constant(qx), _constant(qx), _constant(qx, ["x"])
    with pytest.raises(NotCheckableError):
        six_term_check(
            first, second, third,
            lambda n: ModuleMap(first.module(n), second.module(n),
                                [["x^2"]]),
            lambda n: ModuleMap(second.module(n), third.module(n), [[1]])
        )


def test_torsion_chain_tag_is_verified(qx):
    tower = explicit_tower(qx, [(1, [])], [[["x"]]], window=4,
                           tags=[TORSION_CHAIN_BY_CONSTRUCTION])
    with pytest.raises(TowerConstructionError):
        tower.materialize()


def test_stationary_level_of_colon_tower(quintic_instance):
    sequence, module = quintic_instance
    tower = colon_tower(sequence, 1, module, 8)
    assert tower.has_verified_tag(TORSION_CHAIN_BY_CONSTRUCTION)
    assert tower.stationary_level() == 5
    certificate = is_pro_zero(tower)
    assert certificate.verdict == PRO_ZERO
    assert certificate.witness["m"] == {"1": 6, "2": 7, "3": 8, "4": 9}
    assert certificate.diagnostics == [{"stationary_from": 5}]
