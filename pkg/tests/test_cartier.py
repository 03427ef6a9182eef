import pytest

from prozero.errors import NotCartierError, NotWellDefinedError
from prozero.rings import Ideal
from prozero.towers import PRO_ZERO, replay_checks
from prozero.cartier import (CartierDivisor, verify_cartier,
                             chart_power_consistency, chart_injectivity,
                             is_pro_regular_pair, pair_level,
                             chart_torsion_audit, divisor_completion_audit,
                             PrismData, prism_condition_b)


@pytest.fixture
def circle_divisor(circle, circle_point, circle_charts):
    return CartierDivisor(circle, circle_point, circle_charts, name="point")


@pytest.fixture
def line_divisor(plane):
    """ The divisor y = 0 of the plane, with the single chart (1, y) """
    return CartierDivisor(plane, ["y"], [["1", "y"]], name="line")


def test_verify_circle_point(circle, circle_point, circle_charts):
    holds, evidence = verify_cartier(circle, circle_point, circle_charts)
    assert holds
    assert len(evidence["charts"]) == 2
    assert evidence["checks"]
    assert len(evidence["covering_cofactors"]) == 2


def test_evidence_replays(circle, circle_divisor):
    evidence = circle_divisor.verify()

    def resolve(key):
        if key == "ring":
            return circle
        return circle_divisor.chart_ring(int(key.split(":")[1]))
    assert not replay_checks(evidence["checks"], resolve)


def test_not_cartier(plane):
    with pytest.raises(NotCartierError) as info:
        verify_cartier(plane, Ideal(plane, ["x", "y"]), [["1", "x"]])
    assert info.value.chart == 0
    assert info.value.check == "ideal_equality"


def test_charts_must_cover(circle, circle_point):
    with pytest.raises(NotCartierError) as info:
        CartierDivisor(circle, circle_point, [["b", "b"]])
    assert info.value.check == "covering"


def test_zero_divisor_chart(cross):
    with pytest.raises(NotCartierError) as info:
        CartierDivisor(cross, ["x"], [["1", "x"]])
    assert info.value.check == "nonzerodivisor"


def test_chart_power_consistency(circle_divisor):
    report = chart_power_consistency(circle_divisor, window=8)
    assert report["window"] == 8
    assert report["consistent"]
    assert [r["failing"] for r in report["charts"]] == [[], []]


def test_chart_injectivity(circle_divisor):
    assert chart_injectivity(circle_divisor, 1)["injective"]


def test_pair_levels(cross):
    ideal = Ideal(cross, ["y"])
    assert pair_level(ideal, "x", 2).contains([cross.element("y")])
    certificate = is_pro_regular_pair(cross, ideal, "x", window=6)
    assert certificate.verdict == PRO_ZERO


def test_pair_on_regular_divisor(plane):
    certificate = is_pro_regular_pair(plane, ["y"], "x", window=4)
    assert certificate.verdict == PRO_ZERO
    assert certificate.witness["m"] == {"1": 1, "2": 2}


def test_chart_torsion_audit(line_divisor):
    report = chart_torsion_audit(line_divisor, "x", window=4)
    assert report["agree"]
    assert report["holds"]
    assert not report["partial"]


def test_divisor_completion_audit(line_divisor):
    report = divisor_completion_audit(line_divisor, "x", window=4)
    assert report["agree"]
    assert report["holds"]
    assert report["composite"]["checkable"]


def test_prism_condition_holds(z4):
    prism = PrismData(z4, ["u - 2"], 2, {"u": "u^2"})
    result = prism_condition_b(prism)
    assert result["holds"]
    assert result["combination"]
    assert not replay_checks(result["checks"], {"ring": z4})


def test_prism_condition_fails(z4):
    result = prism_condition_b(PrismData(z4, ["u"], 2, {"u": "u^2"}))
    assert not result["holds"]
    assert result["normal_form"] == "2"
    assert not replay_checks(result["checks"], {"ring": z4})


@pytest.mark.parametrize("p,images", [
    (4, {"u": "u^2"}),
    (2, {"u": "u^3"}),
    (2, {}),
    (2, {"u": "u^2", "v": "v"}),
])
def test_prism_data_is_validated(z4, p, images):
    with pytest.raises(NotWellDefinedError):
        PrismData(z4, ["u - 2"], p, images)


def test_chart_torsion_audit_on_circle(circle_divisor):
    report = chart_torsion_audit(circle_divisor, "b", window=4)
    assert report["agree"]
    assert report["holds"]
    assert not report["partial"]
    assert len(report["charts"]) == 2
    assert report["quotient_torsion"]["witness"]["index"] == 1


def test_chart_audit_is_chart_independent(circle, circle_point,
                                          circle_charts, circle_divisor):
    refined = CartierDivisor(circle, circle_point,
                             circle_charts + [["b", "1"]], name="refined")
    first = chart_torsion_audit(circle_divisor, "b", window=4)
    second = chart_torsion_audit(refined, "b", window=4)
    assert len(second["charts"]) == 3
    for key in ("agree", "holds", "partial"):
        assert first[key] == second[key]
    assert first["quotient_torsion"] == second["quotient_torsion"]
    assert first["pair"]["verdict"] == second["pair"]["verdict"]
