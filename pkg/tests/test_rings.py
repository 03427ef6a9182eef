import pytest

from prozero.errors import ZeroLocalizationError
from prozero.rings import (Ideal, localize, ideal_power,
                           is_covering_sequence, covering_cofactors,
                           combination_cofactors, ideal_intersection)


def test_reduction_modulo_relations(cubic):
    assert cubic.is_zero("x^4 + x^3")
    assert not cubic.is_zero("x^2")
    assert cubic.format("x^5 + x") == "x"


def test_ideal_membership(plane):
    ideal = Ideal(plane, ["x", "y^2"])
    assert "x*y + y^3" in ideal
    assert not ideal.contains("y")
    assert not ideal.is_unit()


def test_ideal_cofactors(plane):
    ideal = Ideal(plane, ["x", "y"])
    cofactors = ideal.cofactors("x^2 + x*y + y^3")
    total = sum((c * g for c, g in zip(cofactors, ideal.generators)),
                plane.zero)
    assert plane.is_zero(total - plane.element("x^2 + x*y + y^3"))
    assert ideal.cofactors("1") is None


def test_ideal_power(plane):
    square = ideal_power(Ideal(plane, ["x", "y"]), 2)
    assert square.equals(Ideal(plane, ["x^2", "x*y", "y^2"]))
    with pytest.raises(ValueError):
        ideal_power(square, 0)


def test_covering_sequence(circle):
    assert is_covering_sequence(["1 + a", "1 - a"], circle)
    cofactors = covering_cofactors(["1 + a", "1 - a"], circle)
    total = sum((c * circle.element(f) for c, f in
                 zip(cofactors, ["1 + a", "1 - a"])), circle.zero)
    assert circle.is_zero(total - circle.one)
    assert is_covering_sequence(["a", "b"], circle)
    assert not is_covering_sequence(["b"], circle)
    assert combination_cofactors(circle, ["b"], "1") is None


def test_ideal_intersection(plane):
    meet = ideal_intersection(Ideal(plane, ["x"]), Ideal(plane, ["y"]))
    assert meet.equals(Ideal(plane, ["x*y"]))


def test_localization_inverts(plane):
    loc = localize(plane, "x")
    product = loc.ring.reduce(loc.inverse * loc.reduced_image(
        plane.element("x")))
    assert loc.ring.is_zero(product - loc.ring.one)


def test_localization_kills_torsion(cross):
    loc = localize(cross, "x")
    assert loc.ring.is_zero(loc.reduced_image(cross.element("y")))


def test_contraction(cross):
    loc = localize(cross, "x")
    contracted = loc.contract(loc.image_ideal(Ideal(cross, ["x^2"])))
    # x is a unit on the chart, so (x^2) extends to the unit ideal
    assert contracted.is_unit()


def test_localization_at_zero(cubic):
    with pytest.raises(ZeroLocalizationError):
        localize(cubic, "x^3")
