import numpy as np
import pytest

from prozero.errors import (PolynomialParseError, UnsupportedDomainError,
                            DegreeCapExceeded)
from prozero.ground import (PolyRingSpec, CoefficientDomain, parse_polynomial,
                            format_polynomial, groebner_basis,
                            SmithNormalForm, smith_normal_form,
                            integer_kernel, syzygies, Lifter)


@pytest.fixture
def spec():
    return PolyRingSpec("QQ", ["x", "y"])


def test_parse_format_is_stable(spec):
    poly = parse_polynomial("x^2 + 2*x*y - 1/2", spec)
    assert parse_polynomial(format_polynomial(poly), spec) == poly
    assert format_polynomial(spec.ring.zero) == "0"


def test_parse_accepts_integers(spec):
    assert parse_polynomial(3, spec) == spec.ring(3)


@pytest.mark.parametrize("text", ["x^2 + z", "x**2", "x; y", ""])
def test_parse_rejects_outside_grammar(spec, text):
    with pytest.raises(PolynomialParseError):
        parse_polynomial(text, spec, location="$.rings.r")


def test_parse_error_keeps_location(spec):
    with pytest.raises(PolynomialParseError) as info:
        parse_polynomial("w", spec, location="$.ideals.i.generators[0]")
    assert info.value.location == "$.ideals.i.generators[0]"
    assert info.value.code == "PARSE_ERROR"


def test_prime_field_coefficients_are_canonical():
    spec = PolyRingSpec("GF(5)", ["x"])
    assert format_polynomial(parse_polynomial("7*x", spec)) == "2*x"


@pytest.mark.parametrize("text", ["QQ", "ZZ", "GF(7)", "ZZ/4", "ZZ/(6)"])
def test_coefficient_domains(text):
    assert CoefficientDomain.from_string(text) is not None


@pytest.mark.parametrize("text", ["GF(4)", "ZZ/1", "RR"])
def test_unsupported_coefficient_domains(text):
    with pytest.raises(UnsupportedDomainError):
        CoefficientDomain.from_string(text)


def test_groebner_unit_ideal(spec):
    basis = groebner_basis([parse_polynomial(g, spec)
                            for g in ("x - 1", "x + 1")], spec)
    assert [format_polynomial(g) for g in basis] == ["1"]


def test_strong_groebner_over_integers():
    spec = PolyRingSpec("ZZ", ["x"])
    basis = groebner_basis([parse_polynomial(g, spec)
                            for g in ("2*x", "3*x")], spec)
    assert [format_polynomial(g) for g in basis] == ["x"]


def test_groebner_degree_cap(spec):
    with pytest.raises(DegreeCapExceeded) as info:
        groebner_basis([parse_polynomial("x^5 - y", spec)], spec,
                       degree_cap=2)
    assert info.value.cap == 2


def test_smith_normal_form():
    A = [[2, 4], [6, 8]]
    snf = SmithNormalForm(A).run()
    assert snf.invariant_factors == [2, 4]
    assert snf.rank == 2
    U, D, V = smith_normal_form(A)
    assert (np.dot(np.dot(U, np.array(A, dtype=object)), V) == D).all()


def test_integer_kernel():
    A = [[1, 2, 3]]
    kernel = integer_kernel(A)
    assert len(kernel) == 2
    for v in kernel:
        assert sum(a * b for a, b in zip(A[0], v)) == 0


def test_syzygies_of_two_variables(spec):
    x, y = spec.ring.gens
    out = syzygies(spec, 1, [[x], [y]])
    assert out
    for a, b in out:
        assert a * x + b * y == 0


def test_lifter(spec):
    x, y = spec.ring.gens
    lifter = Lifter(spec, 1, [[x], [y]])
    c = lifter.lift([x * y + y ** 2])
    assert c[0] * x + c[1] * y == x * y + y ** 2
    assert lifter.lift([spec.ring.one]) is None
    assert not lifter.contains([spec.ring(3)])
