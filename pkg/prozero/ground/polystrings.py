"""
Polynomial strings of the problem-file grammar: integer or a/b
coefficients, '*', '^', '+', '-', parentheses and variable names.
"""

import re

from sympy import Symbol
from sympy.parsing.sympy_parser import (parse_expr, standard_transformations,
                                        convert_xor)
from sympy.polys.domains import QQ

from prozero.errors import PolynomialParseError
from prozero.ground.domains import (PRIME_FIELD, INTEGERS, INTEGERS_MOD,
                                    _poly_ring)

_ALLOWED = re.compile(r"^[0-9A-Za-z_+\-*/^()\s]*$")
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _rational_ring(spec):
    from sympy.polys.orderings import lex
    return _poly_ring(spec.variables, QQ, lex)


def parse_polynomial(text, spec, location=None):
    """
    Parse 'text' into a polynomial of spec.ring.

    Args:
        text:     (str, int)     Polynomial string, or an integer
        spec:     (PolyRingSpec) Target polynomial ring
        location: (str)          JSON path used in error messages

    Raises:
        PolynomialParseError if the string is outside the grammar, names an
        unknown variable, or has coefficients not representable in the
        coefficient domain.
    """
    if isinstance(text, bool):
        raise PolynomialParseError("Expected a polynomial string, got "
                                   "{!r}".format(text), location=location)
    if isinstance(text, int):
        text = str(text)
    if not isinstance(text, str) or not text.strip():
        raise PolynomialParseError("Expected a non-empty polynomial string, "
                                   "got {!r}".format(text), location=location)
    if not _ALLOWED.match(text) or "**" in text:
        raise PolynomialParseError("Polynomial '{}' contains characters "
                                   "outside the grammar".format(text),
                                   location=location)
    names = {}
    for name in _IDENTIFIER.findall(text):
        if name not in spec.variables:
            raise PolynomialParseError("Unknown variable '{}' in '{}'".format(
                name, text
            ), location=location)
        names[name] = Symbol(name)
    try:
        expr = parse_expr(text, local_dict=names,
                          transformations=_TRANSFORMATIONS, evaluate=True)
        rational = _rational_ring(spec).from_expr(expr)
    except Exception as e:
        raise PolynomialParseError("Cannot parse polynomial '{}' ({})".format(
            text, e
        ), location=location)
    return _convert(rational, spec, text, location)


def _convert(rational, spec, text, location):
    ring = spec.ring
    K = ring.domain
    kind = spec.coefficients.kind
    out = ring.zero
    for monomial, coefficient in rational.items():
        num, den = int(coefficient.numerator), int(coefficient.denominator)
        if kind in (INTEGERS, INTEGERS_MOD):
            if den != 1:
                raise PolynomialParseError(
                    "Non-integer coefficient in '{}' over {}".format(
                        text, spec.coefficients
                    ), location=location
                )
            value = K(num)
        elif kind == PRIME_FIELD:
            if den % spec.coefficients.modulus == 0:
                raise PolynomialParseError(
                    "Denominator divisible by the characteristic in "
                    "'{}'".format(text), location=location
                )
            value = K.quo(K(num), K(den))
        else:
            value = K.convert(coefficient, QQ)
        if value:
            out[monomial] = value
    return out


def coefficient_to_fraction(coefficient, domain):
    """ Return (numerator, denominator) Python integers of a coefficient """
    if domain.is_FiniteField:
        return int(domain.to_int(coefficient)) % domain.characteristic(), 1
    if domain.is_QQ:
        return int(coefficient.numerator), int(coefficient.denominator)
    return int(coefficient), 1


def format_polynomial(poly):
    """
    Format a polynomial in the problem-file grammar, terms in decreasing
    ring order. Prime field coefficients are written in [0, p).
    """
    if not poly:
        return "0"
    ring = poly.ring
    names = [str(s) for s in ring.symbols]
    terms = sorted(poly.items(), key=lambda t: ring.order(t[0]), reverse=True)
    out = ""
    for index, (monomial, coefficient) in enumerate(terms):
        num, den = coefficient_to_fraction(coefficient, ring.domain)
        factors = []
        for name, exponent in zip(names, monomial):
            if exponent == 1:
                factors.append(name)
            elif exponent:
                factors.append("{}^{}".format(name, exponent))
        negative = num < 0
        num = abs(num)
        value = str(num) if den == 1 else "{}/{}".format(num, den)
        if factors and value == "1":
            term = "*".join(factors)
        else:
            term = "*".join([value] + factors)
        if index == 0:
            out = "-" + term if negative else term
        else:
            out += (" - " if negative else " + ") + term
    return out


def format_vector(vector):
    return [format_polynomial(p) for p in vector]
