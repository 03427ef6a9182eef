"""
Ring presentations R = (coefficients)[variables]/J and ideals of them.
"""

import logging
from functools import cached_property
from itertools import combinations_with_replacement

from prozero.ground import (GroebnerBasis, ExactMatrix, Lifter, syzygies,
                            parse_polynomial, format_polynomial)

_LOGGER = logging.getLogger(__name__)


class RingPresentation(object):
    """
    A computable commutative ring: polynomial ring of a PolyRingSpec modulo
    the ideal J generated by 'ideal_generators' (and the modulus over ZZ/m).
    The reduced Groebner basis of J is computed at construction, so normal
    forms and zero tests are available right away.
    """
    def __init__(self, spec, ideal_generators=(), name=None, degree_cap=None):
        """
        Args:
            spec:             (PolyRingSpec) The ambient polynomial ring
            ideal_generators: (list)  Polynomials (or strings) generating J
            name:             (str)   Optional name used in reports
            degree_cap:       (int)   Optional Groebner degree cap
        """
        self.spec = spec
        self.name = name
        ring = spec.ring
        gens = [self._coerce(g) for g in ideal_generators]
        self.ideal_generators = tuple(g for g in gens if g)
        self._frame = spec.frame(1)
        constants = [ring(m) for m in spec.coefficients.base_relations]
        self._basis = GroebnerBasis(
            self._frame,
            [self._frame.embed([g])
             for g in list(self.ideal_generators) + constants],
            degree_cap=degree_cap
        )
        self.cached_basis = tuple(self._frame.vector(g)[0]
                                  for g in self._basis)
        self._key = (spec, tuple(format_polynomial(g)
                                 for g in self.cached_basis))

    def _coerce(self, value):
        if isinstance(value, str):
            return parse_polynomial(value, self.spec)
        return self.spec.ring(value)

    def __repr__(self):
        return "RingPresentation({}{}, J=({}))".format(
            "{}: ".format(self.name) if self.name else "",
            self.spec, ", ".join(self._key[1])
        )

    def __eq__(self, other):
        return isinstance(other, RingPresentation) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    @property
    def ring(self):
        """ The sympy polynomial ring the elements live in """
        return self.spec.ring

    @property
    def relations(self):
        """ Reduced Groebner basis of J, used as ring relations elsewhere """
        return self.cached_basis

    @property
    def variables(self):
        return self.spec.variables

    @property
    def gens(self):
        """ Mapping of variable name to its (reduced) image in R """
        return {name: self.reduce(g)
                for name, g in zip(self.spec.variables, self.ring.gens)}

    @property
    def one(self):
        return self.reduce(self.ring.one)

    @property
    def zero(self):
        return self.ring.zero

    def element(self, value):
        """ Coerce a string, integer or polynomial into a reduced element """
        return self.reduce(self._coerce(value))

    def reduce(self, poly):
        """ Normal form of 'poly' with respect to J """
        poly = self.ring(poly)
        if not poly or not self.cached_basis:
            return poly
        return self._frame.vector(
            self._basis.reduce(self._frame.embed([poly]))
        )[0]

    def is_zero(self, poly):
        return not self.reduce(poly)

    def contains(self, poly):
        """ True iff poly lies in J """
        return self.is_zero(poly)

    def is_zero_ring(self):
        return self.is_zero(self.ring.one)

    def reduce_vector(self, vector):
        return [self.reduce(p) for p in vector]

    def reduce_matrix(self, matrix):
        return matrix.map_entries(self.reduce)

    def matrix(self, rows, shape=None):
        """ ExactMatrix over this ring from rows of elements or strings """
        coerced = [[self.element(v) for v in row] for row in rows]
        return ExactMatrix(self.spec, coerced, shape=shape)

    def format(self, poly):
        return format_polynomial(self.reduce(poly))

    def ideal(self, generators):
        return Ideal(self, generators)

    def describe(self):
        """ JSON-ready description for reports """
        return {"coefficients": str(self.spec.coefficients),
                "variables": list(self.spec.variables),
                "order": self.spec.monomial_order,
                "basis": list(self._key[1])}


class Ideal(object):
    """
    An ideal of a RingPresentation given by generators reduced modulo J.
    Zero generators and repetitions are dropped.
    """
    def __init__(self, ambient, generators):
        self.ambient = ambient
        reduced = []
        for g in generators:
            r = ambient.element(g)
            if r and r not in reduced:
                reduced.append(r)
        self.generators = tuple(reduced)

    def __repr__(self):
        return "Ideal({})".format(", ".join(self.to_strings()))

    def __len__(self):
        return len(self.generators)

    @cached_property
    def basis(self):
        """ Groebner basis of the preimage of the ideal in the polynomial ring """
        frame = self.ambient.spec.frame(1)
        polys = [frame.embed([g])
                 for g in list(self.generators) + list(self.ambient.relations)]
        return GroebnerBasis(frame, polys)

    def reduce(self, poly):
        frame = self.basis.frame
        return frame.vector(self.basis.reduce(
            frame.embed([self.ambient.ring(poly)])
        ))[0]

    def contains(self, poly):
        return not self.reduce(self.ambient.element(poly))

    def __contains__(self, poly):
        return self.contains(poly)

    def is_unit(self):
        return self.contains(self.ambient.ring.one)

    def is_zero(self):
        return len(self.generators) == 0

    def is_subset(self, other):
        return all(other.contains(g) for g in self.generators)

    def equals(self, other):
        return self.is_subset(other) and other.is_subset(self)

    def __add__(self, other):
        return Ideal(self.ambient, self.generators + other.generators)

    def __mul__(self, other):
        return Ideal(self.ambient, [a * b for a in self.generators
                                    for b in other.generators])

    def power(self, n):
        return ideal_power(self, n)

    def cofactors(self, poly):
        """
        Return cofactors c with sum c_i g_i = poly modulo J (aligned with
        self.generators), or None if poly is not in the ideal.
        """
        return combination_cofactors(self.ambient, self.generators, poly)

    def to_strings(self):
        return [format_polynomial(g) for g in self.generators]


def combination_cofactors(ring, elements, target):
    """
    Cofactors c_i with sum c_i * elements_i = target in R, aligned with the
    given elements, or None when target is not in the ideal they generate.

    Args:
        ring:     (RingPresentation) The ring R
        elements: (list) Elements of R
        target:   (str, int or polynomial) Element of R
    """
    elements = [ring.element(e) for e in elements]
    target = ring.element(target)
    if not elements:
        return [] if not target else None
    lifter = Lifter(ring.spec, 1, [[e] for e in elements], (),
                    ring.relations)
    cofactors = lifter.lift([target])
    if cofactors is None:
        return None
    return [ring.reduce(c) for c in cofactors]


def ideal_power(ideal, n):
    """
    Return I^n generated by all n-fold products of the generators of I.

    Args:
        ideal: (Ideal) The ideal I
        n:     (int)   Exponent, n >= 1
    """
    n = int(n)
    if n < 1:
        raise ValueError("Ideal power needs n >= 1, got {}".format(n))
    gens = ideal.generators
    ring = ideal.ambient.ring
    products = []
    for combination in combinations_with_replacement(range(len(gens)), n):
        p = ring.one
        for i in combination:
            p = p * gens[i]
        products.append(p)
    return Ideal(ideal.ambient, products)


def is_covering_sequence(elements, ring):
    """
    True iff 1 lies in the ideal generated by 'elements'. The empty sequence
    covers exactly the zero ring.
    """
    return Ideal(ring, elements).is_unit()


def covering_cofactors(elements, ring):
    """ Cofactors a_i with sum a_i f_i = 1, or None if not covering """
    return combination_cofactors(ring, elements, 1)


def ideal_intersection(first, second):
    """
    I ∩ J from the syzygies (a, b) of sum a_i g_i - sum b_j h_j = 0 in R:
    the elements sum a_i g_i generate the intersection.

    Args:
        first, second: (Ideal) Ideals of the same RingPresentation
    """
    ring = first.ambient
    if ring != second.ambient:
        raise ValueError("Ideals of different rings")
    if not first.generators or not second.generators:
        return Ideal(ring, [])
    columns = [[g] for g in first.generators] + \
        [[-h] for h in second.generators]
    k = len(first.generators)
    out = []
    for syzygy in syzygies(ring.spec, 1, columns, (), ring.relations):
        element = ring.ring.zero
        for a, g in zip(syzygy[:k], first.generators):
            element += a * g
        out.append(element)
    return Ideal(ring, out)
