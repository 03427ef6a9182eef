"""
Localization R -> R_f = R[t]/(J, t*f - 1) by one element.
"""

from prozero.errors import ZeroLocalizationError
from prozero.ground import PolyRingSpec, ExactMatrix, groebner_basis
from prozero.rings.presentation import RingPresentation, Ideal


class Localization(object):
    """
    The localization of a RingPresentation at an element f, presented with
    an extra variable t and the relation t*f - 1. Carries the canonical map
    R -> R_f ('image') and the contraction of ideals back to R.
    """
    def __init__(self, base, element):
        """
        Args:
            base:    (RingPresentation) The ring R
            element: (str, int or polynomial) The element f

        Raises:
            ZeroLocalizationError if f = 0 in R
        """
        self.base = base
        f = base.element(element)
        if not f:
            raise ZeroLocalizationError(
                "Cannot localize {!r} at an element which is zero".format(base)
            )
        self.element = f
        self.variable = base.spec.fresh_variable("t")
        self.spec = base.spec.with_variables(base.spec.variables +
                                             (self.variable,))
        t = self.spec.ring.gens[-1]
        generators = [self.image(g) for g in base.ideal_generators]
        generators.append(t * self.image(f) - 1)
        name = "{}[1/({})]".format(base.name or "R", base.format(f))
        self.ring = RingPresentation(self.spec, generators, name=name)

    def __repr__(self):
        return "Localization({!r} at {})".format(self.base,
                                                 self.base.format(self.element))

    @property
    def inverse(self):
        """ The element 1/f of R_f """
        return self.ring.reduce(self.spec.ring.gens[-1])

    def image(self, poly):
        """ Canonical image of an element of R (unreduced) """
        ring = self.spec.ring
        out = ring.zero
        for monomial, coefficient in self.base.ring(poly).items():
            out[monomial + (0,)] = coefficient
        return out

    def reduced_image(self, poly):
        return self.ring.reduce(self.image(poly))

    def image_vector(self, vector):
        return [self.reduced_image(p) for p in vector]

    def image_matrix(self, matrix):
        rows = [[self.reduced_image(p) for p in matrix.row(i)]
                for i in range(matrix.rows)]
        return ExactMatrix(self.spec, rows, shape=matrix.shape)

    def image_ideal(self, ideal):
        return Ideal(self.ring, [self.image(g) for g in ideal.generators])

    def base_change(self, module):
        """ The module M_f = M (x)_R R_f """
        from prozero.modules import FpModule
        return FpModule(self.ring, module.generators,
                        self.image_matrix(module.relations))

    def contract(self, ideal):
        """
        Return the contraction (ideal of R_f) intersected with R, computed by
        eliminating t.

        Args:
            ideal: (Ideal) Ideal of self.ring
        """
        base_spec = self.base.spec
        elimination = PolyRingSpec(base_spec.coefficients,
                                   (self.variable,) + base_spec.variables,
                                   "elimination", 1)
        polys = [self._move_t_first(g, elimination)
                 for g in list(ideal.generators) + list(self.ring.relations)]
        kept = []
        for g in groebner_basis(polys, elimination):
            if all(m[0] == 0 for m in g.itermonoms()):
                kept.append(self._drop_t(g))
        return Ideal(self.base, kept)

    def _move_t_first(self, poly, elimination):
        out = elimination.ring.zero
        for monomial, coefficient in poly.items():
            out[monomial[-1:] + monomial[:-1]] = coefficient
        return out

    def _drop_t(self, poly):
        out = self.base.ring.zero
        for monomial, coefficient in poly.items():
            out[monomial[1:]] = coefficient
        return out


def localize(ring, element):
    """
    Return the Localization of 'ring' at 'element'; its .ring attribute is
    the presentation R[t]/(J, t*f - 1).
    """
    return Localization(ring, element)
