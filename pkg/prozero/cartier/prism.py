"""
Condition (b) of a prism: p ∈ I + φ(I)R, with φ the Frobenius lift given on
the variables of R.
"""

import logging

from sympy import isprime

from prozero.errors import NotWellDefinedError
from prozero.ground import format_polynomial
from prozero.rings import Ideal
from prozero.towers import make_check
from prozero.cartier.divisor import membership_check

_LOGGER = logging.getLogger(__name__)


class PrismData(object):
    """
    A ring R with an ideal I, a prime p and the images φ(v) of the variables
    of R. Construction verifies that φ respects the relations of R and lifts
    the Frobenius, φ(v) ≡ v^p mod p.
    """
    def __init__(self, ring, ideal, p, frobenius_images, logger=None):
        """
        Args:
            ring:             (RingPresentation) R
            ideal:            (Ideal or list)    I
            p:                (int)  A prime
            frobenius_images: (dict) Variable name -> image (str or element)

        Raises:
            NotWellDefinedError if φ is not a ring endomorphism of R or does
            not lift the Frobenius
        """
        self.ring = ring
        self.ideal = ideal if isinstance(ideal, Ideal) else Ideal(ring, ideal)
        self.p = int(p)
        self.logger = logger or _LOGGER
        if not isprime(self.p):
            raise NotWellDefinedError("p = {} is not a prime".format(self.p))
        variables = list(ring.variables)
        unknown = sorted(set(frobenius_images) - set(variables))
        if unknown:
            raise NotWellDefinedError("Frobenius images given for unknown "
                                      "variables {}".format(unknown))
        missing = [v for v in variables if v not in frobenius_images]
        if missing:
            raise NotWellDefinedError("No Frobenius image for variables "
                                      "{}".format(missing))
        self.images = {v: ring.element(frobenius_images[v])
                       for v in variables}
        self._verify()

    def __repr__(self):
        return "PrismData(p={}, I=({}))".format(
            self.p, ", ".join(self.ideal.to_strings())
        )

    def frobenius(self, element):
        """ φ(element), reduced in R """
        poly = self.ring.element(element)
        if not self.images:
            return poly
        gens = self.ring.ring.gens
        return self.ring.reduce(poly.compose(
            [(g, self.images[v]) for g, v in zip(gens, self.ring.variables)]
        ))

    def _verify(self):
        for relation in self.ring.ideal_generators:
            if not self.ring.is_zero(self.frobenius(relation)):
                raise NotWellDefinedError(
                    "φ does not respect the relation {}".format(
                        format_polynomial(relation))
                )
        p_ideal = Ideal(self.ring, [self.p])
        for g, v in zip(self.ring.ring.gens, self.ring.variables):
            if not p_ideal.contains(self.images[v] - g ** self.p):
                raise NotWellDefinedError(
                    "φ({}) = {} is not congruent to {}^{} mod {}".format(
                        v, format_polynomial(self.images[v]), v, self.p,
                        self.p)
                )

    def to_dict(self):
        return {"p": self.p, "ideal": self.ideal.to_strings(),
                "frobenius": {v: format_polynomial(e)
                              for v, e in sorted(self.images.items())}}


def prism_condition_b(prism, subject="ring"):
    """
    Decides p ∈ I + φ(I)R by strong Groebner membership over the coefficient
    domain of R.

    Returns:
        dict with 'holds', the generators of I + φ(I)R and either the
        explicit combination or the nonzero normal form of p, plus the
        replayable check
    """
    ring = prism.ring
    generators = list(prism.ideal.generators)
    generators += [prism.frobenius(g) for g in prism.ideal.generators]
    strings = [format_polynomial(g) for g in generators]
    out = {"prism": prism.to_dict(), "generators": strings}
    check = membership_check(subject, ring, prism.p, generators)
    if check is not None:
        out.update({"holds": True,
                    "combination": [[g, c] for g, c in
                                    zip(strings, check["args"]["cofactors"])],
                    "checks": [check]})
        prism.logger.debug("[*] {!r}: condition (b) holds".format(prism))
        return out
    normal_form = Ideal(ring, generators).reduce(ring.element(prism.p))
    out.update({"holds": False,
                "normal_form": format_polynomial(normal_form),
                "checks": [make_check("non_membership", subject,
                                      element=str(prism.p),
                                      generators=strings)]})
    return out
