"""
Effective Cartier divisors given by charts: an ideal I of R with a covering
sequence f_1, ..., f_r and elements x_i such that I R_{f_i} = x_i R_{f_i}
with x_i/1 a nonzerodivisor of R_{f_i}.
"""

import logging

from prozero.errors import NotCartierError, ZeroLocalizationError
from prozero.ground import format_polynomial
from prozero.modules import FpModule, colon
from prozero.rings import (Ideal, localize, ideal_power, ideal_intersection,
                           combination_cofactors, covering_cofactors)
from prozero.towers import register_check, make_check
from prozero.utils import window_or_default

_LOGGER = logging.getLogger(__name__)


def chart_subject(i):
    return "chart:{}".format(i)


def _strings(elements):
    return [format_polynomial(e) for e in elements]


@register_check("membership")
def _check_membership(ring, element, generators, cofactors):
    total = ring.ring.zero
    for c, g in zip(cofactors, generators):
        total += ring.element(c) * ring.element(g)
    return len(cofactors) == len(generators) and \
        ring.is_zero(total - ring.element(element))


@register_check("non_membership")
def _check_non_membership(ring, element, generators):
    return not Ideal(ring, generators).contains(element)


@register_check("unit_combination")
def _check_unit_combination(ring, elements, cofactors):
    return _check_membership(ring, 1, elements, cofactors)


@register_check("nonzerodivisor")
def _check_nonzerodivisor(ring, element):
    return is_nonzerodivisor(ring, element)


def is_nonzerodivisor(ring, element):
    """ True iff 0 :_R a = 0 """
    return colon(FpModule.free(ring, 1), [], element).is_zero()


def membership_check(subject, ring, element, generators):
    """
    A 'membership' check record for element ∈ (generators), or None when the
    element is not a member.
    """
    cofactors = combination_cofactors(ring, generators, element)
    if cofactors is None:
        return None
    return make_check("membership", subject,
                      element=format_polynomial(ring.element(element)),
                      generators=_strings(ring.element(g)
                                          for g in generators),
                      cofactors=_strings(cofactors))


class CartierDivisor(object):
    """
    The ideal I of R with its charts (f_i, x_i). The chart rings are the
    Rabinowitsch localizations R_{f_i}.
    """
    def __init__(self, ring, ideal, charts, name=None, verify=True,
                 logger=None):
        """
        Args:
            ring:   (RingPresentation) R
            ideal:  (Ideal or list) I
            charts: (list) Pairs (f_i, x_i) of elements of R
            verify: (bool) Run verify() right away

        Raises:
            NotCartierError if verification fails
        """
        self.ring = ring
        self.ideal = ideal if isinstance(ideal, Ideal) else Ideal(ring, ideal)
        self.charts = [(ring.element(f), ring.element(x)) for f, x in charts]
        self.name = name
        self.logger = logger or _LOGGER
        self.evidence = None
        self._localizations = None
        if not self.charts:
            raise NotCartierError("A divisor needs at least one chart",
                                  chart=None, check="covering")
        if verify:
            self.verify()

    def __repr__(self):
        return "CartierDivisor(I=({}), {} charts)".format(
            ", ".join(self.ideal.to_strings()), len(self.charts)
        )

    @property
    def localizations(self):
        if self._localizations is None:
            out = []
            for i, (f, _) in enumerate(self.charts):
                try:
                    out.append(localize(self.ring, f))
                except ZeroLocalizationError:
                    raise NotCartierError("Chart {} localizes at zero".format(
                        i), chart=i, check="covering")
            self._localizations = out
        return self._localizations

    def chart_ring(self, i):
        return self.localizations[i].ring

    def chart_element(self, i, element):
        """ The image of an element of R in R_{f_i} """
        return self.localizations[i].reduced_image(self.ring.element(element))

    def chart_ideal(self, i, ideal=None):
        """ I R_{f_i} (or the extension of another ideal of R) """
        return self.localizations[i].image_ideal(
            self.ideal if ideal is None else ideal
        )

    def verify(self):
        """
        Runs the construction checks: the f_i cover, I R_{f_i} = x_i R_{f_i},
        x_i/1 is a nonzerodivisor of R_{f_i} and I ⊆ (x_1, ..., x_r).

        Returns:
            dict evidence with the replayable checks

        Raises:
            NotCartierError naming the failing chart and check
        """
        if self.evidence is not None:
            return self.evidence
        ring = self.ring
        fs = [f for f, _ in self.charts]
        cofactors = covering_cofactors(fs, ring)
        if cofactors is None:
            raise NotCartierError("({}) is not a covering sequence".format(
                ", ".join(_strings(fs))), chart=None, check="covering")
        checks = [make_check("unit_combination", "ring",
                             elements=_strings(fs),
                             cofactors=_strings(cofactors))]
        charts = [self._verify_chart(i) for i in range(len(self.charts))]
        for chart in charts:
            checks.extend(chart.pop("checks"))
        xs = [x for _, x in self.charts]
        for g in self.ideal.generators:
            check = membership_check("ring", ring, g, xs)
            if check is None:
                raise NotCartierError(
                    "{} is not in ({})".format(format_polynomial(g),
                                               ", ".join(_strings(xs))),
                    chart=None, check="containment"
                )
            checks.append(check)
        self.logger.debug("[*] Verified {!r}".format(self))
        self.evidence = {"charts": charts, "checks": checks,
                         "covering_cofactors": _strings(cofactors)}
        return self.evidence

    def _verify_chart(self, i):
        subject = chart_subject(i)
        chart_ring = self.chart_ring(i)
        x = self.chart_element(i, self.charts[i][1])
        images = list(self.chart_ideal(i).generators)
        checks = []
        # I R_f inside x R_f and x inside I R_f
        for g in images:
            check = membership_check(subject, chart_ring, g, [x])
            if check is None:
                raise NotCartierError(
                    "I R_f != x R_f on chart {}: {} is not a multiple of "
                    "{}".format(i, format_polynomial(g), format_polynomial(x)),
                    chart=i, check="ideal_equality"
                )
            checks.append(check)
        check = membership_check(subject, chart_ring, x, images)
        if check is None:
            raise NotCartierError("I R_f != x R_f on chart {}: {} is not in "
                                  "I R_f".format(i, format_polynomial(x)),
                                  chart=i, check="ideal_equality")
        checks.append(check)
        if not is_nonzerodivisor(chart_ring, x):
            raise NotCartierError("{} is a zerodivisor on chart {}".format(
                format_polynomial(x), i), chart=i, check="nonzerodivisor")
        checks.append(make_check("nonzerodivisor", subject,
                                 element=format_polynomial(x)))
        return {"chart": i, "f": format_polynomial(self.charts[i][0]),
                "x": format_polynomial(self.charts[i][1]),
                "ring": chart_ring.describe(), "checks": checks}

    def to_dict(self):
        return {"ideal": self.ideal.to_strings(),
                "charts": [[format_polynomial(f), format_polynomial(x)]
                           for f, x in self.charts]}


def verify_cartier(ring, ideal, charts, logger=None):
    """
    Returns:
        (True, evidence) for a verified divisor

    Raises:
        NotCartierError with the failing chart otherwise
    """
    divisor = CartierDivisor(ring, ideal, charts, verify=False,
                             logger=logger)
    return True, divisor.verify()


def chart_power_consistency(divisor, window=None):
    """
    Checks I^n R_{f_i} = x_i^n R_{f_i} for every chart and n = 1..W.

    Returns:
        dict with per-chart failing levels and the overall flag
    """
    W = window_or_default(window)
    records = []
    for i, (_, x) in enumerate(divisor.charts):
        chart_ring = divisor.chart_ring(i)
        image = divisor.chart_element(i, x)
        failing = []
        for n in range(1, W + 1):
            extended = divisor.chart_ideal(i, ideal_power(divisor.ideal, n))
            principal = Ideal(chart_ring, [chart_ring.reduce(image ** n)])
            if not extended.equals(principal):
                failing.append(n)
        records.append({"chart": i, "failing": failing,
                        "consistent": not failing})
    return {"window": W, "charts": records,
            "consistent": all(r["consistent"] for r in records)}


def chart_injectivity(divisor, k):
    """
    R/I^k -> ⊕_i (R/I^k)_{f_i} is injective iff the contractions
    I^k R_{f_i} ∩ R intersect to I^k.

    Returns:
        dict with the contracted ideals, their intersection and 'injective'
    """
    power = ideal_power(divisor.ideal, k)
    contractions = [loc.contract(loc.image_ideal(power))
                    for loc in divisor.localizations]
    intersection = contractions[0]
    for other in contractions[1:]:
        intersection = ideal_intersection(intersection, other)
    return {"k": k,
            "contractions": [c.to_strings() for c in contractions],
            "intersection": intersection.to_strings(),
            "injective": intersection.equals(power)}
