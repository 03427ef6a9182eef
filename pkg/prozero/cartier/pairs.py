"""
Pro-regular pairs (I, x) and the audits comparing them with bounded torsion
on the divisor, on its charts and with the completion faces of R/I.
"""

import logging

from prozero.errors import NotCheckableError
from prozero.ground import ExactMatrix
from prozero.koszul import SequenceSpec, KoszulLevel, comparison_matrix
from prozero.modules import FpModule, colon
from prozero.rings import Ideal, ideal_power
from prozero.towers import InverseTower, PRO_ZERO, is_pro_zero, run_parallel
from prozero.completion import (Filtration, cech_homology_report,
                                gm_composite_check, VANISHES,
                                ISOMORPHIC_TO_COMPLETION)
from prozero.regularity import is_bounded_torsion, is_pro_regular, BOUNDED
from prozero.utils import half_window, window_or_default
from prozero.cartier.divisor import chart_injectivity

_LOGGER = logging.getLogger(__name__)


def chart_quotient_subject(i):
    return "chart_quotient:{}".format(i)


def chart_colon_subject(i):
    return "chart_quotient_colon:{}".format(i)


def chart_pair_prefix(i):
    """ Prefix of the colon subjects of (x_i/1, x/1) on chart i """
    return "chart{}:".format(i)


def _as_ideal(ring, ideal):
    return ideal if isinstance(ideal, Ideal) else Ideal(ring, ideal)


def pair_level(ideal, x, m):
    """ I^m :_R x^m / I^m as a Subquotient of R, for m >= 1 """
    ring = ideal.ambient
    power = ideal_power(ideal, m).generators
    return colon(FpModule.free(ring, 1), [[g] for g in power],
                 ring.reduce(ring.element(x) ** m))


def pair_tower(ideal, x, window=None, logger=None):
    """ The tower {I^m :_R x^m / I^m} with multiplication by x """
    ring = ideal.ambient
    multiplication = ExactMatrix.diagonal(ring.spec, [ring.element(x)])
    return InverseTower.from_subquotients(
        subquotient_rule=lambda m: pair_level(ideal, x, m),
        ambient_rule=lambda m: multiplication,
        window=window, name="pair", logger=logger
    )


def koszul_pair_tower(ideal, x, window=None, logger=None):
    """ The tower {H_1(x^k; R/I^k)} with the Koszul comparison maps """
    ring = ideal.ambient
    sequence = SequenceSpec(ring, [x])
    comparison = comparison_matrix(sequence, 1, 1, 1)
    return InverseTower.from_subquotients(
        subquotient_rule=lambda k: KoszulLevel(
            sequence, k, FpModule.cyclic(ring, ideal_power(ideal, k))
        ).homology(1),
        ambient_rule=lambda k: comparison,
        window=window, name="koszul_pair", logger=logger
    )


def is_pro_regular_pair(ring, ideal, x, window=None, subject="pair",
                        logger=None):
    """
    (I, x) is pro-regular iff the tower {I^m :_R x^m / I^m} with transitions
    multiplication by x^(m-n) is pro-zero.

    Returns:
        Certificate of kind "pro_zero"
    """
    ideal = _as_ideal(ring, ideal)
    return is_pro_zero(pair_tower(ideal, x, window, logger=logger),
                       subject=subject, logger=logger)


def chart_quotient(divisor, i):
    """ R_{f_i}/x_i R_{f_i} """
    chart_ring = divisor.chart_ring(i)
    return FpModule.cyclic(chart_ring, [divisor.chart_element(
        i, divisor.charts[i][1]
    )])


def chart_pair(divisor, i, x):
    """ (x_i/1, x/1) in R_{f_i} """
    return SequenceSpec(divisor.chart_ring(i),
                        [divisor.chart_element(i, divisor.charts[i][1]),
                         divisor.chart_element(i, x)])


def _chart_faces(divisor, x, i, window, logger):
    local = is_bounded_torsion(chart_quotient(divisor, i),
                               divisor.chart_element(i, x), window,
                               subject=chart_quotient_subject(i),
                               tower_subject=chart_colon_subject(i),
                               logger=logger)
    pro = is_pro_regular(chart_pair(divisor, i, x),
                         FpModule.free(divisor.chart_ring(i), 1), window,
                         subject_prefix=chart_pair_prefix(i), logger=logger)
    return local, pro


def chart_torsion_audit(divisor, x, window=None, jobs=1, logger=None):
    """
    Compares, within the window:
      * bounded x-torsion of R/I;
      * bounded x/1-torsion of every R_{f_i}/x_i R_{f_i};
      * pro-regularity of (x_i/1, x/1) in every R_{f_i};
      * pro-regularity of the pair (I, x).
    The faces are linked through R/I^k -> ⊕ (R/I^k)_{f_i}, whose injectivity
    is verified for k <= ceil(W/2); a failure there leaves the report partial.
    Charts are processed concurrently with 'jobs' workers.

    Returns:
        dict report with the faces, 'agree', 'partial' and 'checks'
    """
    logger = logger or _LOGGER
    W = window_or_default(window)
    ring = divisor.ring
    x = ring.element(x)
    checks = list(divisor.verify()["checks"])

    quotient = FpModule.cyclic(ring, divisor.ideal)
    torsion = is_bounded_torsion(quotient, x, W, subject="quotient",
                                 tower_subject="quotient_colon",
                                 logger=logger)
    holds = [torsion.verdict == BOUNDED]
    checks.extend(torsion.checks)
    faces = run_parallel(lambda i: _chart_faces(divisor, x, i, W, logger),
                         range(len(divisor.charts)), jobs or 1)
    charts = []
    for i, (local, pro) in enumerate(faces):
        charts.append({"chart": i, "bounded_torsion": local.to_dict(),
                       "pro_regular": pro.verdict})
        holds += [local.verdict == BOUNDED, pro.holds]
        checks.extend(c for c in local.checks + pro.all_checks()
                      if c not in checks)
    pair = is_pro_regular_pair(ring, divisor.ideal, x, W, logger=logger)
    holds.append(pair.verdict == PRO_ZERO)
    checks.extend(c for c in pair.checks if c not in checks)

    injectivity = [chart_injectivity(divisor, k)
                   for k in range(1, half_window(W) + 1)]
    partial = not all(r["injective"] for r in injectivity)
    agree = len(set(holds)) == 1
    if not agree:
        logger.warning("[*] Chart audit of {!r} at {}: faces "
                       "disagree".format(divisor, ring.format(x)))
    return {"window": W, "divisor": divisor.to_dict(),
            "x": ring.format(x),
            "quotient_torsion": torsion.to_dict(), "charts": charts,
            "pair": pair.to_dict(), "injectivity": injectivity,
            "holds": holds[0] if agree else None,
            "agree": agree, "partial": partial, "checks": checks}


def divisor_completion_audit(divisor, x, window=None, composite=True,
                             logger=None):
    """
    Compares bounded x-torsion of R/I with the pro-zero property of
    {H_1(x^k; R/I^k)} and with the Čech faces of R/I at x (degree 1
    vanishes, degree 0 is the completion). With 'composite', also records
    the composite-completion check for the I-adic filtration of R.

    Returns:
        dict report with the faces, 'agree' and 'checks'
    """
    logger = logger or _LOGGER
    W = window_or_default(window)
    ring = divisor.ring
    x = ring.element(x)
    quotient = FpModule.cyclic(ring, divisor.ideal)
    sequence = SequenceSpec(ring, [x])
    torsion = is_bounded_torsion(quotient, x, W, subject="quotient",
                                 tower_subject="quotient_colon",
                                 logger=logger)
    koszul = is_pro_zero(koszul_pair_tower(divisor.ideal, x, W,
                                           logger=logger),
                         subject="koszul_pair", logger=logger)
    cech = [cech_homology_report(i, sequence, quotient, window=W,
                                 logger=logger) for i in (0, 1)]
    expected = (ISOMORPHIC_TO_COMPLETION, VANISHES)
    cech_holds = all(r.conclusion == e for r, e in zip(cech, expected))
    holds = [torsion.verdict == BOUNDED, koszul.verdict == PRO_ZERO,
             cech_holds]
    checks = []
    for part in (torsion.checks, koszul.checks, cech[0].checks,
                 cech[1].checks):
        checks.extend(c for c in part if c not in checks)
    report = {"window": W, "divisor": divisor.to_dict(),
              "x": ring.format(x), "quotient_torsion": torsion.to_dict(),
              "koszul_pair": koszul.to_dict(),
              "cech": [r.to_dict() for r in cech],
              "agree": len(set(holds)) == 1,
              "holds": holds[0] if len(set(holds)) == 1 else None}
    if composite:
        try:
            result = gm_composite_check(
                FpModule.free(ring, 1),
                Filtration.adic(FpModule.free(ring, 1), divisor.ideal),
                sequence, window=W, logger=logger
            )
            report["composite"] = {"checkable": True, "route": result["route"],
                                   "agree": result["agree"]}
            checks.extend(c for c in result["checks"] if c not in checks)
        except NotCheckableError as e:
            report["composite"] = {"checkable": False, "reason": str(e)}
    report["checks"] = checks
    return report
