"""
Semi-decisions on towers: pro-zero, Mittag-Leffler, ind-zero and the
classified evaluation of lim / lim^1.

All negative verdicts are relative to the materialized window 1..W. Witnesses
are sought for the levels n <= ceil(W/2) so that every such level has room to
map from far above it.
"""

import logging

from prozero.ground import SmithNormalForm
from prozero.modules import IsomorphismCertificate
from prozero.utils import check_window, half_window
from prozero.towers.tower import (SURJECTIVE_BY_CONSTRUCTION,
                                  FINITE_LENGTH_LEVELS,
                                  EVENTUALLY_CONSTANT_BY_CONSTRUCTION,
                                  DIVISIBILITY_BY_CONSTRUCTION,
                                  TORSION_CHAIN_BY_CONSTRUCTION)
from prozero.towers.certificates import (PRO_ZERO, NOT_PRO_ZERO_WITHIN_WINDOW,
                                         ML_CERTIFIED,
                                         ML_STABILIZED_WITHIN_WINDOW,
                                         NOT_ML_WITHIN_WINDOW, UNDETERMINED,
                                         IND_ZERO, NOT_IND_ZERO_WITHIN_WINDOW,
                                         ZERO_CERTIFIED, PRESENTED,
                                         Certificate, LimReport,
                                         register_check, make_check)

_LOGGER = logging.getLogger(__name__)

COUNTABILITY_NOTE = ("images fail to stabilize inside the window; for towers "
                     "of countable modules a perpetual failure would force "
                     "lim^1 != 0, which cannot be decided on a finite window")


@register_check("zero_map")
def _check_zero_map(tower, n, m):
    return tower.transition(m, n).is_zero()


@register_check("nonzero_map")
def _check_nonzero_map(tower, n, m):
    return not tower.transition(m, n).is_zero()


@register_check("stationary_level")
def _check_stationary_level(tower, n):
    return tower.stationary_level() == n


@register_check("images_equal")
def _check_images_equal(tower, n, m, k):
    return tower.image(n, m).equals(tower.image(n, k))


@register_check("images_differ")
def _check_images_differ(tower, n, m, k):
    return not tower.image(n, m).equals(tower.image(n, k))


@register_check("image_component")
def _check_image_component(tower, n, m, component):
    return tower.image_component(n, m) == component


@register_check("tag")
def _check_tag(tower, tag):
    return tower.has_verified_tag(tag)


@register_check("step_isomorphism")
def _check_step_isomorphism(tower, n):
    return tower.step(n).is_isomorphism()


@register_check("stable_image_isomorphism")
def _check_stable_image_isomorphism(tower, n):
    return _stable_image_step(tower, n).is_isomorphism()


@register_check("invariant_factor_growth")
def _check_invariant_factor_growth(tower, n, m):
    return _smallest_invariant_factor(tower, n, m) < \
        _smallest_invariant_factor(tower, n, m + 1)


@register_check("isomorphism")
def _check_isomorphism(pair, forward, backward):
    first, second = pair
    certificate = IsomorphismCertificate.from_dict(
        {"forward": forward, "backward": backward}, first, second
    )
    return certificate.verify()


@register_check("ind_zero")
def _check_ind_zero(tower, n, m):
    return tower.transition(n, m).is_zero()


@register_check("bi_zero_map")
def _check_bi_zero_map(bitower, n, m, n2, m2):
    return bitower.transition(n2, m2, n, m).is_zero()


def _smallest_invariant_factor(tower, n, m):
    """
    Smallest invariant factor of the integer matrix of phi_{n,m}, or 0 when
    the map is zero.
    """
    matrix = tower.transition(m, n).matrix
    entries = [[int(e.const()) if e else 0 for e in matrix.row(i)]
               for i in range(matrix.rows)]
    snf = SmithNormalForm(entries)
    snf.run()
    factors = snf.invariant_factors
    return min(factors) if factors else 0


def _stable_image_step(tower, n):
    """
    The map Im(phi_{n+1,W}) -> Im(phi_{n,W}) induced by the one-step map
    M_{n+1} -> M_n.
    """
    W = tower.window
    return tower.image(n + 1, W).induced_map(tower.image(n, W),
                                             tower.step(n).matrix)


def is_pro_zero(tower, subject="tower", logger=None):
    """
    Pro-zero semi-decision. For every level n <= ceil(W/2) the smallest
    m in n..W with phi_{n,m} = 0 is recorded as witness m(n).

    A torsion chain {0 :_N c^n} that is stationary from s on (levels s and
    s+1 agree, s < W) is pro-zero with m(n) = n + s for every n, also when
    n + s lies beyond the window: phi_{n,n+s} is c^s on 0 :_N c^s.

    Args:
        tower:   (InverseTower) The tower (materialized on demand)
        subject: (str) Key under which replay resolves the tower
        logger:  (logging.Logger) Optional logger

    Returns:
        Certificate of kind "pro_zero"
    """
    logger = logger or _LOGGER
    W = check_window(tower.window, 2)
    tower.materialize()
    stationary = tower.stationary_level()
    if stationary is not None:
        return _pro_zero_of_stationary_chain(tower, stationary, subject,
                                             logger)
    witness, offenders, checks, diagnostics = {}, [], [], []
    for n in range(1, half_window(W) + 1):
        found = next((m for m in range(n, W + 1)
                      if tower.transition(m, n).is_zero()), None)
        if found is not None:
            witness[str(n)] = found
            checks.append(make_check("zero_map", subject, n=n, m=found))
            continue
        offenders.append(n)
        checks.append(make_check("nonzero_map", subject, n=n, m=W))
        for m in range(n + 1, W + 1):
            component = tower.image_component(n, m)
            diagnostics.append({"n": n, "m": m,
                                "lowest_nonzero_component": component})
        checks.append(make_check("image_component", subject, n=n, m=W,
                                 component=tower.image_component(n, W)))
    if offenders:
        verdict = NOT_PRO_ZERO_WITHIN_WINDOW
        witness = {"m": witness, "offenders": offenders}
    else:
        verdict = PRO_ZERO
        witness = {"m": witness}
    logger.debug("[*] {!r}: {}".format(tower, verdict))
    return Certificate("pro_zero", verdict, witness, checks, diagnostics,
                       subject=subject)


def _pro_zero_of_stationary_chain(tower, s, subject, logger):
    W = tower.window
    levels = range(1, half_window(W) + 1)
    checks = [make_check("zero_map", subject, n=n, m=n + s)
              for n in levels if n + s <= W]
    checks += [make_check("tag", subject, tag=TORSION_CHAIN_BY_CONSTRUCTION),
               make_check("stationary_level", subject, n=s)]
    logger.debug("[*] {!r}: stationary from {}, {}".format(tower, s,
                                                          PRO_ZERO))
    return Certificate("pro_zero", PRO_ZERO,
                       {"m": {str(n): n + s for n in levels}}, checks,
                       [{"stationary_from": s}], subject=subject)


def _permanence_tag(tower):
    for tag in (FINITE_LENGTH_LEVELS, SURJECTIVE_BY_CONSTRUCTION):
        if tower.has_verified_tag(tag):
            return tag
    return None


def is_mittag_leffler(tower, subject="tower", logger=None):
    """
    Mittag-Leffler semi-decision. For n <= ceil(W/2), m0(n) is the smallest
    m such that Im(phi_{n,m}) equals Im(phi_{n,W}). Stabilization inside the
    window only certifies the condition together with a permanence argument:
    a pro-zero witness, finite length levels or surjective transitions.

    Returns:
        Certificate of kind "mittag_leffler"
    """
    logger = logger or _LOGGER
    W = check_window(tower.window, 3)
    tower.materialize()
    pro_zero = is_pro_zero(tower, subject=subject, logger=logger)
    if pro_zero.verdict == PRO_ZERO:
        return Certificate(
            "mittag_leffler", ML_CERTIFIED,
            {"m0": pro_zero.witness["m"], "permanence": "pro_zero"},
            pro_zero.checks, subject=subject
        )
    stabilization, failing, checks = {}, [], []
    for n in range(1, half_window(W) + 1):
        final = tower.image(n, W)
        m0 = W
        for m in range(W - 1, n - 1, -1):
            if not tower.image(n, m).equals(final):
                break
            m0 = m
        if m0 == W:
            failing.append(n)
            checks.append(make_check("images_differ", subject, n=n, m=W - 1,
                                     k=W))
        else:
            stabilization[str(n)] = m0
            checks.append(make_check("images_equal", subject, n=n, m=m0,
                                     k=W))
    if failing:
        return Certificate("mittag_leffler", NOT_ML_WITHIN_WINDOW,
                           {"m0": stabilization, "offenders": failing},
                           checks, [COUNTABILITY_NOTE], subject=subject)
    tag = _permanence_tag(tower)
    if tag is None:
        return Certificate(
            "mittag_leffler", ML_STABILIZED_WITHIN_WINDOW,
            {"m0": stabilization}, checks,
            ["images stabilize inside the window but no structural tag "
             "guarantees permanence"], subject=subject
        )
    checks.append(make_check("tag", subject, tag=tag))
    logger.debug("[*] {!r}: ML by {}".format(tower, tag))
    return Certificate("mittag_leffler", ML_CERTIFIED,
                       {"m0": stabilization, "permanence": tag}, checks,
                       subject=subject)


def _rule_pro_zero(tower, subject, logger):
    certificate = is_pro_zero(tower, subject=subject, logger=logger)
    if certificate.verdict != PRO_ZERO:
        return None
    return {"lim": ZERO_CERTIFIED, "lim1": ZERO_CERTIFIED,
            "checks": certificate.checks}


def _rule_eventually_constant(tower, subject, logger):
    if not tower.has_verified_tag(EVENTUALLY_CONSTANT_BY_CONSTRUCTION):
        return None
    n0 = tower.stable_from
    checks = [make_check("tag", subject,
                         tag=EVENTUALLY_CONSTANT_BY_CONSTRUCTION)]
    checks += [make_check("step_isomorphism", subject, n=n)
               for n in range(n0, tower.window)]
    return {"lim": PRESENTED, "lim1": ZERO_CERTIFIED, "checks": checks,
            "module": tower.module(n0), "level": n0, "kind": "level"}


def _rule_surjective(tower, subject, logger):
    if not tower.has_verified_tag(SURJECTIVE_BY_CONSTRUCTION):
        return None
    return {"lim": UNDETERMINED, "lim1": ZERO_CERTIFIED,
            "checks": [make_check("tag", subject,
                                  tag=SURJECTIVE_BY_CONSTRUCTION)],
            "diagnostics": ["lim of surjections is not presented"]}


def _rule_finite_length(tower, subject, logger):
    if not tower.has_verified_tag(FINITE_LENGTH_LEVELS):
        return None
    ml = is_mittag_leffler(tower, subject=subject, logger=logger)
    if ml.verdict != ML_CERTIFIED:
        return None
    top = half_window(tower.window)
    steps = range(1, top)
    if all(_stable_image_step(tower, n).is_isomorphism() for n in steps):
        checks = ml.checks + [make_check("stable_image_isomorphism", subject,
                                         n=n) for n in steps]
        return {"lim": PRESENTED, "lim1": ZERO_CERTIFIED, "checks": checks,
                "module": tower.image(1, tower.window).module, "level": 1,
                "kind": "stable_image"}
    return {"lim": UNDETERMINED, "lim1": ZERO_CERTIFIED, "checks": ml.checks,
            "diagnostics": ["stable images do not form an eventually "
                            "constant subtower inside the window"]}


def _rule_divisibility(tower, subject, logger):
    if not tower.has_verified_tag(DIVISIBILITY_BY_CONSTRUCTION):
        return None
    W = tower.window
    checks = [make_check("tag", subject, tag=DIVISIBILITY_BY_CONSTRUCTION)]
    growth = []
    for n in range(1, half_window(W) + 1):
        factors = [_smallest_invariant_factor(tower, n, m)
                   for m in range(n, W + 1)]
        growth.append({"n": n, "smallest_invariant_factors": factors})
        for m, (a, b) in enumerate(zip(factors, factors[1:]), start=n):
            if not 0 < a < b:
                return None
            checks.append(make_check("invariant_factor_growth", subject,
                                     n=n, m=m))
    return {"lim": ZERO_CERTIFIED, "lim1": UNDETERMINED, "checks": checks,
            "diagnostics": growth}


RULES = (("R1_PRO_ZERO", _rule_pro_zero),
         ("R3_EVENTUALLY_CONSTANT", _rule_eventually_constant),
         ("R2_SURJECTIVE", _rule_surjective),
         ("R4_FINITE_LENGTH", _rule_finite_length),
         ("R5_DIVISIBILITY", _rule_divisibility))


def lim_lim1(tower, subject="tower", logger=None):
    """
    Classifies lim and lim^1 of an inverse tower by the certified rules, in a
    fixed order. A later rule only settles what earlier rules left
    UNDETERMINED; 'rule_applied' lists every contributing rule joined by '+'.

    Returns:
        LimReport
    """
    logger = logger or _LOGGER
    tower.materialize()
    lim, lim1 = UNDETERMINED, UNDETERMINED
    applied, checks, diagnostics = [], [], []
    presented = {}
    for name, rule in RULES:
        if lim != UNDETERMINED and lim1 != UNDETERMINED:
            break
        result = rule(tower, subject, logger)
        if result is None:
            continue
        contributed = False
        if lim == UNDETERMINED and result["lim"] != UNDETERMINED:
            lim = result["lim"]
            presented = result
            contributed = True
        if lim1 == UNDETERMINED and result["lim1"] != UNDETERMINED:
            lim1 = result["lim1"]
            contributed = True
        if contributed:
            applied.append(name)
            checks.extend(c for c in result["checks"] if c not in checks)
        diagnostics.extend(result.get("diagnostics", []))
    if lim1 == UNDETERMINED:
        ml = is_mittag_leffler(tower, subject=subject, logger=logger)
        if ml.verdict == NOT_ML_WITHIN_WINDOW:
            diagnostics.append(COUNTABILITY_NOTE)
    report = LimReport(lim, lim1, "+".join(applied) or None,
                       lim_module=presented.get("module"),
                       lim_level=presented.get("level"),
                       lim_kind=presented.get("kind"), checks=checks,
                       diagnostics=diagnostics)
    logger.debug("[*] {!r}: {!r}".format(tower, report))
    return report


def is_ind_zero(tower, subject="tower", logger=None):
    """
    Ind-zero semi-decision on a DirectTower: every level n <= ceil(W/2) maps
    to zero at some level m(n) <= W.

    Returns:
        Certificate of kind "ind_zero"
    """
    logger = logger or _LOGGER
    W = check_window(tower.window, 2)
    tower.materialize()
    witness, offenders, checks = {}, [], []
    for n in range(1, half_window(W) + 1):
        found = next((m for m in range(n, W + 1)
                      if tower.transition(n, m).is_zero()), None)
        if found is None:
            offenders.append(n)
        else:
            witness[str(n)] = found
            checks.append(make_check("ind_zero", subject, n=n, m=found))
    if offenders:
        return Certificate("ind_zero", NOT_IND_ZERO_WITHIN_WINDOW,
                           {"m": witness, "offenders": offenders}, checks,
                           subject=subject)
    return Certificate("ind_zero", IND_ZERO, {"m": witness}, checks,
                       subject=subject)


def tower_consistency_audit(tower, subject="tower", logger=None):
    """
    Runs the three inverse-tower semi-decisions and checks the implications
    between their verdicts. Violations are reported, never raised.

    Returns:
        dict with the three results, the list of violations, the flag
        'vanishing_without_pro_zero' and the union of all checks
    """
    logger = logger or _LOGGER
    pro_zero = is_pro_zero(tower, subject=subject, logger=logger)
    ml = is_mittag_leffler(tower, subject=subject, logger=logger)
    lim = lim_lim1(tower, subject=subject, logger=logger)
    violations = []
    if pro_zero.verdict == PRO_ZERO and ml.verdict != ML_CERTIFIED:
        violations.append("pro_zero_without_mittag_leffler")
    if pro_zero.verdict == PRO_ZERO and not lim.vanishes:
        violations.append("pro_zero_without_vanishing_limits")
    if ml.verdict == ML_CERTIFIED and lim.lim1_status != ZERO_CERTIFIED:
        violations.append("mittag_leffler_without_lim1_zero")
    if tower.has_verified_tag(FINITE_LENGTH_LEVELS) and \
            ml.verdict != ML_CERTIFIED:
        violations.append("finite_length_without_mittag_leffler")
    flagged = pro_zero.verdict == NOT_PRO_ZERO_WITHIN_WINDOW and \
        lim.lim_status == ZERO_CERTIFIED
    if violations:
        logger.warning("[*] {!r}: verdict chain violated: {}".format(
            tower, ", ".join(violations)
        ))
    checks = []
    for part in (pro_zero.checks, ml.checks, lim.checks):
        checks.extend(c for c in part if c not in checks)
    return {"pro_zero": pro_zero.to_dict(), "mittag_leffler": ml.to_dict(),
            "lim_lim1": lim.to_dict(), "violations": violations,
            "consistent": not violations,
            "vanishing_without_pro_zero": flagged, "checks": checks}
