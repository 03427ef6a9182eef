"""
Checks tying several towers together: the six-term lim / lim^1 sequence of a
short exact sequence of towers and the cofinality of the diagonal of a
bi-indexed tower.
"""

import logging

from prozero.errors import NotCheckableError
from prozero.modules import homology_at
from prozero.utils import half_window
from prozero.towers.certificates import (PRO_ZERO, UNDETERMINED,
                                         ZERO_CERTIFIED, make_check)
from prozero.towers.verdicts import is_pro_zero, lim_lim1

_LOGGER = logging.getLogger(__name__)

_NAMES = ("first", "second", "third")


def _levelwise_exactness(n, f, g):
    """ Failing conditions of 0 -> A_n -f-> B_n -g-> C_n -> 0 """
    failures = []
    if not f.is_injective():
        failures.append("injective")
    if not homology_at(f, g).is_zero():
        failures.append("middle")
    if not g.is_surjective():
        failures.append("surjective")
    return failures


def _commutes(level_map, source, target, n):
    """ True iff the level maps commute with the steps at level n """
    left = level_map(n).compose(source.step(n))
    right = target.step(n).compose(level_map(n + 1))
    return left.equals(right)


def six_term_check(first, second, third, first_maps, second_maps,
                   logger=None):
    """
    Exactness of 0 -> lim A -> lim B -> lim C -> lim^1 A -> lim^1 B ->
    lim^1 C -> 0 for a levelwise short exact sequence of inverse towers.

    The towers must be classified with every lim^1 certified zero (the only
    certified lim^1 status), which reduces the sequence to
    0 -> lim A -> lim B -> lim C -> 0. Each lim is represented by the stable
    image Im(phi_{L,W}) at a common level L, chosen at or above every level
    where a presented lim is read off and at most ceil(W/2) so that pro-zero
    witnesses apply. Exactness is then checked on those representatives
    with the maps induced by the level-L maps.

    Args:
        first, second, third:    (InverseTower) A, B, C on the same window
        first_maps, second_maps: (callable) n -> ModuleMap A_n -> B_n and
                                 n -> ModuleMap B_n -> C_n

    Returns:
        dict report with the classifications, per-spot exactness and the
        overall 'exact' flag

    Raises:
        NotCheckableError if the sequence is not levelwise exact and
        commuting, or if some classification is UNDETERMINED
        NotAComplexError if some levelwise composite is nonzero
    """
    logger = logger or _LOGGER
    towers = (first, second, third)
    W = first.window
    if any(t.window != W for t in towers):
        raise NotCheckableError("The three towers need a common window, got "
                                "{}".format([t.window for t in towers]))
    for n in range(1, W + 1):
        failures = _levelwise_exactness(n, first_maps(n), second_maps(n))
        if failures:
            raise NotCheckableError("Level {} is not exact ({})".format(
                n, ", ".join(failures)
            ))
    for n in range(1, W):
        if not _commutes(first_maps, first, second, n) or \
                not _commutes(second_maps, second, third, n):
            raise NotCheckableError("Level maps do not commute with the "
                                    "transitions at level {}".format(n))

    reports = [lim_lim1(t, subject=name, logger=logger)
               for t, name in zip(towers, _NAMES)]
    for name, report in zip(_NAMES, reports):
        if UNDETERMINED in (report.lim_status, report.lim1_status):
            raise NotCheckableError(
                "Tower '{}' is not classified ({!r})".format(name, report)
            )
    anchors = [r.lim_level for r in reports
               if r.lim_kind == "level" and r.lim_level is not None]
    level = max(anchors + [1])
    if level > half_window(W):
        raise NotCheckableError("Presented limits are read off at level {}, "
                                "beyond the witness range of window "
                                "{}".format(level, W))
    logger.info("[*] Six-term check at level {} of window {}".format(level, W))
    images = [t.image(level, W) for t in towers]
    f = images[0].induced_map(images[1], first_maps(level).matrix)
    g = images[1].induced_map(images[2], second_maps(level).matrix)
    spots = [
        {"spot": "lim first", "exact": f.is_injective()},
        {"spot": "lim second", "exact": homology_at(f, g).is_zero()},
        {"spot": "lim third", "exact": g.is_surjective()},
    ]
    for name, report in zip(_NAMES, reports):
        spots.append({"spot": "lim1 {}".format(name),
                      "exact": report.lim1_status == ZERO_CERTIFIED})
    for name, report, image in zip(_NAMES, reports, images):
        if report.lim_status == ZERO_CERTIFIED and not image.is_zero():
            spots.append({"spot": "zero lim {}".format(name), "exact": False})
    exact = all(s["exact"] for s in spots)
    if not exact:
        logger.warning("[*] Six-term sequence not exact at {}".format(
            [s["spot"] for s in spots if not s["exact"]]
        ))
    return {"checkable": True, "level": level, "window": W,
            "classifications": {name: r.to_dict()
                                for name, r in zip(_NAMES, reports)},
            "spots": spots, "exact": exact}


def bi_pro_zero_equivalence(bitower, logger=None):
    """
    Compares pro-zero of the diagonal D_n = B(n, n) with pro-zero of the
    bi-indexed tower itself (every cell (n, m), n, m <= ceil(W/2), is hit by
    the zero map from the corner cell (W, W)). When the diagonal has witness
    k = m_D(max(n, m)), the map B(k, k) -> B(n, m) is checked to vanish too.

    Returns:
        dict report; 'equivalent' holds when both sides agree and every
        diagonal witness transfers to the cells
    """
    logger = logger or _LOGGER
    W = bitower.window
    top = half_window(W)
    diagonal = bitower.diagonal(logger=logger)
    certificate = is_pro_zero(diagonal, subject="diagonal", logger=logger)
    offending = [[n, m] for n in range(1, top + 1) for m in range(1, top + 1)
                 if not bitower.transition(W, W, n, m).is_zero()]
    bi_pro_zero = not offending
    diagonal_pro_zero = certificate.verdict == PRO_ZERO
    checks, transfers = [], True
    if diagonal_pro_zero:
        witness = certificate.witness["m"]
        for n in range(1, top + 1):
            for m in range(1, top + 1):
                k = witness[str(max(n, m))]
                if not bitower.transition(k, k, n, m).is_zero():
                    transfers = False
                checks.append(make_check("bi_zero_map", "bitower", n=n, m=m,
                                         n2=k, m2=k))
    equivalent = diagonal_pro_zero == bi_pro_zero and transfers
    if not equivalent:
        logger.warning("[*] Diagonal and bi-indexed pro-zero verdicts "
                       "disagree on {!r}".format(bitower))
    return {"diagonal": certificate.to_dict(), "bi_pro_zero": bi_pro_zero,
            "offending_cells": offending, "equivalent": equivalent,
            "squares_commute": not bitower.verify_squares(),
            "checks": certificate.checks + checks}
