"""
Composite completions: completing M along a filtration {M_m} and then along
x, compared with completing along the combined system M/(M_n + x^(n) M).

The comparison is carried out on towers only. The bi-indexed tower
B(n, m) = H_1(x^(n); M/M_m) controls the obstruction lim_n lim^1_m B(n, m);
when it is certified to vanish, the tower {H_0(x^(n); M/M_n)} read off the
composite and the completion tower of the combined filtration are shown to
be isomorphic as towers: levelwise isomorphisms that commute with the
transition maps of both sides.
"""

import logging

from prozero.errors import NotCheckableError
from prozero.ground import ExactMatrix
from prozero.koszul import KoszulLevel, comparison_matrix
from prozero.towers import (BiTower, InverseTower, PRO_ZERO, ZERO_CERTIFIED,
                            EVENTUALLY_CONSTANT_BY_CONSTRUCTION, lim_lim1,
                            make_check, register_check,
                            bi_pro_zero_equivalence, run_parallel)
from prozero.modules import certify_isomorphism
from prozero.utils import window_or_default
from prozero.completion.filtration import (Filtration, filtration_tower,
                                           scaled_units)

_LOGGER = logging.getLogger(__name__)


def row_subject(n):
    return "row:{}".format(n)


def level_subject(n):
    return "levels:{}".format(n)


@register_check("level_square")
def _check_level_square(towers, n):
    return level_square_commutes(*towers, n=n)


def composite_bitower(module, filtration, sequence, window=None, jobs=None,
                      logger=None):
    """
    B(n, m) = H_1(x^(n); M/M_m) with the Koszul comparison maps in n and the
    quotient maps M/M_{m+1} -> M/M_m in m.
    """
    generators = module.generators
    identity = ExactMatrix.identity(module.spec,
                                    sequence.length * generators)
    comparison = comparison_matrix(sequence, 1, generators, 1)
    return BiTower(
        cell_rule=lambda n, m: KoszulLevel(sequence, n,
                                           filtration.quotient(m)).homology(1),
        horizontal_rule=lambda n, m: comparison,
        vertical_rule=lambda n, m: identity,
        window=window, name="H_1(x^n; M/M_m)", jobs=jobs, logger=logger
    )


def row_tower(bitower, filtration, n, logger=None):
    """
    The row {H_1(x^(n); M/M_m)}_m of the composite bi-tower at a fixed n, the
    system whose lim^1 enters the composite completion at level n. Rows of a
    filtration constant from some level inside the window are tagged
    eventually constant.
    """
    tags, stable_from = (), filtration.stable_from
    if stable_from is not None:
        stable_from = max(int(stable_from), 1)
        if stable_from <= bitower.window:
            tags = (EVENTUALLY_CONSTANT_BY_CONSTRUCTION,)
        else:
            stable_from = None
    return bitower.row(n, tags=tags, stable_from=stable_from,
                       name=row_subject(n), logger=logger)


def combined_filtration(module, filtration, sequence):
    """ G_n = M_n + x^(n) M """
    return Filtration(
        module,
        lambda n: filtration.submodule(n) +
        scaled_units(module, sequence.powers(n)),
        name="{}+powers({})".format(filtration.name,
                                    ",".join(sequence.to_strings()))
    )


def composite_level(filtration, sequence, n):
    """ H_0(x^(n); M/M_n), the diagonal cell of the composite """
    return KoszulLevel(sequence, n, filtration.quotient(n)).homology(0)


def composite_tower(module, filtration, sequence, window=None, jobs=None,
                    logger=None):
    """
    The diagonal {H_0(x^(n); M/M_n)}_n of the bi-tower H_0(x^(n); M/M_m),
    both of whose maps are induced by the identity of R^g.
    """
    identity = ExactMatrix.identity(module.spec, module.generators)
    return InverseTower.from_subquotients(
        subquotient_rule=lambda n: composite_level(filtration, sequence, n),
        ambient_rule=lambda n: identity,
        window=window, name="H_0(x^n; M/M_n)", jobs=jobs, logger=logger
    )


def level_towers(module, filtration, sequence, window=None, jobs=None,
                 logger=None):
    """ (composite tower, completion tower of the combined filtration) """
    window = window_or_default(window)
    return (composite_tower(module, filtration, sequence, window=window,
                            jobs=jobs, logger=logger),
            filtration_tower(module,
                             combined_filtration(module, filtration,
                                                 sequence),
                             window=window, jobs=jobs, logger=logger))


def level_pair(module, filtration, sequence, n):
    """
    The two level n modules compared: H_0(x^(n); M/M_n) on the composite side
    and M/(M_n + x^(n) M) on the side of the combined filtration, as the
    presentations the level isomorphisms are recorded on.
    """
    first = composite_level(filtration, sequence, n)
    second = combined_filtration(module, filtration,
                                 sequence).level_subquotient(n)
    return first.module, second.module


def _comparison(composite, combined, n):
    return composite.subquotient(n).induced_map(combined.subquotient(n))


def level_square_commutes(composite, combined, n):
    """
    The comparison maps at levels n and n+1 commute with the transitions
    of both towers.
    """
    first = _comparison(composite, combined, n).compose(
        composite.transition(n + 1, n)
    )
    second = combined.transition(n + 1, n).compose(
        _comparison(composite, combined, n + 1)
    )
    return first.equals(second)


def gm_composite_check(module, filtration, sequence, window=None, jobs=1,
                       logger=None):
    """
    Checks that the composite completion Λ^x(Λ(M)) agrees with the
    completion of M along M_n + x^(n) M.

    Two certified routes make the check applicable:
      * the diagonal of B(n, m) is pro-zero (the bi-tower is then pro-zero,
        so every lim^1 contribution vanishes);
      * every row {H_1(x^(n); M/M_m)}_m, n <= W, has lim^1 certified zero.
    Then the composite tower {H_0(x^(n); M/M_n)} and the combined completion
    tower are certified isomorphic through the window: the identity of R^g
    induces mutually inverse maps at every level, and these maps commute
    with the transitions of both towers. The diagonal cofinality of B is
    verified as well.

    Returns:
        dict report with 'route', 'levels' (per-level isomorphism and
        naturality records), 'diagonal_consistency' and 'checks'

    Raises:
        NotCheckableError if neither route applies, or the filtration is not
        decreasing within the window
    """
    logger = logger or _LOGGER
    W = window_or_default(window)
    failing = filtration.verify(W)
    if failing:
        raise NotCheckableError("Filtration is not decreasing at levels "
                                "{}".format(failing))
    bitower = composite_bitower(module, filtration, sequence, window=W,
                                jobs=jobs, logger=logger)
    equivalence = bi_pro_zero_equivalence(bitower, logger=logger)
    checks = list(equivalence["checks"])
    route, rows = None, {}
    if equivalence["diagonal"]["verdict"] == PRO_ZERO:
        route = "diagonal_pro_zero"
    else:
        for n in range(1, W + 1):
            rows[row_subject(n)] = lim_lim1(
                row_tower(bitower, filtration, n, logger=logger),
                subject=row_subject(n), logger=logger
            )
        if all(r.lim1_status == ZERO_CERTIFIED for r in rows.values()):
            route = "rows_lim1_zero"
            for n in range(1, W + 1):
                checks.extend(c for c in rows[row_subject(n)].checks
                              if c not in checks)
    if route is None:
        raise NotCheckableError(
            "Neither the diagonal is pro-zero nor all rows "
            "{{H_1(x^n; M/M_m)}}_m have certified lim^1 = 0 within window "
            "{}".format(W)
        )

    composite, combined = level_towers(module, filtration, sequence,
                                       window=W, jobs=jobs, logger=logger)

    def certify(n):
        return certify_isomorphism(composite.subquotient(n),
                                   combined.subquotient(n))

    certificates = run_parallel(certify, range(1, W + 1), jobs or 1)
    levels = []
    for n, certificate in enumerate(certificates, start=1):
        record = {"n": n, "isomorphic": certificate is not None}
        if certificate is not None:
            data = certificate.to_dict()
            record.update(data)
            checks.append(make_check("isomorphism", level_subject(n),
                                     forward=data["forward"],
                                     backward=data["backward"]))
        if n < W:
            record["natural"] = level_square_commutes(composite, combined, n)
            if record["natural"]:
                checks.append(make_check("level_square", "levels", n=n))
        levels.append(record)
    agree = all(r["isomorphic"] and r.get("natural", True) for r in levels)
    logger.info("[*] Composite completion along {}: route {}, levels "
                "{}".format(filtration.name, route,
                            "agree" if agree else "differ"))
    return {"route": route, "window": W,
            "levels": levels, "agree": agree,
            "rows": {k: v.to_dict() for k, v in sorted(rows.items())},
            "diagonal_consistency": {
                "equivalent": equivalence["equivalent"],
                "squares_commute": equivalence["squares_commute"],
                "offending_cells": equivalence["offending_cells"]
            },
            "checks": checks}
