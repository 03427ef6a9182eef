"""
Cross-checks between the sequence predicates.

audit_equivalences compares, on one instance (x, M), verdicts that the
theory proves equivalent or ordered:

    bounded_torsion_levels  pro-regularity versus bounded x_i-torsion of the
                            quotients M/(x_1^m, ..., x_{i-1}^m)M,
                            m <= ceil(W/2); bounded quotients whose colon
                            witnesses cannot fit in the window leave the
                            report partial
    colon_limits            pro-zero of each colon tower versus its
                            classified lim / lim^1
    implications            regular => pro-regular (m(n) = n) => weakly
                            pro-regular
    cech_faces              weakly pro-regular => Čech homology vanishes in
                            positive degrees and is the completion in degree 0

permutation_audit compares the Koszul side under reordering of x.
"""

import logging
from itertools import permutations

from prozero.ground import ExactMatrix
from prozero.koszul import KoszulLevel, exterior_subsets
from prozero.modules import certify_isomorphism, tensor_quotient
from prozero.completion import (cech_homology_report, VANISHES,
                                ISOMORPHIC_TO_COMPLETION)
from prozero.towers import PRO_ZERO, lim_lim1, make_check, run_parallel
from prozero.utils import half_window, window_or_default
from prozero.regularity.sequences import (is_regular_sequence,
                                          is_bounded_torsion, is_pro_regular,
                                          is_weakly_pro_regular,
                                          describe_instance, BOUNDED)

_LOGGER = logging.getLogger(__name__)


def torsion_subjects(i, m):
    """ Subject keys of the bounded-torsion check on M/x_{<i}^(m) M """
    return "torsion:{}:{}".format(i, m), "torsion_colon:{}:{}".format(i, m)


def torsion_instance(sequence, module, i, m):
    """ (x_i, M/(x_1^m, ..., x_{i-1}^m)M) """
    return (sequence.elements[i - 1],
            tensor_quotient(module, sequence.powers(m, i - 1)))


def _merge(checks, more):
    checks.extend(c for c in more if c not in checks)


def _bounded_torsion_levels(sequence, module, pro, window, jobs, logger):
    cases = []
    for i in range(1, len(sequence) + 1):
        top = 1 if i == 1 else half_window(window)
        cases.extend((i, m) for m in range(1, top + 1))

    def run(case):
        i, m = case
        x, quotient = torsion_instance(sequence, module, i, m)
        subject, tower_subject = torsion_subjects(i, m)
        return is_bounded_torsion(quotient, x, window, subject=subject,
                                  tower_subject=tower_subject, logger=logger)

    certificates = run_parallel(run, cases, jobs)
    records, checks = [], []
    for (i, m), certificate in zip(cases, certificates):
        records.append({"i": i, "m": m, "verdict": certificate.verdict,
                        "index": certificate.witness.get("index")})
        _merge(checks, certificate.checks)
    bounded = all(c.verdict == BOUNDED for c in certificates)
    uniform = max(r["index"] for r in records) if bounded else None
    # witnesses up to ceil(W/2) + uniform index do not fit in the window
    window_limited = bounded and not pro.holds and \
        half_window(window) + uniform > window
    return {"levels": records, "all_bounded": bounded,
            "uniform_index": uniform, "pro_regular": pro.holds,
            "window_limited": window_limited,
            "agree": window_limited or bounded == pro.holds}, checks


def _colon_limits(pro, logger):
    records, checks, partial = [], [], False
    for (i, certificate), tower in zip(pro.certificates, pro.towers):
        subject = "colon:{}".format(i)
        report = lim_lim1(tower, subject=subject, logger=logger)
        pro_zero = certificate.verdict == PRO_ZERO
        record = {"i": i, "pro_zero": pro_zero,
                  "lim_lim1": report.to_dict(),
                  "classified": report.classified}
        if report.classified:
            record["agree"] = pro_zero == report.vanishes
            _merge(checks, report.checks)
        else:
            partial = True
        records.append(record)
    agree = all(r.get("agree", True) for r in records)
    return {"indices": records, "agree": agree, "partial": partial}, checks


def _implications(regular, pro, weak):
    violations = []
    if regular.holds:
        if not pro.holds:
            violations.append("regular_without_pro_regular")
        else:
            for i, certificate in pro.certificates:
                witness = certificate.witness["m"]
                if any(int(k) != v for k, v in witness.items()):
                    violations.append("regular_without_identity_witness:"
                                      "{}".format(i))
    if pro.holds and not weak.holds:
        violations.append("pro_regular_without_weakly_pro_regular")
    checked = ["regular=>pro_regular", "pro_regular=>weakly_pro_regular"]
    return {"violations": violations, "checked": checked,
            "agree": not violations}


def _cech_faces(sequence, module, weak, window, logger):
    if not weak.holds:
        return {"applicable": False, "agree": True, "degrees": []}, []
    degrees, checks = [], []
    for i in range(0, len(sequence) + 1):
        report = cech_homology_report(i, sequence, module, window=window,
                                      logger=logger)
        expected = ISOMORPHIC_TO_COMPLETION if i == 0 else VANISHES
        degrees.append({"degree": i, "conclusion": report.conclusion,
                        "expected": expected,
                        "agree": report.conclusion == expected})
        _merge(checks, report.checks)
    return {"applicable": True, "degrees": degrees,
            "agree": all(d["agree"] for d in degrees)}, checks


def audit_equivalences(sequence, module, window=None, jobs=1, logger=None):
    """
    Runs every predicate on (x, M) and the four faces listed in the module
    docstring. Unclassified sub-verdicts make the report partial; they never
    count as agreement.

    Returns:
        dict report with the verdicts, the faces, 'violations', 'partial'
        and the union of all checks
    """
    logger = logger or _LOGGER
    window = window_or_default(window)
    jobs = jobs or 1
    logger.info("[*] Auditing {!r} on {!r} (window {})".format(
        sequence, module, window
    ))
    regular = is_regular_sequence(sequence, module, logger=logger)
    pro = is_pro_regular(sequence, module, window, jobs=jobs, logger=logger)
    weak = is_weakly_pro_regular(sequence, module, window, jobs=jobs,
                                 logger=logger)
    checks = []
    for verdict in (regular, pro, weak):
        _merge(checks, verdict.all_checks())
    torsion, more = _bounded_torsion_levels(sequence, module, pro, window,
                                            jobs, logger)
    _merge(checks, more)
    limits, more = _colon_limits(pro, logger)
    _merge(checks, more)
    implications = _implications(regular, pro, weak)
    cech, more = _cech_faces(sequence, module, weak, window, logger)
    _merge(checks, more)
    faces = {"bounded_torsion_levels": torsion, "colon_limits": limits,
             "implications": implications, "cech_faces": cech}
    violations = sorted(name for name, face in faces.items()
                        if not face["agree"])
    violations += implications["violations"]
    if violations:
        logger.warning("[*] Audit disagreements: {}".format(violations))
    return {"instance": describe_instance(sequence, module),
            "window": window,
            "verdicts": {"regular": regular.to_dict(),
                         "pro_regular": pro.to_dict(),
                         "weakly_pro_regular": weak.to_dict()},
            "faces": faces, "violations": violations,
            "partial": limits["partial"] or torsion["window_limited"],
            "checks": checks}


def _parity(values):
    """ Sign of the permutation sorting 'values' (distinct integers) """
    values = list(values)
    inversions = sum(1 for a in range(len(values))
                     for b in range(a + 1, len(values))
                     if values[a] > values[b])
    return -1 if inversions % 2 else 1


def permutation_key(permutation):
    return "-".join(str(p) for p in permutation)


def permutation_subject(permutation, i):
    return "permutation:{}:{}".format(permutation_key(permutation), i)


def exterior_permutation_matrix(sequence, permutation, degree, generators):
    """
    The chain isomorphism K(y; M) -> K(x; M) in one degree for
    y_k = x_{p(k)}: f_T maps to sign * e_{p(T)}, sign the parity of sorting
    (p(t_1), ..., p(t_k)).
    """
    ring = sequence.ring
    subsets = exterior_subsets(sequence.length)[degree]
    index = {S: b for b, S in enumerate(subsets)}
    size = len(subsets) * generators
    zero = ring.ring.zero
    rows = [[zero] * size for _ in range(size)]
    for column, T in enumerate(subsets):
        image = [permutation[t] for t in T]
        row = index[tuple(sorted(image))]
        sign = _parity(image)
        for g in range(generators):
            rows[row * generators + g][column * generators + g] = \
                ring.one if sign > 0 else -ring.one
    return ExactMatrix(ring.spec, rows, shape=(size, size))


def permutation_pair(sequence, module, permutation, i):
    """
    Level-1 homology H_i of the permuted and of the original sequence, as
    Subquotients.
    """
    permuted = sequence.permuted(permutation)
    return (KoszulLevel(permuted, 1, module).homology(i),
            KoszulLevel(sequence, 1, module).homology(i))


def permutation_audit(sequence, module, window=None, jobs=1, logger=None):
    """
    Weak pro-regularity must not depend on the order of x. For every
    permutation p this compares the verdicts and certifies, in every degree,
    H_i(y; M) ~= H_i(x; M) at level 1 through the signed permutation of the
    exterior basis (its inverse is the transpose).

    Returns:
        dict report with one record per permutation, 'agree' and 'checks'
    """
    logger = logger or _LOGGER
    window = window_or_default(window)
    r = len(sequence)
    base = is_weakly_pro_regular(sequence, module, window, jobs=jobs,
                                 logger=logger)
    records, checks = [], []
    for permutation in permutations(range(r)):
        permutation = list(permutation)
        weak = is_weakly_pro_regular(sequence.permuted(permutation), module,
                                     window, jobs=jobs, logger=logger)
        degrees = []
        for i in range(r + 1):
            first, second = permutation_pair(sequence, module, permutation, i)
            matrix = exterior_permutation_matrix(sequence, permutation, i,
                                                 module.generators)
            certificate = certify_isomorphism(first, second, matrix,
                                              matrix.transpose())
            degrees.append({"degree": i,
                            "isomorphic": certificate is not None})
            if certificate is not None:
                data = certificate.to_dict()
                checks.append(make_check(
                    "isomorphism", permutation_subject(permutation, i),
                    forward=data["forward"], backward=data["backward"]
                ))
        records.append({"permutation": permutation,
                        "verdict": weak.verdict,
                        "agrees": weak.holds == base.holds,
                        "degrees": degrees})
    agree = all(record["agrees"] and
                all(d["isomorphic"] for d in record["degrees"])
                for record in records)
    if not agree:
        logger.warning("[*] Permutation audit of {!r} found "
                       "disagreements".format(sequence))
    return {"instance": describe_instance(sequence, module),
            "window": window, "verdict": base.verdict,
            "permutations": records, "agree": agree, "checks": checks}
