"""
Sequence predicates: regular, bounded torsion, pro-regular and weakly
pro-regular.

Checks registered here run against an 'instance', the pair
(SequenceSpec, FpModule) a task is about.
"""

import logging

from prozero.ground import ExactMatrix, format_vector
from prozero.koszul import SequenceSpec, KoszulSystem
from prozero.modules import colon, tensor_quotient
from prozero.towers import (InverseTower, Certificate, PRO_ZERO, is_pro_zero,
                            register_check, make_check, run_parallel,
                            TORSION_CHAIN_BY_CONSTRUCTION)
from prozero.utils import check_window, window_or_default

_LOGGER = logging.getLogger(__name__)

REGULAR = "REGULAR"
NOT_REGULAR = "NOT_REGULAR"
BOUNDED = "BOUNDED"
NOT_BOUNDED_WITHIN_WINDOW = "NOT_BOUNDED_WITHIN_WINDOW"
PRO_REGULAR = "PRO_REGULAR"
NOT_PRO_REGULAR_WITHIN_WINDOW = "NOT_PRO_REGULAR_WITHIN_WINDOW"
WEAKLY_PRO_REGULAR = "WEAKLY_PRO_REGULAR"
NOT_WEAKLY_PRO_REGULAR_WITHIN_WINDOW = "NOT_WEAKLY_PRO_REGULAR_WITHIN_WINDOW"


class RegularityVerdict(object):
    """
    Outcome of a sequence predicate: the verdict, the per-index certificates
    it aggregates and the checks backing it.
    """
    def __init__(self, predicate, verdict, holds, subject, certificates=(),
                 witness=None, checks=(), implications_checked=(),
                 diagnostics=()):
        """
        Args:
            predicate:            (str)  "regular", "pro_regular", ...
            verdict:              (str)  One of the verdict constants
            holds:                (bool) True for the positive verdict
            subject:              (dict) JSON-ready sequence and module
            certificates:         (list) Pairs (index, Certificate)
            witness:              (dict) JSON-ready witness data
            checks:               (list) Check records of the verdict itself
            implications_checked: (list) Names of implications verified
        """
        self.predicate = predicate
        self.verdict = verdict
        self.holds = bool(holds)
        self.subject = subject
        self.certificates = list(certificates)
        self.witness = witness or {}
        self.checks = list(checks)
        self.implications_checked = list(implications_checked)
        self.diagnostics = list(diagnostics)
        self.towers = []

    def __repr__(self):
        return "RegularityVerdict({}: {})".format(self.predicate, self.verdict)

    def all_checks(self):
        out = list(self.checks)
        for _, certificate in self.certificates:
            out.extend(c for c in certificate.checks if c not in out)
        return out

    def to_dict(self):
        return {"predicate": self.predicate, "verdict": self.verdict,
                "holds": self.holds, "subject": self.subject,
                "witness": self.witness,
                "certificates": [{"index": i, "certificate": c.to_dict()}
                                 for i, c in self.certificates],
                "checks": self.checks,
                "implications_checked": self.implications_checked,
                "diagnostics": self.diagnostics}


def describe_instance(sequence, module):
    return {"sequence": sequence.to_strings(),
            "module": module.describe()}


def prefix_submodule(sequence, i, module, n):
    """
    Vectors of R^g spanning (x_1^n, ..., x_{i-1}^n) M, the image of the
    first i-1 powers inside M.
    """
    ring = module.ring
    g = module.generators
    zero = ring.ring.zero
    return [[c if t == k else zero for t in range(g)]
            for c in sequence.powers(n, i - 1) for k in range(g)]


def colon_module(sequence, i, module, n):
    """
    (x_1^n, ..., x_{i-1}^n)M :_M x_i^n / (x_1^n, ..., x_{i-1}^n)M, for the
    1-based index i and n >= 0, as a Subquotient of R^g.
    """
    x = sequence.power(sequence.elements[i - 1], n)
    return colon(module, prefix_submodule(sequence, i, module, n), x)


def colon_tower(sequence, i, module, window=None, jobs=None, logger=None):
    """
    The inverse tower of the colon modules of index i with multiplication by
    x_i from level n+1 to level n. Index 1 is the torsion chain 0 :_M x_1^n.
    """
    ring = module.ring
    x = sequence.elements[i - 1]
    multiplication = ExactMatrix.diagonal(ring.spec,
                                          [x] * module.generators)
    tags = (TORSION_CHAIN_BY_CONSTRUCTION,) if i == 1 else ()
    return InverseTower.from_subquotients(
        subquotient_rule=lambda n: colon_module(sequence, i, module, n),
        ambient_rule=lambda n: multiplication,
        window=window, tags=tags,
        name="colon:{}".format(i), jobs=jobs, logger=logger
    )


def _normalized(ring, vector):
    """ Scale a vector so that its first nonzero entry has leading
    coefficient 1 (over a field) or positive (over ZZ) """
    coefficients = ring.spec.coefficients
    for entry in vector:
        if entry:
            c = entry.LC
            if coefficients.is_field:
                return [ring.reduce(p.quo_ground(c)) for p in vector]
            if not coefficients.base_relations and c < 0:
                return [ring.reduce(-p) for p in vector]
            return list(vector)
    return list(vector)


def _vector_degree(vector):
    return max([sum(m) for p in vector for m in p.itermonoms()] or [0])


@register_check("colon_zero")
def _check_colon_zero(instance, i, n=1):
    sequence, module = instance
    return colon_module(sequence, i, module, n).is_zero()


@register_check("colon_nonzero")
def _check_colon_nonzero(instance, i, n=1):
    sequence, module = instance
    return not colon_module(sequence, i, module, n).is_zero()


@register_check("quotient_nonzero")
def _check_quotient_nonzero(instance):
    sequence, module = instance
    return not tensor_quotient(module, sequence.powers(1)).is_zero()


@register_check("quotient_zero")
def _check_quotient_zero(instance):
    return not _check_quotient_nonzero(instance)


@register_check("colon_stable")
def _check_colon_stable(instance, n):
    sequence, module = instance
    return colon_module(sequence, 1, module, n).equals(
        colon_module(sequence, 1, module, n + 1)
    )


@register_check("escalation")
def _check_escalation(instance, n, vector):
    sequence, module = instance
    vector = [module.ring.element(v) for v in vector]
    return colon_module(sequence, 1, module, n).contains(vector) and \
        not colon_module(sequence, 1, module, n - 1).contains(vector)


def is_regular_sequence(sequence, module, subject="instance", logger=None):
    """
    x is M-regular iff every colon quotient x_{<i}M :_M x_i / x_{<i}M
    vanishes and M/xM is not zero.

    Returns:
        RegularityVerdict with predicate "regular"
    """
    logger = logger or _LOGGER
    checks = []
    for i in range(1, len(sequence) + 1):
        if not colon_module(sequence, i, module, 1).is_zero():
            checks.append(make_check("colon_nonzero", subject, i=i, n=1))
            return RegularityVerdict(
                "regular", NOT_REGULAR, False,
                describe_instance(sequence, module),
                witness={"failing_index": i}, checks=checks
            )
        checks.append(make_check("colon_zero", subject, i=i, n=1))
    if tensor_quotient(module, sequence.powers(1)).is_zero():
        checks.append(make_check("quotient_zero", subject))
        return RegularityVerdict("regular", NOT_REGULAR, False,
                                 describe_instance(sequence, module),
                                 witness={"quotient_zero": True},
                                 checks=checks)
    checks.append(make_check("quotient_nonzero", subject))
    logger.debug("[*] {!r} is regular".format(sequence))
    return RegularityVerdict("regular", REGULAR, True,
                             describe_instance(sequence, module),
                             checks=checks)


def is_bounded_torsion(module, x, window=None, subject="instance",
                       tower_subject="colon:1", logger=None):
    """
    Bounded x-torsion: the chain 0 :_M x^n (n = 0..W) becomes stationary.
    An equality 0 :_M x^s = 0 :_M x^(s+1) propagates to all larger n over
    any ring, so a stationary step inside the window certifies the verdict.
    Without one, every level n = 1..W gets an escalation witness: a
    generator of least degree in 0 :_M x^n outside 0 :_M x^(n-1).

    The witness also carries the pro-zero witness m(n) of the colon tower
    {0 :_M x^n} with multiplication by x. On a stationary chain it is
    m(n) = n + index for every n <= ceil(W/2), the same witness
    is_pro_regular reports for the single element x.

    Returns:
        Certificate of kind "bounded_torsion"
    """
    logger = logger or _LOGGER
    W = check_window(window_or_default(window), 2)
    ring = module.ring
    sequence = SequenceSpec(ring, [x])
    chain = [colon_module(sequence, 1, module, n) for n in range(W + 1)]
    index = next((n for n in range(W) if chain[n].equals(chain[n + 1])),
                 None)
    pro_zero = is_pro_zero(colon_tower(sequence, 1, module, W),
                           subject=tower_subject, logger=logger)
    diagnostics = [{"pro_zero": pro_zero.verdict}]
    if index is not None:
        checks = [make_check("colon_stable", subject, n=index)]
        return Certificate("bounded_torsion", BOUNDED,
                           {"index": index, "m": pro_zero.witness["m"]},
                           checks + pro_zero.checks, diagnostics,
                           subject=subject)
    escalation, checks = {}, []
    for n in range(1, W + 1):
        candidates = [_normalized(ring, v) for v in chain[n].generators
                      if not chain[n - 1].contains(v)]
        best = min(candidates, key=lambda v: (_vector_degree(v),
                                              format_vector(v)))
        escalation[str(n)] = format_vector(best)
        checks.append(make_check("escalation", subject, n=n,
                                 vector=format_vector(best)))
    logger.debug("[*] x-torsion of {!r} grows through window {}".format(
        module, W
    ))
    return Certificate("bounded_torsion", NOT_BOUNDED_WITHIN_WINDOW,
                       {"escalation": escalation,
                        "m": pro_zero.witness["m"]},
                       checks + pro_zero.checks, diagnostics,
                       subject=subject)


def is_pro_regular(sequence, module, window=None, jobs=1, subject_prefix="",
                   logger=None):
    """
    x is M-pro-regular iff the colon towers of every index i = 1..r are
    pro-zero. Each tower is checked with is_pro_zero under the subject key
    "<subject_prefix>colon:<i>".

    Returns:
        RegularityVerdict with predicate "pro_regular"; its 'towers' attribute
        holds the colon towers
    """
    logger = logger or _LOGGER
    window = window_or_default(window)
    indices = range(1, len(sequence) + 1)
    towers = [colon_tower(sequence, i, module, window, logger=logger)
              for i in indices]
    certificates = run_parallel(
        lambda i: is_pro_zero(towers[i - 1],
                              subject="{}colon:{}".format(subject_prefix, i),
                              logger=logger),
        indices, jobs or 1
    )
    holds = all(c.verdict == PRO_ZERO for c in certificates)
    verdict = RegularityVerdict(
        "pro_regular", PRO_REGULAR if holds else NOT_PRO_REGULAR_WITHIN_WINDOW,
        holds, describe_instance(sequence, module),
        certificates=list(zip(indices, certificates)),
        witness={"m": {str(i): c.witness["m"]
                       for i, c in zip(indices, certificates)}}
    )
    verdict.towers = towers
    return verdict


def is_weakly_pro_regular(sequence, module, window=None, jobs=1,
                          subject_prefix="", logger=None):
    """
    x is M-weakly pro-regular iff the Koszul towers {H_i(x^(n); M)} are
    pro-zero for i = 1..r (subject keys "<subject_prefix>koszul:<i>").

    Returns:
        RegularityVerdict with predicate "weakly_pro_regular"; its 'towers'
        attribute holds the Koszul towers
    """
    logger = logger or _LOGGER
    window = window_or_default(window)
    system = KoszulSystem(sequence, module, logger=logger)
    indices = range(1, len(sequence) + 1)
    towers = [system.tower(i, window=window) for i in indices]
    certificates = run_parallel(
        lambda i: is_pro_zero(towers[i - 1],
                              subject="{}koszul:{}".format(subject_prefix, i),
                              logger=logger),
        indices, jobs or 1
    )
    holds = all(c.verdict == PRO_ZERO for c in certificates)
    verdict = RegularityVerdict(
        "weakly_pro_regular",
        WEAKLY_PRO_REGULAR if holds else NOT_WEAKLY_PRO_REGULAR_WITHIN_WINDOW,
        holds, describe_instance(sequence, module),
        certificates=list(zip(indices, certificates)),
        witness={"m": {str(i): c.witness["m"]
                       for i, c in zip(indices, certificates)}}
    )
    verdict.towers = towers
    return verdict
