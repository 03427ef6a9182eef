"""
Task kinds of a problem file. Each kind has a runner producing a JSON-ready
result (verdict, certificate, checks) and a subject builder producing the
resolver the checks are replayed against.
"""

import logging

from prozero.errors import NotCartierError, NotCheckableError
from prozero.koszul import KoszulLevel
from prozero.towers import (is_pro_zero, is_mittag_leffler, lim_lim1,
                            is_ind_zero, tower_consistency_audit)
from prozero.regularity import (is_regular_sequence, is_bounded_torsion,
                                is_pro_regular, is_weakly_pro_regular,
                                audit_equivalences, permutation_audit)
from prozero.completion import (cech_homology_report, cech_cohomology_report,
                                gm_composite_check)
from prozero.cartier import (verify_cartier, is_pro_regular_pair, pair_tower,
                             chart_torsion_audit, divisor_completion_audit,
                             prism_condition_b)
from prozero.problems.schema import REFERENCES
from prozero.problems.subjects import (SubjectResolver, build_tower,
                                       add_instance_subjects,
                                       add_torsion_subjects,
                                       add_composite_subjects,
                                       add_divisor_subjects)

_LOGGER = logging.getLogger(__name__)

NOT_CHECKABLE = "NOT_CHECKABLE"
NOT_CARTIER = "NOT_CARTIER"

TASKS = {}
SUBJECTS = {}


def register_task(*kinds):
    """ Decorator registering func(context) -> result dict for 'kinds' """
    def decorator(func):
        for kind in kinds:
            TASKS[kind] = func
        return func
    return decorator


def register_subjects(*kinds):
    """ Decorator registering func(context, resolver) for 'kinds' """
    def decorator(func):
        for kind in kinds:
            SUBJECTS[kind] = func
        return func
    return decorator


class TaskContext(object):
    """
    One task of a problem file with its effective window and job count.
    References are resolved to built objects through 'ref'.
    """
    def __init__(self, problem, index, window, jobs=1, logger=None):
        self.problem = problem
        self.index = index
        self.task = problem.tasks[index]
        self.kind = self.task["kind"]
        self.window = window
        self.jobs = jobs or 1
        self.logger = logger or _LOGGER

    def __repr__(self):
        return "TaskContext(#{} {}, window={})".format(self.index, self.kind,
                                                       self.window)

    def ref(self, field):
        return self.problem.get(REFERENCES[field], self.task[field])

    def tower(self):
        return build_tower(self.problem, self.task["tower"], self.window,
                           jobs=self.jobs, logger=self.logger)

    def subject(self):
        """ JSON-ready names of the definitions the task refers to """
        out = {f: self.task[f] for f in REFERENCES if f in self.task}
        for field in ("x", "degree", "level"):
            if field in self.task:
                out[field] = self.task[field]
        return out


def _result(verdict, certificate, checks=None):
    # the checks of a task are stored once, next to its certificate
    certificate = dict(certificate)
    own = certificate.pop("checks", [])
    return {"verdict": verdict, "certificate": certificate,
            "checks": list(own if checks is None else checks)}


def build_resolver(context):
    """ The SubjectResolver for the checks of a task """
    resolver = SubjectResolver()
    SUBJECTS[context.kind](context, resolver)
    return resolver


# Towers

@register_subjects("pro_zero", "mittag_leffler", "lim_lim1", "tower_audit",
                   "ind_zero")
def _tower_subjects(context, resolver):
    resolver.add("tower", context.tower)


@register_task("pro_zero")
def _pro_zero(context):
    certificate = is_pro_zero(context.tower(), logger=context.logger)
    return _result(certificate.verdict, certificate.to_dict())


@register_task("mittag_leffler")
def _mittag_leffler(context):
    certificate = is_mittag_leffler(context.tower(), logger=context.logger)
    return _result(certificate.verdict, certificate.to_dict())


@register_task("ind_zero")
def _ind_zero(context):
    certificate = is_ind_zero(context.tower(), logger=context.logger)
    return _result(certificate.verdict, certificate.to_dict())


@register_task("lim_lim1")
def _lim_lim1(context):
    report = lim_lim1(context.tower(), logger=context.logger)
    verdict = "lim:{} lim1:{}".format(report.lim_status, report.lim1_status)
    return _result(verdict, report.to_dict(), report.checks)


@register_task("tower_audit")
def _tower_audit(context):
    report = tower_consistency_audit(context.tower(), logger=context.logger)
    return _result("CONSISTENT" if report["consistent"] else "VIOLATED",
                   report)


# Koszul and Čech

@register_subjects("koszul_homology", "cech_homology", "cech_cohomology",
                   "regular", "pro_regular", "weakly_pro_regular", "audit",
                   "permutation_audit")
def _instance_subjects(context, resolver):
    add_instance_subjects(resolver, context.ref("sequence"),
                          context.ref("module"), context.window)


@register_task("koszul_homology")
def _koszul_homology(context):
    level = context.task.get("level", 1)
    homology = KoszulLevel(context.ref("sequence"), level,
                           context.ref("module")).homology(
        context.task["degree"]
    )
    zero = homology.is_zero()
    return _result("ZERO" if zero else "NONZERO",
                   {"degree": context.task["degree"], "level": level,
                    "module": homology.module.describe(), "zero": zero},
                   checks=[])


@register_task("cech_homology")
def _cech_homology(context):
    report = cech_homology_report(context.task["degree"],
                                  context.ref("sequence"),
                                  context.ref("module"),
                                  window=context.window,
                                  logger=context.logger)
    return _result(report.conclusion, report.to_dict(), report.checks)


@register_task("cech_cohomology")
def _cech_cohomology(context):
    report = cech_cohomology_report(context.task["degree"],
                                    context.ref("sequence"),
                                    context.ref("module"),
                                    window=context.window,
                                    logger=context.logger)
    return _result(report["conclusion"], report)


# Sequence predicates

@register_task("regular")
def _regular(context):
    verdict = is_regular_sequence(context.ref("sequence"),
                                  context.ref("module"),
                                  logger=context.logger)
    return _result(verdict.verdict, verdict.to_dict(), verdict.all_checks())


@register_task("pro_regular", "weakly_pro_regular")
def _pro_regular(context):
    predicate = is_pro_regular if context.kind == "pro_regular" \
        else is_weakly_pro_regular
    verdict = predicate(context.ref("sequence"), context.ref("module"),
                        context.window, jobs=context.jobs,
                        logger=context.logger)
    return _result(verdict.verdict, verdict.to_dict(), verdict.all_checks())


@register_subjects("bounded_torsion")
def _torsion_subjects(context, resolver):
    module = context.ref("module")
    add_torsion_subjects(resolver, module,
                         module.ring.element(context.task["x"]),
                         context.window)


@register_task("bounded_torsion")
def _bounded_torsion(context):
    module = context.ref("module")
    certificate = is_bounded_torsion(module,
                                     module.ring.element(context.task["x"]),
                                     context.window, logger=context.logger)
    return _result(certificate.verdict, certificate.to_dict())


@register_task("audit")
def _audit(context):
    report = audit_equivalences(context.ref("sequence"),
                                context.ref("module"), context.window,
                                jobs=context.jobs, logger=context.logger)
    if report["violations"]:
        verdict = "VIOLATED"
    else:
        verdict = "PARTIAL" if report["partial"] else "CONSISTENT"
    return _result(verdict, report)


@register_task("permutation_audit")
def _permutation_audit(context):
    report = permutation_audit(context.ref("sequence"),
                               context.ref("module"), context.window,
                               jobs=context.jobs, logger=context.logger)
    return _result("AGREE" if report["agree"] else "DISAGREE", report)


# Completion

@register_subjects("gm_composite")
def _composite_subjects(context, resolver):
    add_composite_subjects(resolver, context.ref("module"),
                           context.ref("filtration"),
                           context.ref("sequence"), context.window)


@register_task("gm_composite")
def _gm_composite(context):
    try:
        report = gm_composite_check(context.ref("module"),
                                    context.ref("filtration"),
                                    context.ref("sequence"), context.window,
                                    jobs=context.jobs, logger=context.logger)
    except NotCheckableError as e:
        return _result(NOT_CHECKABLE, {"reason": str(e)}, checks=[])
    return _result("AGREE" if report["agree"] else "DIFFER", report)


# Cartier divisors and prisms

def _not_cartier(error):
    return _result(NOT_CARTIER, {"chart": error.chart, "check": error.check,
                                 "reason": str(error)}, checks=[])


@register_subjects("verify_cartier", "chart_torsion_audit",
                   "lemma_5_2_audit", "divisor_completion_audit")
def _divisor_subjects(context, resolver):
    add_divisor_subjects(resolver, context.ref("divisor"),
                         context.task.get("x"), context.window)


@register_task("verify_cartier")
def _verify_cartier(context):
    divisor = context.ref("divisor")
    try:
        _, evidence = verify_cartier(divisor.ring, divisor.ideal,
                                     divisor.charts, logger=context.logger)
    except NotCartierError as e:
        return _not_cartier(e)
    return _result("CARTIER", evidence)


@register_task("chart_torsion_audit", "lemma_5_2_audit")
def _chart_torsion_audit(context):
    try:
        report = chart_torsion_audit(context.ref("divisor"),
                                     context.task["x"], context.window,
                                     jobs=context.jobs, logger=context.logger)
    except NotCartierError as e:
        return _not_cartier(e)
    if not report["agree"]:
        verdict = "DISAGREE"
    else:
        verdict = "PARTIAL" if report["partial"] else "AGREE"
    return _result(verdict, report)


@register_task("divisor_completion_audit")
def _divisor_completion_audit(context):
    divisor = context.ref("divisor")
    try:
        evidence = divisor.verify()
    except NotCartierError as e:
        return _not_cartier(e)
    report = divisor_completion_audit(
        divisor, context.task["x"], context.window,
        composite=context.task.get("composite", True), logger=context.logger
    )
    checks = list(evidence["checks"])
    checks.extend(c for c in report["checks"] if c not in checks)
    return _result("AGREE" if report["agree"] else "DISAGREE", report,
                   checks)


@register_subjects("pro_regular_pair")
def _pair_subjects(context, resolver):
    ideal = context.ref("ideal")
    x = ideal.ambient.element(context.task["x"])
    resolver.add("pair", lambda: pair_tower(ideal, x, context.window))


@register_task("pro_regular_pair")
def _pro_regular_pair(context):
    ideal = context.ref("ideal")
    certificate = is_pro_regular_pair(ideal.ambient, ideal,
                                      ideal.ambient.element(context.task["x"]),
                                      context.window, logger=context.logger)
    return _result(certificate.verdict, certificate.to_dict())


@register_subjects("prism_b")
def _prism_subjects(context, resolver):
    prism = context.ref("prism")
    resolver.add("ring", lambda: prism.ring)


@register_task("prism_b")
def _prism_b(context):
    result = prism_condition_b(context.ref("prism"))
    return _result("HOLDS" if result["holds"] else "FAILS", result)
