"""
Verdicts, certificates and the registry of replayable checks.

A check is a small JSON-ready record naming a kind, the subject it applies to
(a key resolved by the caller, e.g. "tower" or "colon:2") and keyword
arguments. Every certificate stores the checks that justify its verdict, and
'replay' re-executes them from scratch against freshly built subjects.
"""

import logging

from prozero.errors import DegreeCapExceeded, BadLevelsError

_LOGGER = logging.getLogger(__name__)

# Inverse towers
PRO_ZERO = "PRO_ZERO"
NOT_PRO_ZERO_WITHIN_WINDOW = "NOT_PRO_ZERO_WITHIN_WINDOW"
ML_CERTIFIED = "ML_CERTIFIED"
ML_STABILIZED_WITHIN_WINDOW = "ML_STABILIZED_WITHIN_WINDOW"
NOT_ML_WITHIN_WINDOW = "NOT_ML_WITHIN_WINDOW"
UNDETERMINED = "UNDETERMINED"

# Direct towers
IND_ZERO = "IND_ZERO"
NOT_IND_ZERO_WITHIN_WINDOW = "NOT_IND_ZERO_WITHIN_WINDOW"

# lim / lim^1 statuses
ZERO_CERTIFIED = "ZERO_CERTIFIED"
PRESENTED = "PRESENTED"

CHECKS = {}


def register_check(kind):
    """
    Decorator registering a check function func(subject, **args) -> bool
    under 'kind'.
    """
    def decorator(func):
        CHECKS[kind] = func
        return func
    return decorator


def check_name(kind, subject, args):
    arguments = ",".join("{}={}".format(k, args[k]) for k in sorted(args)
                         if not isinstance(args[k], (list, dict)))
    return "{}:{}({})".format(kind, subject, arguments)


def make_check(kind, subject, **args):
    """
    Returns a check record. Arguments must be JSON serializable.

    Args:
        kind:    (str) A registered check kind
        subject: (str) Key of the object the check runs against
        **args:  Keyword arguments passed to the check function
    """
    if kind not in CHECKS:
        raise KeyError("Unknown check kind '{}'".format(kind))
    return {"name": check_name(kind, subject, args), "kind": kind,
            "subject": subject, "args": args}


def _resolve(resolver, key):
    if callable(resolver):
        return resolver(key)
    return resolver[key]


def run_check(check, resolver, logger=None):
    """
    Executes one check record. Any failure to build the subject or to run
    the check counts as a failed check.
    """
    logger = logger or _LOGGER
    func = CHECKS.get(check.get("kind"))
    if func is None:
        logger.warning("Unknown check kind '{}'".format(check.get("kind")))
        return False
    try:
        subject = _resolve(resolver, check["subject"])
        return bool(func(subject, **check.get("args", {})))
    except (KeyError, TypeError, ValueError, IndexError, ArithmeticError,
            BadLevelsError, DegreeCapExceeded) as e:
        logger.warning("Check '{}' raised {}: {}".format(
            check.get("name"), type(e).__name__, e
        ))
        return False


def replay_checks(checks, resolver, logger=None):
    """ Returns the names of the checks which fail on replay """
    return [c.get("name") for c in checks
            if not run_check(c, resolver, logger=logger)]


class Certificate(object):
    """
    A verdict with its witness data and the replayable checks backing it.
    """
    def __init__(self, kind, verdict, witness=None, checks=(),
                 diagnostics=(), subject=None):
        """
        Args:
            kind:        (str)  The semi-decision, e.g. "pro_zero"
            verdict:     (str)  One of the verdict constants
            witness:     (dict) JSON-ready witness data
            checks:      (list) Check records (see make_check)
            diagnostics: (list) JSON-ready diagnostic records
            subject:     (str)  Key of the subject the checks refer to
        """
        self.kind = kind
        self.verdict = verdict
        self.witness = witness or {}
        self.checks = list(checks)
        self.diagnostics = list(diagnostics)
        self.subject = subject

    def __repr__(self):
        return "Certificate({}: {})".format(self.kind, self.verdict)

    def __eq__(self, other):
        return isinstance(other, Certificate) and \
            self.to_dict() == other.to_dict()

    def to_dict(self):
        return {"kind": self.kind, "verdict": self.verdict,
                "witness": self.witness, "checks": self.checks,
                "diagnostics": self.diagnostics, "subject": self.subject}

    @classmethod
    def from_dict(cls, data):
        return cls(data["kind"], data["verdict"], data.get("witness"),
                   data.get("checks", ()), data.get("diagnostics", ()),
                   data.get("subject"))

    def replay(self, resolver, logger=None):
        """ Re-runs every check, returns the names of the failing ones """
        return replay_checks(self.checks, resolver, logger=logger)


class LimReport(object):
    """
    Classification of lim and lim^1 of an inverse tower by the first
    applicable certified rule.
    """
    def __init__(self, lim_status, lim1_status, rule_applied=None,
                 lim_module=None, lim_level=None, lim_kind=None, checks=(),
                 diagnostics=()):
        self.lim_status = lim_status
        self.lim1_status = lim1_status
        self.rule_applied = rule_applied
        self.lim_module = lim_module
        self.lim_level = lim_level
        self.lim_kind = lim_kind
        self.checks = list(checks)
        self.diagnostics = list(diagnostics)

    def __repr__(self):
        return "LimReport(lim={}, lim1={}, rule={})".format(
            self.lim_status, self.lim1_status, self.rule_applied
        )

    @property
    def classified(self):
        return UNDETERMINED not in (self.lim_status, self.lim1_status)

    @property
    def vanishes(self):
        return self.lim_status == ZERO_CERTIFIED and \
            self.lim1_status == ZERO_CERTIFIED

    def to_dict(self):
        lim = {"status": self.lim_status}
        if self.lim_status == PRESENTED:
            lim.update({"module": self.lim_module.describe(),
                        "level": self.lim_level, "kind": self.lim_kind})
        return {"lim": lim, "lim1": {"status": self.lim1_status},
                "rule_applied": self.rule_applied, "checks": self.checks,
                "diagnostics": self.diagnostics}

    def replay(self, resolver, logger=None):
        return replay_checks(self.checks, resolver, logger=logger)
