"""
Čech (co)homology of a module with respect to a sequence, represented
through Koszul towers: homology by the classified lim / lim^1 of the
homology towers, cohomology by the ind-zero test of the cohomology
cotowers.
"""

import logging

from prozero.koszul import KoszulSystem
from prozero.towers import (UNDETERMINED, ZERO_CERTIFIED, IND_ZERO,
                            lim_lim1, is_pro_zero, is_ind_zero)
from prozero.utils import window_or_default

_LOGGER = logging.getLogger(__name__)

VANISHES = "VANISHES"
ISOMORPHIC_TO_COMPLETION = "ISOMORPHIC_TO_COMPLETION"


def koszul_subject(i):
    return "koszul:{}".format(i)


def cokoszul_subject(i):
    return "cokoszul:{}".format(i)


class CechHomologyReport(object):
    """
    Evidence about the Čech homology in one degree: the classifications of
    the Koszul towers H_i and H_{i+1} and the conclusion drawn from them.
    """
    def __init__(self, degree, conclusion, classifications, evidence=(),
                 diagnostics=()):
        """
        Args:
            degree:          (int) i
            conclusion:      (str) VANISHES, ISOMORPHIC_TO_COMPLETION or
                                   UNDETERMINED
            classifications: (dict) Subject key -> LimReport
            evidence:        (list) Names of the certified facts used
        """
        self.degree = degree
        self.conclusion = conclusion
        self.classifications = classifications
        self.evidence = list(evidence)
        self.diagnostics = list(diagnostics)

    def __repr__(self):
        return "CechHomologyReport(degree={}, {})".format(self.degree,
                                                          self.conclusion)

    @property
    def checks(self):
        out = []
        for key in sorted(self.classifications):
            out.extend(c for c in self.classifications[key].checks
                       if c not in out)
        return out

    def to_dict(self):
        return {"degree": self.degree, "conclusion": self.conclusion,
                "classifications": {k: v.to_dict() for k, v in
                                    sorted(self.classifications.items())},
                "evidence": self.evidence, "diagnostics": self.diagnostics,
                "checks": self.checks}


def cech_homology_report(i, sequence, module, window=None, system=None,
                         logger=None):
    """
    Applies the short exact sequences
        0 -> lim^1 H_{i+1}(x^(n); M) -> Ȟ_i -> lim H_i(x^(n); M) -> 0
    for i > 0, and for i = 0 the criterion Ȟ_0(M) ~= Λ(M) iff
    lim^1 H_1(x^(n); M) = 0. H_{r+1} is the zero tower.

    Args:
        i:        (int) Degree, 0 <= i <= r
        sequence: (SequenceSpec) x
        module:   (FpModule) M
        window:   (int) Window W
        system:   (KoszulSystem) Optional system to share cached levels

    Returns:
        CechHomologyReport

    Raises:
        DegreeOutOfRangeError unless 0 <= i <= r
    """
    logger = logger or _LOGGER
    window = window_or_default(window)
    system = system or KoszulSystem(sequence, module, logger=logger)
    system.check_degree(i)
    r = sequence.length
    classifications, evidence, diagnostics = {}, [], []

    top = None
    if i + 1 <= r:
        tower = system.tower(i + 1, window=window)
        top = lim_lim1(tower, subject=koszul_subject(i + 1), logger=logger)
        classifications[koszul_subject(i + 1)] = top
        upper_lim1_zero = top.lim1_status == ZERO_CERTIFIED
        if not upper_lim1_zero:
            pro_zero = is_pro_zero(tower, subject=koszul_subject(i + 1),
                                   logger=logger)
            diagnostics.append({"subject": koszul_subject(i + 1),
                                "pro_zero": pro_zero.verdict,
                                "offenders": pro_zero.witness.get(
                                    "offenders", []),
                                "diagnostics": pro_zero.diagnostics})
    else:
        upper_lim1_zero = True
        evidence.append("top_degree")
    if upper_lim1_zero:
        evidence.append("lim1 H_{} = 0".format(i + 1))

    if i == 0:
        conclusion = ISOMORPHIC_TO_COMPLETION if upper_lim1_zero \
            else UNDETERMINED
    else:
        bottom = lim_lim1(system.tower(i, window=window),
                          subject=koszul_subject(i), logger=logger)
        classifications[koszul_subject(i)] = bottom
        lim_zero = bottom.lim_status == ZERO_CERTIFIED
        if lim_zero:
            evidence.append("lim H_{} = 0".format(i))
        else:
            diagnostics.append({"subject": koszul_subject(i),
                                "lim": bottom.lim_status})
        conclusion = VANISHES if lim_zero and upper_lim1_zero \
            else UNDETERMINED
    logger.info("[*] Čech homology H_{} of {!r}: {}".format(i, module,
                                                           conclusion))
    return CechHomologyReport(i, conclusion, classifications, evidence,
                              diagnostics)


def cech_cohomology_report(i, sequence, module, window=None, system=None,
                           logger=None):
    """
    Čech cohomology in degree i is the colimit of H^i(x^(n); M). An ind-zero
    cotower certifies that it vanishes; nothing else is concluded.

    Returns:
        dict with 'conclusion' (VANISHES or UNDETERMINED) and the ind-zero
        certificate
    """
    logger = logger or _LOGGER
    window = window_or_default(window)
    system = system or KoszulSystem(sequence, module, logger=logger)
    system.check_degree(i)
    certificate = is_ind_zero(system.cotower(i, window=window),
                              subject=cokoszul_subject(i), logger=logger)
    conclusion = VANISHES if certificate.verdict == IND_ZERO \
        else UNDETERMINED
    return {"degree": i, "conclusion": conclusion,
            "certificate": certificate.to_dict(),
            "checks": certificate.checks}
