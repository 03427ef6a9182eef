"""
The Koszul towers of a sequence on a module: levels K(x^(n); M) for all n,
the comparison maps between them and the towers of (co)homology they
generate. Also holds the torsion functor computed through the ascending
chain of annihilators.
"""

import logging
import threading

from prozero import defaults
from prozero.errors import (BadLevelsError, DegreeOutOfRangeError,
                            UndeterminedError)
from prozero.modules import joint_annihilator, certify_isomorphism
from prozero.rings import ideal_power
from prozero.towers import (InverseTower, DirectTower,
                            SURJECTIVE_BY_CONSTRUCTION,
                            TORSION_CHAIN_BY_CONSTRUCTION)
from prozero.koszul.complex import (KoszulLevel, KoszulCoLevel,
                                    comparison_matrix)

_LOGGER = logging.getLogger(__name__)


class KoszulSystem(object):
    """
    All Koszul levels of a fixed sequence x and module M. Levels are built
    on first access and cached, so towers and transitions of different
    degrees share the same presentations.
    """
    def __init__(self, sequence, module, logger=None):
        """
        Args:
            sequence: (SequenceSpec) x_1, ..., x_r
            module:   (FpModule) M over the ring of the sequence
            logger:   (logging.Logger) Optional logger
        """
        if module.ring != sequence.ring:
            raise ValueError("Sequence and module live over different rings")
        self.sequence = sequence
        self.module = module
        self.logger = logger or _LOGGER
        self._levels = {}
        self._colevels = {}
        self._lock = threading.RLock()

    def __repr__(self):
        return "KoszulSystem({!r}, {!r})".format(self.sequence, self.module)

    def level(self, n):
        with self._lock:
            if n not in self._levels:
                self._levels[n] = KoszulLevel(self.sequence, n, self.module)
            return self._levels[n]

    def colevel(self, n):
        with self._lock:
            if n not in self._colevels:
                self._colevels[n] = KoszulCoLevel(self.sequence, n,
                                                  self.module)
            return self._colevels[n]

    def check_degree(self, i):
        if not 0 <= i <= self.sequence.length:
            raise DegreeOutOfRangeError(
                "Degree {} outside 0..{}".format(i, self.sequence.length),
                degree=i
            )

    def homology(self, i, n):
        """ H_i(x^(n); M) as a Subquotient """
        return self.level(n).homology(i)

    def cohomology(self, i, n):
        """ H^i(x^(n); M) as a Subquotient """
        return self.colevel(n).cohomology(i)

    def comparison(self, i, shift):
        return comparison_matrix(self.sequence, i, self.module.generators,
                                 shift)

    def transition(self, i, m, n):
        """
        The natural map H_i(x^(m); M) -> H_i(x^(n); M), m >= n.

        Raises:
            BadLevelsError if m < n
        """
        if m < n:
            raise BadLevelsError("Koszul transitions need m >= n, got m={}, "
                                 "n={}".format(m, n))
        return self.homology(i, m).induced_map(self.homology(i, n),
                                               self.comparison(i, m - n))

    def cotransition(self, i, n, m):
        """
        The natural map H^i(x^(n); M) -> H^i(x^(m); M), m >= n.

        Raises:
            BadLevelsError if m < n
        """
        if m < n:
            raise BadLevelsError("Koszul cotransitions need m >= n, got "
                                 "n={}, m={}".format(n, m))
        return self.cohomology(i, n).induced_map(self.cohomology(i, m),
                                                 self.comparison(i, m - n))

    def tower(self, i, window=None, tags=(), name=None, jobs=None):
        """
        The inverse tower {H_i(x^(n); M)}_n. Degree 0 has surjective
        transitions and is tagged accordingly; for a single element, H_1 is
        the torsion chain 0 :_M x^n.
        """
        self.check_degree(i)
        tags = set(tags)
        if i == 0:
            tags.add(SURJECTIVE_BY_CONSTRUCTION)
        elif self.sequence.length == 1:
            tags.add(TORSION_CHAIN_BY_CONSTRUCTION)
        return InverseTower.from_subquotients(
            subquotient_rule=lambda n: self.homology(i, n),
            ambient_rule=lambda n: self.comparison(i, 1),
            transition_rule=lambda m, n: self.transition(i, m, n),
            window=window, tags=tuple(tags),
            name=name or "H_{}(koszul)".format(i), jobs=jobs,
            logger=self.logger
        )

    def cotower(self, i, window=None, tags=(), name=None, jobs=None):
        """ The direct tower {H^i(x^(n); M)}_n """
        self.check_degree(i)
        return DirectTower.from_subquotients(
            subquotient_rule=lambda n: self.cohomology(i, n),
            ambient_rule=lambda n: self.comparison(i, 1),
            window=window, tags=tuple(tags),
            name=name or "H^{}(koszul)".format(i), jobs=jobs,
            logger=self.logger
        )


def koszul_homology(i, sequence, n, module):
    """
    H_i(x_1^n, ..., x_r^n; M) as an FpModule.

    Raises:
        DegreeOutOfRangeError unless 0 <= i <= r
        BadLevelsError if n < 1
    """
    return KoszulLevel(sequence, n, module).homology(i).module


def koszul_cohomology(i, sequence, n, module):
    """ H^i(x_1^n, ..., x_r^n; M) as a Subquotient """
    return KoszulCoLevel(sequence, n, module).cohomology(i)


def koszul_transition(i, m, n, sequence, module):
    """ The map H_i(x^(m); M) -> H_i(x^(n); M) as a ModuleMap """
    return KoszulSystem(sequence, module).transition(i, m, n)


def koszul_cotransition(i, n, m, sequence, module):
    """ The map H^i(x^(n); M) -> H^i(x^(m); M) as a ModuleMap """
    return KoszulSystem(sequence, module).cotransition(i, n, m)


def koszul_tower(i, sequence, module, window=None, tags=(), jobs=None,
                 logger=None):
    return KoszulSystem(sequence, module, logger=logger).tower(
        i, window=window, tags=tags, jobs=jobs
    )


def koszul_cotower(i, sequence, module, window=None, tags=(), jobs=None,
                   logger=None):
    return KoszulSystem(sequence, module, logger=logger).cotower(
        i, window=window, tags=tags, jobs=jobs
    )


def gamma_torsion(sequence, module, cap=None, logger=None):
    """
    The torsion submodule of M with respect to the ideal I = (x_1, ..., x_r):
    the union of the ascending chain 0 :_M I^k. Once two consecutive members
    agree the chain is constant from there on, and the union contains
    0 :_M (x_1^n, ..., x_r^n) for every n.

    Args:
        sequence: (SequenceSpec) x
        module:   (FpModule) M
        cap:      (int) Largest k tried, defaults to prozero.defaults.DEGREE_CAP

    Returns:
        (Subquotient, int): the torsion submodule and the first k with
        0 :_M I^k = 0 :_M I^(k+1)

    Raises:
        UndeterminedError if the chain does not stabilize up to the cap
    """
    logger = logger or _LOGGER
    cap = int(cap or defaults.DEGREE_CAP)
    ideal = sequence.ideal(1)
    previous = joint_annihilator(module, ideal.generators)
    for k in range(1, cap + 1):
        following = joint_annihilator(module,
                                      ideal_power(ideal, k + 1).generators)
        if previous.equals(following):
            logger.debug("[*] Torsion chain of {!r} stable at {}".format(
                sequence, k
            ))
            return previous, k
        previous = following
    raise UndeterminedError("Annihilator chain of {!r} does not stabilize up "
                            "to {}".format(sequence, cap))


def self_duality_certificate(sequence, n, module):
    """
    Certifies H_r(x^(n); M) ~= H^0(x^(n); M): both are the joint annihilator
    of x_1^n, ..., x_r^n inside M = C_r = C^0, and the identity of the
    ambient free module induces mutually inverse maps.

    Returns:
        IsomorphismCertificate, or None if the lifts fail
    """
    r = sequence.length
    return certify_isomorphism(KoszulLevel(sequence, n, module).homology(r),
                               KoszulCoLevel(sequence, n, module)
                               .cohomology(0))
