"""
Decreasing filtrations M = M_0 ⊇ M_1 ⊇ ... of a finitely presented module
and the completion towers {M/M_n} they define.
"""

import logging
import threading

from prozero.ground import ExactMatrix
from prozero.modules import Subquotient, span_basis, tensor_quotient
from prozero.rings import Ideal, ideal_power
from prozero.towers import (InverseTower, SURJECTIVE_BY_CONSTRUCTION,
                            EVENTUALLY_CONSTANT_BY_CONSTRUCTION)
from prozero.utils import window_or_default

_LOGGER = logging.getLogger(__name__)


def scaled_units(module, elements):
    """ The vectors a * e_j of R^g for every element a and generator j """
    ring = module.ring
    zero = ring.ring.zero
    g = module.generators
    return [[a if t == j else zero for t in range(g)]
            for a in (ring.element(e) for e in elements) for j in range(g)]


class Filtration(object):
    """
    A rule n -> vectors of R^g spanning M_n (modulo the relations of M),
    n >= 0. Submodules are computed once per level.

    'stable_from' marks filtrations constant by construction from that
    level on (e.g. the zero filtration); towers derived from such a
    filtration are tagged eventually constant.
    """
    def __init__(self, module, rule, name=None, stable_from=None):
        self.module = module
        self.name = name or "filtration"
        self.stable_from = stable_from
        self._rule = rule
        self._levels = {}
        self._lock = threading.RLock()

    @classmethod
    def from_rule(cls, module, rule, name=None, stable_from=None):
        """
        Args:
            module: (FpModule) M
            rule:   (callable) n -> list of vectors of R^g (or of elements a,
                    read as the submodule aM, when g == 1)
        """
        def vectors(n):
            out = rule(n)
            if module.generators == 1:
                out = [v if isinstance(v, (list, tuple)) else [v]
                       for v in out]
            return [[module.ring.element(e) for e in v] for v in out]
        return cls(module, vectors, name=name, stable_from=stable_from)

    @classmethod
    def adic(cls, module, ideal):
        """ M_n = I^n M (M_0 = M) """
        if not isinstance(ideal, Ideal):
            ideal = Ideal(module.ring, ideal)

        def rule(n):
            if n == 0:
                return module.units()
            return scaled_units(module, ideal_power(ideal, n).generators)
        return cls(module, rule, name="adic({})".format(
            ",".join(ideal.to_strings())
        ))

    @classmethod
    def sequence_powers(cls, module, sequence):
        """ M_n = (x_1^n, ..., x_r^n) M """
        return cls(module, lambda n: scaled_units(module, sequence.powers(n)),
                   name="powers({})".format(",".join(sequence.to_strings())))

    @classmethod
    def zero(cls, module):
        """ M_n = 0 for n >= 1 """
        return cls(module, lambda n: module.units() if n == 0 else [],
                   name="zero", stable_from=1)

    def __repr__(self):
        return "Filtration('{}' on {!r})".format(self.name, self.module)

    def submodule(self, n):
        """ Vectors of R^g spanning M_n """
        with self._lock:
            if n not in self._levels:
                self._levels[n] = [self.module.ring.reduce_vector(list(v))
                                   for v in self._rule(n)]
            return self._levels[n]

    def quotient(self, n):
        """ M/M_n as an FpModule on the generators of M """
        return self.module.quotient(self.submodule(n))

    def level_subquotient(self, n):
        quotient = self.quotient(n)
        return Subquotient(quotient.ring, quotient.generators,
                           quotient.units(), quotient.relation_columns,
                           module=quotient)

    def verify(self, window=None):
        """
        Checks M_{n+1} ⊆ M_n for n = 0..W-1. Returns the failing levels n.
        """
        W = window_or_default(window)
        module = self.module
        failing = []
        for n in range(W):
            span = span_basis(module.ring, module.generators,
                              self.submodule(n) + module.relation_columns)
            if not all(span.contains_vector(v)
                       for v in self.submodule(n + 1)):
                failing.append(n)
        if failing:
            _LOGGER.warning("[*] {!r} is not decreasing at levels {}".format(
                self, failing
            ))
        return failing


def filtration_tower(module, filtration, window=None, jobs=None,
                     logger=None):
    """
    The completion tower {M/M_n} with the canonical surjections, tagged
    SURJECTIVE_BY_CONSTRUCTION (and EVENTUALLY_CONSTANT_BY_CONSTRUCTION for
    a filtration with 'stable_from').
    """
    identity = ExactMatrix.identity(module.spec, module.generators)
    tags = [SURJECTIVE_BY_CONSTRUCTION]
    stable_from = filtration.stable_from
    if stable_from is not None:
        stable_from = max(int(stable_from), 1)
        tags.append(EVENTUALLY_CONSTANT_BY_CONSTRUCTION)
    return InverseTower.from_subquotients(
        subquotient_rule=filtration.level_subquotient,
        ambient_rule=lambda n: identity,
        window=window, tags=tags, stable_from=stable_from,
        name="completion:{}".format(filtration.name), jobs=jobs,
        logger=logger
    )


def adic_tower(module, sequence, window=None, jobs=None, logger=None):
    """ The tower {M/x^(n) M} of the x-adic completion of M """
    return filtration_tower(module, Filtration.sequence_powers(module,
                                                               sequence),
                            window=window, jobs=jobs, logger=logger)


def adic_level(module, sequence, n):
    """ M/x^(n) M """
    return tensor_quotient(module, sequence.powers(n))
