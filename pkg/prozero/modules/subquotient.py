"""
Subquotients U+V/V of free modules R^p and the operations producing them:
homology of a composable pair of maps and colon modules. Every subquotient
is re-presented as a cokernel right away (the 'module' attribute), while the
ambient generators are kept so that maps between subquotients can be induced
from ambient matrices by lifting.
"""

from functools import cached_property

from prozero.errors import NotAComplexError, NotWellDefinedError
from prozero.ground import ExactMatrix, Lifter, syzygies, format_vector
from prozero.modules.fp_module import FpModule, span_basis
from prozero.modules.maps import ModuleMap


class Subquotient(object):
    """
    The module (U + V)/V inside R^rank, U spanned by 'generators' and V by
    'relations' (J * R^rank is always part of V). Generators already lying in
    V are pruned, so is_zero() is a plain emptiness test.
    """
    def __init__(self, ring, rank, generators, relations=(), module=None,
                 prune=True):
        """
        Args:
            ring:       (RingPresentation) The ring R
            rank:       (int)  Ambient rank p
            generators: (list) Vectors of R^p spanning U
            relations:  (list) Vectors of R^p spanning V
            module:     (FpModule) Known presentation on 'generators' (skips
                        the syzygy computation and pruning)
            prune:      (bool) Drop generators lying in V
        """
        self.ring = ring
        self.rank = int(rank)
        self.relations = _clean(ring, relations)
        if module is not None:
            gens = [ring.reduce_vector(list(g)) for g in generators]
        else:
            gens = _clean(ring, generators)
            if prune:
                gens = [g for g in gens if not self.in_relations(g)]
        self.generators = gens
        self._pruned = module is None and prune
        if module is None:
            module = FpModule(ring, len(gens), syzygies(
                ring.spec, self.rank, gens, self.relations, ring.relations
            ) if gens else None)
        elif module.generators != len(gens):
            raise ValueError("Presentation has {} generators, subquotient "
                             "{}".format(module.generators, len(gens)))
        self.module = module

    @classmethod
    def whole(cls, module):
        """ The module M = R^g / Rel(M) viewed as a subquotient of R^g """
        return cls(module.ring, module.generators, module.units(),
                   module.relation_columns, module=module)

    def __repr__(self):
        return "Subquotient({} generators, {} relations in rank {})".format(
            len(self.generators), len(self.relations), self.rank
        )

    @cached_property
    def relation_basis(self):
        return span_basis(self.ring, self.rank, self.relations)

    @cached_property
    def lifter(self):
        return Lifter(self.ring.spec, self.rank, self.generators,
                      self.relations, self.ring.relations)

    def in_relations(self, vector):
        """ True iff 'vector' lies in V (is zero in the subquotient) """
        if self.rank == 0:
            return True
        return self.relation_basis.contains_vector(list(vector))

    def express(self, vector):
        """
        Coefficients c with sum c_j u_j = vector modulo V, or None when the
        vector is not in U + V.
        """
        coefficients = self.lifter.lift(list(vector))
        if coefficients is None:
            return None
        return self.ring.reduce_vector(coefficients)

    def contains(self, vector):
        return self.express(vector) is not None

    def ambient_vector(self, coefficients):
        """ sum_j c_j u_j in R^rank """
        out = [self.ring.ring.zero] * self.rank
        for c, u in zip(coefficients, self.generators):
            if c:
                out = [a + c * b for a, b in zip(out, u)]
        return self.ring.reduce_vector(out)

    def is_zero(self):
        if not self.generators:
            return True
        return False if self._pruned else self.module.is_zero()

    def is_subset(self, other):
        """ U+V inside U'+V' and V inside V' (same ambient rank) """
        return all(other.in_relations(v) for v in self.relations) and \
            all(other.contains(u) for u in self.generators)

    def equals(self, other):
        return self.rank == other.rank and self.is_subset(other) and \
            other.is_subset(self)

    def induced_map(self, target, ambient_matrix=None):
        """
        The map of subquotients induced by an ambient matrix A (identity if
        None), as a ModuleMap between the 'module' presentations.

        Raises:
            NotWellDefinedError if A does not send V into V' and U into U'+V'
        """
        if ambient_matrix is None:
            if target.rank != self.rank:
                raise NotWellDefinedError("Identity needs equal ambient ranks, "
                                          "got {} and {}".format(self.rank,
                                                                 target.rank))

            def image(v):
                return list(v)
        else:
            if ambient_matrix.shape != (target.rank, self.rank):
                raise NotWellDefinedError(
                    "Ambient matrix of shape {} does not map rank {} to rank "
                    "{}".format(ambient_matrix.shape, self.rank, target.rank)
                )
            image = ambient_matrix.apply
        for index, v in enumerate(self.relations):
            if not target.in_relations(image(v)):
                raise NotWellDefinedError("Relation {} is not mapped into the "
                                          "target relations".format(index))
        columns = []
        for index, u in enumerate(self.generators):
            c = target.express(image(u))
            if c is None:
                raise NotWellDefinedError("Generator {} is not mapped into "
                                          "the target".format(index))
            columns.append(c)
        matrix = ExactMatrix.from_columns(self.ring.spec,
                                          len(target.generators), columns)
        return ModuleMap(self.module, target.module, matrix, verify=False)

    def direct_sum(self, other):
        ring = self.ring
        zero = ring.ring.zero
        p, q = self.rank, other.rank

        def left(v):
            return list(v) + [zero] * q

        def right(v):
            return [zero] * p + list(v)

        return Subquotient(
            ring, p + q,
            [left(u) for u in self.generators] +
            [right(u) for u in other.generators],
            [left(v) for v in self.relations] +
            [right(v) for v in other.relations],
            module=self.module.direct_sum(other.module)
        )

    def describe(self):
        """ JSON-ready description """
        return {"rank": self.rank,
                "generators": [format_vector(u) for u in self.generators],
                "relations": [format_vector(v) for v in self.relations],
                "presentation": self.module.describe()}


def _clean(ring, vectors):
    out = []
    for v in vectors:
        v = ring.reduce_vector(list(v))
        if any(v) and v not in out:
            out.append(v)
    return out


def homology_at(f, g):
    """
    Homology ker(g)/im(f) at the middle of L --f--> M --g--> N.

    Args:
        f: (ModuleMap) Incoming map L -> M
        g: (ModuleMap) Outgoing map M -> N

    Returns:
        Subquotient of R^(gens M); its 'module' attribute presents the homology

    Raises:
        NotAComplexError if g o f is not zero
    """
    if f.target.generators != g.source.generators or \
            f.ring != g.ring:
        raise ValueError("Maps are not composable")
    if not g.compose(f).is_zero():
        raise NotAComplexError("Composite of the two maps is not zero")
    ring = g.ring
    kernel = syzygies(ring.spec, g.target.generators, g.matrix.columns(),
                      g.target.relation_columns, ring.relations)
    return Subquotient(ring, g.source.generators, kernel,
                       f.matrix.columns() + g.source.relation_columns)


def joint_annihilator(module, elements, submodule=()):
    """
    The module (N :_M (f_1, ..., f_t))/N of elements of M/N killed by every
    f_j. With t = 1 this is the colon module of a single element.

    Args:
        module:    (FpModule) M
        elements:  (list) Elements f_j (str, int or polynomial)
        submodule: (list) Vectors of R^g spanning N (images in M)

    Returns:
        Subquotient of R^g
    """
    ring = module.ring
    g = module.generators
    base = module.relation_columns + [list(c) for c in submodule]
    elements = [ring.element(f) for f in elements]
    if not elements:
        return Subquotient(ring, g, module.units(), base)
    zero = ring.ring.zero
    columns = [[f if i == j else zero for f in elements for i in range(g)]
               for j in range(g)]
    relations = [[v[i] if k == block else zero
                  for k in range(len(elements)) for i in range(g)]
                 for block in range(len(elements)) for v in base]
    generators = syzygies(ring.spec, g * len(elements), columns, relations,
                          ring.relations)
    return Subquotient(ring, g, generators, base)


def colon(module, submodule, element):
    """
    The colon module (N :_M f)/N, i.e. the elements of M/N killed by f.

    Args:
        module:    (FpModule) M
        submodule: (list) Vectors of R^g spanning N (images in M)
        element:   (str, int or polynomial) f

    Returns:
        Subquotient of R^g
    """
    return joint_annihilator(module, [element], submodule)


class IsomorphismCertificate(object):
    """
    A pair of mutually inverse maps between two presented modules. The
    certificate holds iff both composites equal the identity modulo the
    relations of the respective module.
    """
    def __init__(self, forward, backward):
        self.forward = forward
        self.backward = backward

    def verify(self):
        source, target = self.forward.source, self.forward.target
        if self.backward.source.generators != target.generators or \
                self.backward.target.generators != source.generators:
            return False
        try:
            ModuleMap(source, target, self.forward.matrix)
            ModuleMap(target, source, self.backward.matrix)
        except NotWellDefinedError:
            return False
        there_and_back = self.backward.compose(self.forward)
        back_and_there = self.forward.compose(self.backward)
        return there_and_back.equals(ModuleMap.identity(source)) and \
            back_and_there.equals(ModuleMap.identity(target))

    def to_dict(self):
        return {"forward": self.forward.to_strings(),
                "backward": self.backward.to_strings()}

    @classmethod
    def from_dict(cls, data, first, second):
        """
        Rebuild from stored matrices between the presentations 'first' and
        'second' (FpModules). The maps are not checked for well-definedness
        here; verify() decides.
        """
        ring = first.ring
        forward = ModuleMap(first, second, ring.matrix(
            data["forward"], shape=(second.generators, first.generators)
        ), verify=False)
        backward = ModuleMap(second, first, ring.matrix(
            data["backward"], shape=(first.generators, second.generators)
        ), verify=False)
        return cls(forward, backward)


def certify_isomorphism(first, second, forward_ambient=None,
                        backward_ambient=None):
    """
    Try to certify first ~= second for two Subquotients through the maps
    induced by the given ambient matrices (identities if None).

    Returns:
        IsomorphismCertificate, or None when no certificate was found. None
        never means "not isomorphic".
    """
    try:
        forward = first.induced_map(second, forward_ambient)
        backward = second.induced_map(first, backward_ambient)
    except NotWellDefinedError:
        return None
    certificate = IsomorphismCertificate(forward, backward)
    return certificate if certificate.verify() else None
