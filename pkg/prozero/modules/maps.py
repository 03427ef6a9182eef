"""
R-linear maps between finitely presented modules, given by matrices on the
generators.
"""

from prozero.errors import NotWellDefinedError
from prozero.ground import ExactMatrix, syzygies
from prozero.modules.fp_module import span_basis


class ModuleMap(object):
    """
    A map f: M -> N represented by a (gens N) x (gens M) matrix whose j-th
    column is the image of the j-th generator of M. With verify=True the
    construction checks that every relation column of M is sent into
    Rel(N), which is what makes the matrix a well-defined map.
    """
    def __init__(self, source, target, matrix, verify=True):
        """
        Args:
            source: (FpModule) Domain M
            target: (FpModule) Codomain N
            matrix: (ExactMatrix or list) Rows of the matrix
            verify: (bool) Check that relations go to relations

        Raises:
            NotWellDefinedError if the rings differ, the shape is wrong or a
            relation of M is not sent into Rel(N)
        """
        if source.ring != target.ring:
            raise NotWellDefinedError("Source and target of a map must be "
                                      "modules over the same ring")
        ring = source.ring
        shape = (target.generators, source.generators)
        if not isinstance(matrix, ExactMatrix):
            matrix = ring.matrix(matrix, shape=shape)
        if matrix.shape != shape:
            raise NotWellDefinedError("Map matrix has shape {}, expected "
                                      "{}".format(matrix.shape, shape))
        self.source = source
        self.target = target
        self.matrix = ring.reduce_matrix(matrix)
        if verify:
            for index, column in enumerate(source.relation_columns):
                if not target.contains(self.matrix.apply(column)):
                    raise NotWellDefinedError(
                        "Relation {} of the source is not mapped into the "
                        "relations of the target".format(index)
                    )

    @classmethod
    def identity(cls, module):
        return cls(module, module,
                   ExactMatrix.identity(module.spec, module.generators),
                   verify=False)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target,
                   ExactMatrix.zeros(source.spec, target.generators,
                                     source.generators),
                   verify=False)

    @property
    def ring(self):
        return self.source.ring

    def __repr__(self):
        return "ModuleMap({} -> {} generators)".format(self.source.generators,
                                                       self.target.generators)

    def image_of(self, vector):
        """ Image of a vector of R^(gens M), reduced modulo J """
        return self.ring.reduce_vector(self.matrix.apply(list(vector)))

    def compose(self, other):
        """ self o other, where other: L -> M and self: M -> N """
        if other.target.generators != self.source.generators:
            raise ValueError("Cannot compose: {} generators vs {}".format(
                other.target.generators, self.source.generators
            ))
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix,
                         verify=False)

    def is_zero(self):
        return all(self.target.contains(c) for c in self.matrix.columns())

    def equals(self, other):
        """ Equality as maps: the column differences vanish in the target """
        if self.matrix.shape != other.matrix.shape:
            return False
        difference = self.matrix - other.matrix
        return all(self.target.contains(c) for c in difference.columns())

    def is_surjective(self):
        if self.target.generators == 0:
            return True
        basis = span_basis(self.ring, self.target.generators,
                           self.matrix.columns() +
                           self.target.relation_columns)
        return all(basis.contains_vector(u) for u in self.target.units())

    def kernel(self):
        """ The kernel as a Subquotient of R^(gens M) """
        from prozero.modules.subquotient import Subquotient
        ring = self.ring
        kernel = syzygies(ring.spec, self.target.generators,
                          self.matrix.columns(),
                          self.target.relation_columns, ring.relations)
        return Subquotient(ring, self.source.generators, kernel,
                           self.source.relation_columns)

    def is_injective(self):
        return self.kernel().is_zero()

    def is_isomorphism(self):
        return self.is_surjective() and self.is_injective()

    def image(self):
        """ The image as a Subquotient of R^(gens N) """
        from prozero.modules.subquotient import Subquotient
        return Subquotient(self.ring, self.target.generators,
                           self.matrix.columns(),
                           self.target.relation_columns)

    def to_strings(self):
        return self.matrix.to_strings()


def is_zero_map(module_map):
    return module_map.is_zero()
