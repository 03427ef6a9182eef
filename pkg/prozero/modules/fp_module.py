"""
Finitely presented modules M = coker(R^s -> R^g) over a RingPresentation.
"""

from functools import cached_property
from itertools import product

from prozero.ground import ExactMatrix, GroebnerBasis, format_vector


def unit_vector(ring, rank, i):
    return [ring.ring.one if j == i else ring.ring.zero for j in range(rank)]


def span_basis(ring, rank, columns):
    """
    Groebner basis of the submodule of R^rank spanned by 'columns' together
    with J * R^rank (None when rank is zero).
    """
    if rank == 0:
        return None
    frame = ring.spec.frame(rank)
    polys = [frame.embed(list(c)) for c in columns]
    for c in ring.relations:
        for i in range(rank):
            vector = [c if j == i else ring.ring.zero for j in range(rank)]
            polys.append(frame.embed(vector))
    return GroebnerBasis(frame, polys)


class FpModule(object):
    """
    Cokernel of the relation matrix: 'generators' many generators, relation
    columns in normal form with respect to J (zero and repeated columns
    dropped).
    """
    def __init__(self, ring, generators, relations=None):
        """
        Args:
            ring:       (RingPresentation) The ring R
            generators: (int) Number of generators g
            relations:  (ExactMatrix or list) g x s matrix, or a list of
                        columns (each of length g)
        """
        self.ring = ring
        self.generators = int(generators)
        spec = ring.spec
        if relations is None:
            columns = []
        elif isinstance(relations, ExactMatrix):
            if relations.rows != self.generators:
                raise ValueError("Relation matrix has {} rows, expected "
                                 "{}".format(relations.rows, self.generators))
            columns = relations.columns()
        else:
            columns = [list(c) for c in relations]
        reduced = []
        for col in columns:
            if len(col) != self.generators:
                raise ValueError("Relation column of length {} does not fit "
                                 "{} generators".format(len(col),
                                                        self.generators))
            col = [ring.element(p) for p in col]
            if any(col) and col not in reduced:
                reduced.append(col)
        self.relations = ExactMatrix.from_columns(spec, self.generators,
                                                  reduced)

    @classmethod
    def free(cls, ring, rank):
        return cls(ring, rank)

    @classmethod
    def zero(cls, ring):
        return cls(ring, 0)

    @classmethod
    def cyclic(cls, ring, ideal):
        """ R/I for an Ideal (or list of elements) I """
        generators = ideal.generators if hasattr(ideal, "generators") \
            else ideal
        return cls(ring, 1, [[g] for g in generators])

    def __repr__(self):
        return "FpModule({} generators, {} relations over {})".format(
            self.generators, self.relations.cols,
            self.ring.name or self.ring.spec
        )

    @property
    def spec(self):
        return self.ring.spec

    @property
    def relation_columns(self):
        return self.relations.columns()

    def unit(self, i):
        return unit_vector(self.ring, self.generators, i)

    def units(self):
        return [self.unit(i) for i in range(self.generators)]

    def zero_vector(self):
        return [self.ring.ring.zero] * self.generators

    @cached_property
    def relation_basis(self):
        """ Groebner basis of Rel(M) + J*R^g in the frame of rank g """
        return span_basis(self.ring, self.generators, self.relation_columns)

    def contains(self, vector):
        """ True iff 'vector' (an element of R^g) is zero in M """
        if self.generators == 0:
            return True
        return self.relation_basis.contains_vector(list(vector))

    is_zero_element = contains

    def reduce(self, vector):
        """ Normal form of 'vector' modulo the relations """
        if self.generators == 0:
            return []
        return self.relation_basis.reduce_vector(list(vector))

    def is_zero(self):
        return all(self.contains(u) for u in self.units())

    def direct_sum(self, *others):
        modules = [self] + list(others)
        return FpModule(self.ring, sum(m.generators for m in modules),
                        ExactMatrix.block_diagonal(
                            self.spec, [m.relations for m in modules]
                        ))

    def quotient(self, columns):
        """ M/N for N spanned by the given vectors of R^g """
        return FpModule(self.ring, self.generators,
                        self.relation_columns + [list(c) for c in columns])

    def tensor_quotient(self, ideal):
        return tensor_quotient(self, ideal)

    def length_measure(self):
        """
        Over a field: the dimension. Over ZZ or ZZ/m: the group order.
        None if the module is not of finite length (or finiteness is not
        visible from the leading terms of the relation basis).
        """
        if self.generators == 0:
            return 0 if self.ring.spec.coefficients.is_field else 1
        field = self.ring.spec.coefficients.is_field
        frame = self.relation_basis.frame
        nvars = self.ring.spec.ngens
        leads = {i: [] for i in range(self.generators)}
        for poly in self.relation_basis:
            lm = poly.LM
            leads[frame.component(lm)].append(
                (frame.base_monomial(lm), 1 if field else int(poly.LC))
            )
        total = 0 if field else 1
        for i in range(self.generators):
            component = leads[i]
            if any(not any(m) and lc == 1 for m, lc in component):
                continue
            if not field and not any(not any(m) for m, _ in component):
                return None
            bounds = []
            for v in range(nvars):
                powers = [m[v] for m, lc in component
                          if lc == 1 and m[v] > 0 and
                          all(e == 0 for w, e in enumerate(m) if w != v)]
                if not powers:
                    return None
                bounds.append(min(powers))
            for monomial in product(*[range(b) for b in bounds]):
                divisors = [lc for m, lc in component
                            if all(a >= b for a, b in zip(monomial, m))]
                if field:
                    total += 0 if divisors else 1
                elif not divisors:
                    return None
                else:
                    total *= min(divisors)
        return total

    def is_finite_length(self):
        return self.length_measure() is not None

    def vector_space_dimension(self):
        """ Dimension over the coefficient field, None if infinite """
        if not self.ring.spec.coefficients.is_field:
            raise ValueError("Vector space dimension needs a coefficient "
                             "field, got {}".format(self.spec.coefficients))
        return self.length_measure()

    def describe(self):
        """ JSON-ready presentation """
        return {"generators": self.generators,
                "relations": [format_vector(c)
                              for c in self.relation_columns]}


def tensor_quotient(module, ideal):
    """
    Return M/IM: the relations a*e_j are appended for every generator a of I
    and every module generator j.

    Args:
        module: (FpModule) The module M
        ideal:  (Ideal or list) The ideal I
    """
    generators = ideal.generators if hasattr(ideal, "generators") else ideal
    ring = module.ring
    extra = []
    for a in generators:
        a = ring.element(a)
        for j in range(module.generators):
            extra.append([a if i == j else ring.ring.zero
                          for i in range(module.generators)])
    return module.quotient(extra)


def is_zero_module(module):
    return module.is_zero()
