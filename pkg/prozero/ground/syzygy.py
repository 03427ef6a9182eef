"""
Syzygies modulo relations and the lifting solver.

Both work in a frame of rank p + k: the top p positions carry the vectors,
the bottom k positions record which generator columns were used. With the
position-over-term order every basis element whose top part vanishes is a
syzygy, and reducing (w; 0) expresses w through the generators whenever the
top part of the remainder vanishes.
"""

import numpy as np

from prozero.ground.domains import INTEGERS, INTEGERS_MOD
from prozero.ground.groebner import GroebnerBasis
from prozero.ground.matrices import ExactMatrix
from prozero.ground.smith import integer_kernel


def _constant(poly):
    if not poly:
        return 0
    if len(poly) != 1 or poly.ring.zero_monom not in poly:
        raise ValueError("Expected a constant, got {}".format(poly))
    return int(poly.const())


def _integer_syzygies(spec, rank, columns, relations, ring_relations):
    """ Syzygies over ZZ without variables, from the Smith normal form """
    ring = spec.ring
    extra = list(relations)
    for c in ring_relations:
        for i in range(rank):
            extra.append([ring(c) if j == i else ring.zero
                          for j in range(rank)])
    k = len(columns)
    all_columns = list(columns) + extra
    A = np.zeros((rank, len(all_columns)), dtype=object)
    for j, col in enumerate(all_columns):
        for i in range(rank):
            A[i, j] = _constant(col[i])
    kernel = integer_kernel(A)
    out = []
    for vector in kernel:
        head = vector[:k]
        if any(head):
            out.append([ring(x) for x in head])
    return out


def _stacked_generators(frame, rank, columns, relations, ring_relations):
    ring = frame.spec.ring
    k = len(columns)
    zeros = [ring.zero] * k
    polys = []
    for j, col in enumerate(columns):
        bottom = [ring.one if i == j else ring.zero for i in range(k)]
        polys.append(frame.embed(list(col) + bottom))
    for col in relations:
        polys.append(frame.embed(list(col) + zeros))
    for c in ring_relations:
        for i in range(rank):
            top = [ring(c) if j == i else ring.zero for j in range(rank)]
            polys.append(frame.embed(top + zeros))
    return polys


def syzygies(spec, rank, columns, relations=(), ring_relations=(),
             degree_cap=None):
    """
    Generators of { c in P^k : sum_j c_j columns_j lies in the span of
    'relations' and of ring_relations * P^rank }.

    Args:
        spec:           (PolyRingSpec) Polynomial ring of the entries
        rank:           (int)  Length p of the column vectors
        columns:        (list) k vectors of length p
        relations:      (list) vectors of length p
        ring_relations: (list) polynomials g, contributing g*e_i for all i
        degree_cap:     (int)  Optional Groebner degree cap

    Returns:
        list of vectors of length k (polynomials of spec.ring)
    """
    columns = [list(c) for c in columns]
    k = len(columns)
    if k == 0:
        return []
    ring = spec.ring
    if rank == 0:
        return [[ring.one if i == j else ring.zero for i in range(k)]
                for j in range(k)]
    if not spec.variables and spec.coefficients.kind in (INTEGERS,
                                                         INTEGERS_MOD):
        ring_relations = list(ring_relations) + \
            [ring(m) for m in spec.coefficients.base_relations]
        return _integer_syzygies(spec, rank, columns, relations,
                                 ring_relations)
    frame = spec.frame(rank + k)
    ring_relations = list(ring_relations) + \
        [ring(m) for m in spec.coefficients.base_relations]
    basis = GroebnerBasis(frame, _stacked_generators(
        frame, rank, columns, relations, ring_relations
    ), degree_cap=degree_cap)
    out = []
    for g in basis:
        if frame.component(g.LM) >= rank:
            out.append(frame.vector(g)[rank:])
    return out


def syzygy_matrix(A, ring=None, degree_cap=None):
    """
    Return an ExactMatrix whose columns generate {v : A v = 0}. With a
    RingPresentation 'ring' the kernel is taken over the quotient ring and
    the entries are returned in normal form.

    Args:
        A:    (ExactMatrix)      The matrix
        ring: (RingPresentation) Optional quotient ring
    """
    ring_relations = ring.relations if ring is not None else ()
    syz = syzygies(A.spec, A.rows, A.columns(), (), ring_relations,
                   degree_cap=degree_cap)
    if ring is not None:
        syz = [ring.reduce_vector(v) for v in syz]
        syz = [v for v in syz if any(v)]
    return ExactMatrix.from_columns(A.spec, A.cols, syz)


class Lifter(object):
    """
    Expresses vectors of P^rank as combinations of fixed generator columns
    modulo fixed relation columns (and ring_relations * P^rank).
    """
    def __init__(self, spec, rank, generators, relations=(),
                 ring_relations=(), degree_cap=None):
        self.spec = spec
        self.rank = rank
        self.generators = [list(g) for g in generators]
        self.k = len(self.generators)
        ring = spec.ring
        self.ring_relations = list(ring_relations) + \
            [ring(m) for m in spec.coefficients.base_relations]
        self.relations = [list(r) for r in relations]
        self._frame = None
        self._basis = None
        if rank > 0:
            self._frame = spec.frame(rank + self.k)
            self._basis = GroebnerBasis(self._frame, _stacked_generators(
                self._frame, rank, self.generators, self.relations,
                self.ring_relations
            ), degree_cap=degree_cap)

    def lift(self, vector):
        """
        Return coefficients c (length k) with sum_j c_j g_j = vector modulo
        the relations, or None if the vector is not in the span.
        """
        ring = self.spec.ring
        if self.rank == 0:
            return [ring.zero] * self.k
        if len(vector) != self.rank:
            raise ValueError("Vector of length {} does not fit rank "
                             "{}".format(len(vector), self.rank))
        poly = self._frame.embed(list(vector) + [ring.zero] * self.k)
        parts = self._frame.vector(self._basis.reduce(poly))
        if any(parts[:self.rank]):
            return None
        return [-c for c in parts[self.rank:]]

    def contains(self, vector):
        return self.lift(vector) is not None
