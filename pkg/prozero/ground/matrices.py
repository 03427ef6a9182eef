"""
ExactMatrix: a matrix of polynomials over a PolyRingSpec, stored in a numpy
object array. Columns are the primary view: relation matrices, map matrices
and generator lists are all handled column by column.
"""

import numpy as np


def _object_array(rows, cols):
    return np.empty((rows, cols), dtype=object)


class ExactMatrix(object):
    """
    Matrix of polynomials of spec.ring. Entries are kept as given; the ring
    presentation (RingPresentation.reduce_matrix) brings them into normal
    form with respect to an ideal.
    """
    def __init__(self, spec, entries, shape=None):
        """
        Args:
            spec:    (PolyRingSpec) Polynomial ring of the entries
            entries: (ndarray or list) 2D object array or list of rows
            shape:   (tuple) Required for list input with zero rows/columns
        """
        self.spec = spec
        ring = spec.ring
        if isinstance(entries, np.ndarray):
            if entries.ndim != 2:
                raise ValueError("ExactMatrix needs a 2D array, got shape "
                                 "{}".format(entries.shape))
            rows, cols = entries.shape
            values = entries
        else:
            rows = len(entries)
            cols = len(entries[0]) if rows else 0
            if shape is not None:
                rows, cols = shape
            values = entries
        self.entries = _object_array(rows, cols)
        for i in range(rows):
            if not isinstance(values, np.ndarray) and len(values[i]) != cols:
                raise ValueError("Ragged matrix rows")
            for j in range(cols):
                self.entries[i, j] = ring(values[i][j]) \
                    if not isinstance(values, np.ndarray) \
                    else ring(values[i, j])

    @classmethod
    def zeros(cls, spec, rows, cols):
        ring = spec.ring
        return cls(spec, [[ring.zero for _ in range(cols)]
                          for _ in range(rows)], shape=(rows, cols))

    @classmethod
    def identity(cls, spec, n):
        return cls.diagonal(spec, [spec.ring.one] * n)

    @classmethod
    def diagonal(cls, spec, entries):
        ring = spec.ring
        n = len(entries)
        return cls(spec, [[ring(entries[i]) if i == j else ring.zero
                           for j in range(n)] for i in range(n)],
                   shape=(n, n))

    @classmethod
    def from_columns(cls, spec, rows, columns):
        """ Matrix with the given columns (each a sequence of length rows) """
        ring = spec.ring
        cols = len(columns)
        return cls(spec, [[ring(columns[j][i]) for j in range(cols)]
                          for i in range(rows)], shape=(rows, cols))

    @classmethod
    def block_diagonal(cls, spec, blocks):
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = cls.zeros(spec, rows, cols)
        r = c = 0
        for b in blocks:
            out.entries[r:r + b.rows, c:c + b.cols] = b.entries
            r += b.rows
            c += b.cols
        return out

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    @property
    def ring(self):
        return self.spec.ring

    def __getitem__(self, index):
        return self.entries[index]

    def __repr__(self):
        return "ExactMatrix({}x{}, {!r})".format(self.rows, self.cols,
                                                  self.spec)

    def column(self, j):
        return list(self.entries[:, j])

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def row(self, i):
        return list(self.entries[i, :])

    def _wrap(self, array):
        out = ExactMatrix.zeros(self.spec, *array.shape)
        out.entries[...] = array
        return out

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("Cannot multiply {}x{} with {}x{}".format(
                self.rows, self.cols, other.rows, other.cols
            ))
        if self.cols == 0:
            return ExactMatrix.zeros(self.spec, self.rows, other.cols)
        return self._wrap(np.dot(self.entries, other.entries))

    def apply(self, vector):
        """ Matrix-vector product, returned as a list """
        if len(vector) != self.cols:
            raise ValueError("Vector of length {} does not fit {} "
                             "columns".format(len(vector), self.cols))
        ring = self.ring
        out = []
        for i in range(self.rows):
            value = ring.zero
            for j in range(self.cols):
                if vector[j] and self.entries[i, j]:
                    value += self.entries[i, j] * vector[j]
            out.append(value)
        return out

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("Shape mismatch {} vs {}".format(self.shape,
                                                              other.shape))
        return self._wrap(self.entries + other.entries)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("Shape mismatch {} vs {}".format(self.shape,
                                                              other.shape))
        return self._wrap(self.entries - other.entries)

    def __neg__(self):
        return self._wrap(-self.entries)

    def scale(self, element):
        element = self.ring(element)
        return self.map_entries(lambda p: p * element)

    def map_entries(self, func):
        out = ExactMatrix.zeros(self.spec, self.rows, self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out.entries[i, j] = func(self.entries[i, j])
        return out

    def hstack(self, *others):
        blocks = [self] + list(others)
        if any(b.rows != self.rows for b in blocks):
            raise ValueError("hstack needs equal row counts")
        out = ExactMatrix.zeros(self.spec, self.rows,
                                sum(b.cols for b in blocks))
        c = 0
        for b in blocks:
            out.entries[:, c:c + b.cols] = b.entries
            c += b.cols
        return out

    def vstack(self, *others):
        blocks = [self] + list(others)
        if any(b.cols != self.cols for b in blocks):
            raise ValueError("vstack needs equal column counts")
        out = ExactMatrix.zeros(self.spec, sum(b.rows for b in blocks),
                                self.cols)
        r = 0
        for b in blocks:
            out.entries[r:r + b.rows, :] = b.entries
            r += b.rows
        return out

    def transpose(self):
        out = ExactMatrix.zeros(self.spec, self.cols, self.rows)
        out.entries[...] = self.entries.T
        return out

    def select_columns(self, indices):
        return ExactMatrix.from_columns(self.spec, self.rows,
                                        [self.column(j) for j in indices])

    def is_zero(self):
        return all(not p for p in self.entries.flat)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix) or self.shape != other.shape:
            return False
        return all(a == b for a, b in zip(self.entries.flat,
                                          other.entries.flat))

    def __hash__(self):
        return hash((self.shape, tuple(str(p) for p in self.entries.flat)))

    def to_strings(self):
        """ Nested list of rows of polynomial strings """
        from prozero.ground.polystrings import format_polynomial
        return [[format_polynomial(p) for p in self.row(i)]
                for i in range(self.rows)]

    @classmethod
    def from_strings(cls, spec, rows, shape=None):
        """ Inverse of 'to_strings' """
        from prozero.ground.polystrings import parse_polynomial
        parsed = [[parse_polynomial(s, spec) for s in row] for row in rows]
        if shape is None:
            shape = (len(parsed), len(parsed[0]) if parsed else 0)
        return cls(spec, parsed, shape=shape)
