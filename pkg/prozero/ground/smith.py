"""
Smith normal form of integer matrices of any shape.

Integer entries are held in numpy object arrays so that no intermediate
value ever overflows.
"""

import numpy as np


class SmithNormalForm(object):
    """
    Smith normal form of an m x n integer matrix A:

        U A V = D

    with U (m x m) and V (n x n) unimodular and D diagonal with non-negative
    entries d_1 | d_2 | ... (zeros last).

    Usage
    -----
    snf = SmithNormalForm(int_mat)
    snf.run()
    snf.U, snf.D, snf.V
    """
    def __init__(self, A):
        A = np.array(A, dtype=object)
        if A.ndim != 2:
            raise ValueError("Smith normal form needs a 2D matrix, got shape "
                             "{}".format(A.shape))
        A = np.array([[int(x) for x in row] for row in A],
                     dtype=object).reshape(A.shape)
        self._A_orig = A.copy()
        self._A = A.copy()
        m, n = A.shape
        self._U = _identity(m)
        self._V = _identity(n)
        self._done = False

    @property
    def U(self):
        return self._U

    @property
    def V(self):
        return self._V

    @property
    def D(self):
        return self._A

    @property
    def invariant_factors(self):
        """ The nonzero diagonal entries of D """
        k = min(self._A.shape)
        return [int(self._A[i, i]) for i in range(k) if self._A[i, i] != 0]

    @property
    def rank(self):
        return len(self.invariant_factors)

    def run(self):
        if self._done:
            return self
        A = self._A
        m, n = A.shape
        t = 0
        while t < min(m, n):
            pivot = self._smallest_entry(t)
            if pivot is None:
                break
            self._swap_rows(t, pivot[0])
            self._swap_cols(t, pivot[1])
            while not self._clear(t):
                pass
            if A[t, t] < 0:
                A[t, :] = -A[t, :]
                self._U[t, :] = -self._U[t, :]
            t += 1
        assert (np.dot(np.dot(self._U, self._A_orig), self._V) == A).all() \
            if m and n else True
        self._done = True
        return self

    def _smallest_entry(self, t):
        A = self._A
        best = None
        for i in range(t, A.shape[0]):
            for j in range(t, A.shape[1]):
                if A[i, j] != 0 and (best is None or
                                     abs(A[i, j]) < abs(A[best])):
                    best = (i, j)
        return best

    def _swap_rows(self, i, j):
        if i != j:
            self._A[[i, j], :] = self._A[[j, i], :]
            self._U[[i, j], :] = self._U[[j, i], :]

    def _swap_cols(self, i, j):
        if i != j:
            self._A[:, [i, j]] = self._A[:, [j, i]]
            self._V[:, [i, j]] = self._V[:, [j, i]]

    def _clear(self, t):
        """
        One sweep clearing row and column t. Returns True once the pivot
        divides the remaining block and its row and column are zero.
        """
        A = self._A
        m, n = A.shape
        for i in range(t + 1, m):
            q = A[i, t] // A[t, t]
            if q:
                A[i, :] = A[i, :] - q * A[t, :]
                self._U[i, :] = self._U[i, :] - q * self._U[t, :]
            if A[i, t] != 0:
                self._swap_rows(t, i)
                return False
        for j in range(t + 1, n):
            q = A[t, j] // A[t, t]
            if q:
                A[:, j] = A[:, j] - q * A[:, t]
                self._V[:, j] = self._V[:, j] - q * self._V[:, t]
            if A[t, j] != 0:
                self._swap_cols(t, j)
                return False
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i, j] % A[t, t] != 0:
                    A[t, :] = A[t, :] + A[i, :]
                    self._U[t, :] = self._U[t, :] + self._U[i, :]
                    return False
        return True


def _identity(n):
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def smith_normal_form(A):
    """
    Return (U, D, V) with U A V = D, see SmithNormalForm.

    Args:
        A: (array_like) Integer matrix

    Returns:
        U, D, V as numpy object arrays of Python integers
    """
    snf = SmithNormalForm(A).run()
    return snf.U, snf.D, snf.V


def integer_kernel(A):
    """
    Return a list of integer column vectors generating {v : A v = 0} over ZZ
    (the columns of V beyond the rank).
    """
    A = np.array(A, dtype=object)
    snf = SmithNormalForm(A).run()
    rank = snf.rank
    V = snf.V
    return [[int(x) for x in V[:, j]] for j in range(rank, V.shape[1])]
