"""
Koszul chain and cochain complexes K(x_1^n, ..., x_r^n; M) of a finitely
presented module M.

The k-th module is M^binom(r, k) with one copy of M for every k-subset S of
{0, ..., r-1}; subsets are ordered lexicographically and the copies laid out
in that order, g coordinates each. The chain differential is

    d(e_S) = sum_pos (-1)^pos x_{s_pos}^n e_{S - s_pos}

and the cochain differential

    delta(e_S) = sum_{j not in S} (-1)^#{s in S: s < j} x_j^n e_{S + j}
"""

import threading
from itertools import combinations

from prozero.errors import BadLevelsError, DegreeOutOfRangeError
from prozero.ground import ExactMatrix
from prozero.modules import FpModule, ModuleMap, homology_at


def exterior_subsets(r):
    """ Lists of the k-subsets of range(r) in lexicographic order, k=0..r """
    return [list(combinations(range(r), k)) for k in range(r + 1)]


def scalar_blocks(ring, row_count, column_count, g, entries):
    """
    The (row_count*g) x (column_count*g) matrix with the block (a, b) equal
    to c * I_g for every ((a, b), c) in 'entries' and zero elsewhere.
    """
    zero = ring.ring.zero
    rows = [[zero] * (column_count * g) for _ in range(row_count * g)]
    for (a, b), c in entries.items():
        for t in range(g):
            rows[a * g + t][b * g + t] = c
    return ExactMatrix(ring.spec, rows, shape=(row_count * g,
                                               column_count * g))


def comparison_matrix(sequence, degree, generators, shift):
    """
    Block diagonal matrix multiplying the copy e_S of degree 'degree' by
    prod_{s in S} x_s^shift. It induces the Koszul comparison maps in both
    directions: H_i(x^(n+shift)) -> H_i(x^(n)) on chains and
    H^i(x^(n)) -> H^i(x^(n+shift)) on cochains.
    """
    ring = sequence.ring
    subsets = exterior_subsets(sequence.length)[degree]
    entries = {}
    for b, S in enumerate(subsets):
        c = ring.one
        for s in S:
            c = c * sequence.power(sequence.elements[s], shift)
        entries[(b, b)] = ring.reduce(c)
    return scalar_blocks(ring, len(subsets), len(subsets), generators,
                         entries)


def _composite(first, second):
    """ Matrix of the composite: first, then second """
    return second.matrix @ first.matrix


class _KoszulComplex(object):
    """ Shared layout and caching of the chain and cochain complexes """
    def __init__(self, sequence, exponent, module):
        exponent = int(exponent)
        if exponent < 1:
            raise BadLevelsError("Koszul levels start at exponent 1, got "
                                 "{}".format(exponent))
        if module.ring != sequence.ring:
            raise ValueError("Sequence and module live over different rings")
        self.sequence = sequence
        self.exponent = exponent
        self.module = module
        self.length = sequence.length
        self.subsets = exterior_subsets(self.length)
        self._index = [{S: b for b, S in enumerate(level)}
                       for level in self.subsets]
        self.chain_modules = [
            module.direct_sum(*([module] * (len(level) - 1)))
            for level in self.subsets
        ]
        self.zero_module = FpModule.zero(module.ring)
        self._maps = self._build_maps()
        self._homology = {}
        self._lock = threading.RLock()

    def _build_maps(self):
        raise NotImplementedError

    def _check_degree(self, i):
        if not 0 <= i <= self.length:
            raise DegreeOutOfRangeError(
                "Degree {} outside 0..{}".format(i, self.length), degree=i
            )

    def ambient_rank(self, k):
        return self.chain_modules[k].generators

    def _power(self, s):
        return self.sequence.power(self.sequence.elements[s], self.exponent)

    def _map(self, source, target, entries):
        matrix = scalar_blocks(self.module.ring, len(self.subsets[target]),
                               len(self.subsets[source]),
                               self.module.generators, entries)
        return ModuleMap(self.chain_modules[source],
                         self.chain_modules[target], matrix, verify=False)

    def is_complex(self):
        """ True iff consecutive differentials compose to the zero matrix """
        return all(_composite(first, second).is_zero()
                   for first, second in self._consecutive())

    def _consecutive(self):
        raise NotImplementedError


class KoszulLevel(_KoszulComplex):
    """
    The chain complex 0 -> C_r -> ... -> C_1 -> C_0 -> 0 with
    C_k = M^binom(r, k).
    """
    def __repr__(self):
        return "KoszulLevel(r={}, n={})".format(self.length, self.exponent)

    def _build_maps(self):
        maps = []
        for k in range(1, self.length + 1):
            entries = {}
            for b, S in enumerate(self.subsets[k]):
                for pos, s in enumerate(S):
                    a = self._index[k - 1][S[:pos] + S[pos + 1:]]
                    c = self._power(s)
                    entries[(a, b)] = c if pos % 2 == 0 else -c
            maps.append(self._map(k, k - 1, entries))
        return maps

    def _consecutive(self):
        # d_{k+1} is followed by d_k
        return [(self._maps[k], self._maps[k - 1])
                for k in range(1, len(self._maps))]

    def differential(self, k):
        """
        d_k: C_k -> C_{k-1} for 0 <= k <= r+1; the two outermost maps are
        the zero maps C_0 -> 0 and 0 -> C_r.
        """
        if k == 0:
            return ModuleMap.zero(self.chain_modules[0], self.zero_module)
        if k == self.length + 1:
            return ModuleMap.zero(self.zero_module,
                                  self.chain_modules[self.length])
        return self._maps[k - 1]

    def homology(self, i):
        """ H_i as a Subquotient of the ambient free module of C_i """
        self._check_degree(i)
        with self._lock:
            if i not in self._homology:
                self._homology[i] = homology_at(self.differential(i + 1),
                                                self.differential(i))
            return self._homology[i]


class KoszulCoLevel(_KoszulComplex):
    """
    The cochain complex 0 -> C^0 -> C^1 -> ... -> C^r -> 0 with
    C^k = M^binom(r, k).
    """
    def __repr__(self):
        return "KoszulCoLevel(r={}, n={})".format(self.length, self.exponent)

    def _build_maps(self):
        maps = []
        for k in range(self.length):
            entries = {}
            for b, S in enumerate(self.subsets[k]):
                for j in range(self.length):
                    if j in S:
                        continue
                    T = tuple(sorted(S + (j,)))
                    c = self._power(j)
                    below = sum(1 for s in S if s < j)
                    entries[(self._index[k + 1][T], b)] = \
                        c if below % 2 == 0 else -c
            maps.append(self._map(k, k + 1, entries))
        return maps

    def _consecutive(self):
        return list(zip(self._maps, self._maps[1:]))

    def codifferential(self, k):
        """
        delta^k: C^k -> C^{k+1} for -1 <= k <= r; the outermost maps are
        0 -> C^0 and C^r -> 0.
        """
        if k == -1:
            return ModuleMap.zero(self.zero_module, self.chain_modules[0])
        if k == self.length:
            return ModuleMap.zero(self.chain_modules[self.length],
                                  self.zero_module)
        return self._maps[k]

    def cohomology(self, i):
        """ H^i as a Subquotient of the ambient free module of C^i """
        self._check_degree(i)
        with self._lock:
            if i not in self._homology:
                self._homology[i] = homology_at(self.codifferential(i - 1),
                                                self.codifferential(i))
            return self._homology[i]
