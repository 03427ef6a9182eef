"""
Finite sequences x_1, ..., x_r of ring elements.
"""

from prozero.ground import format_polynomial
from prozero.rings import Ideal


class SequenceSpec(object):
    """
    An ordered sequence x_1, ..., x_r (r >= 1) of elements of one
    RingPresentation, stored in normal form.
    """
    def __init__(self, ring, elements, name=None):
        """
        Args:
            ring:     (RingPresentation) The common ring
            elements: (list) Elements as strings, integers or polynomials
            name:     (str)  Optional name used in reports
        """
        elements = list(elements)
        if not elements:
            raise ValueError("A sequence needs at least one element")
        self.ring = ring
        self.elements = tuple(ring.element(e) for e in elements)
        self.name = name

    def __repr__(self):
        return "SequenceSpec({})".format(", ".join(self.to_strings()))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return isinstance(other, SequenceSpec) and \
            self.ring == other.ring and self.elements == other.elements

    def __hash__(self):
        return hash((self.ring, self.elements))

    @property
    def length(self):
        return len(self.elements)

    def power(self, element, n):
        """ x^n in R; x^0 = 1 also for x = 0 """
        if n == 0:
            return self.ring.one
        return self.ring.reduce(element ** int(n))

    def powers(self, n, i=None):
        """ x_1^n, ..., x_i^n (all r elements if i is None) """
        i = self.length if i is None else int(i)
        return [self.power(x, n) for x in self.elements[:i]]

    def prefix(self, i):
        """ The subsequence x_1, ..., x_i, 1 <= i <= r """
        if not 1 <= i <= self.length:
            raise ValueError("Prefix length must be in [1, {}], got "
                             "{}".format(self.length, i))
        return SequenceSpec(self.ring, self.elements[:i], name=self.name)

    def ideal(self, n=1, i=None):
        """ (x_1^n, ..., x_i^n); the zero ideal for i = 0 """
        return Ideal(self.ring, self.powers(n, i))

    def permuted(self, permutation):
        """ The sequence x_{p(1)}, ..., x_{p(r)} for a permutation of 0..r-1 """
        if sorted(permutation) != list(range(self.length)):
            raise ValueError("{} is not a permutation of 0..{}".format(
                permutation, self.length - 1
            ))
        return SequenceSpec(self.ring, [self.elements[p] for p in permutation],
                            name=self.name)

    def to_strings(self):
        return [format_polynomial(x) for x in self.elements]
