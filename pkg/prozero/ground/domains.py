"""
Coefficient domains, polynomial ring descriptions and the module frames
in which vectors of polynomials are encoded as single polynomials.

A vector (p_0, ..., p_{g-1}) of the free module P^g is stored as the
polynomial e_0*p_0 + ... + e_{g-1}*p_{g-1} in P[_e0, ..., _e{g-1}], ordered
position-over-term so that _e0 is the largest position. Groebner bases of
submodules are then plain polynomial Groebner bases in that ring.
"""

import re
from functools import lru_cache

from sympy import isprime
from sympy.polys.domains import ZZ, QQ, GF
from sympy.polys.orderings import MonomialOrder, lex, grevlex
from sympy.polys.rings import PolyRing

from prozero.errors import UnsupportedDomainError

PRIME_FIELD = "prime_field"
RATIONALS = "rationals"
INTEGERS = "integers"
INTEGERS_MOD = "integers_mod"

_NAME_PATTERN = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_GF_PATTERN = re.compile(r"^GF\(\s*(\d+)\s*\)$")
_ZMOD_PATTERN = re.compile(r"^ZZ\s*/\s*\(?\s*(\d+)\s*\)?$")


class CoefficientDomain(object):
    """
    One of the supported coefficient domains F_p, QQ, ZZ and ZZ/m.

    ZZ/m is handled as ZZ with the constant m adjoined to every ideal, so
    that strong Groebner bases over ZZ decide membership over ZZ/m.
    """
    def __init__(self, kind, modulus=None):
        if kind == PRIME_FIELD:
            if modulus is None or not isprime(int(modulus)):
                raise UnsupportedDomainError(
                    "Prime field needs a prime modulus, got {}".format(modulus)
                )
        elif kind == INTEGERS_MOD:
            if modulus is None or int(modulus) < 2:
                raise UnsupportedDomainError(
                    "ZZ/m needs m >= 2, got {}".format(modulus)
                )
        elif kind in (RATIONALS, INTEGERS):
            modulus = None
        else:
            raise UnsupportedDomainError(
                "Unsupported coefficient domain '{}'".format(kind)
            )
        self._kind = kind
        self._modulus = int(modulus) if modulus is not None else None

    @classmethod
    def from_string(cls, text):
        """
        Parses 'QQ', 'ZZ', 'GF(p)' and 'ZZ/m' (also 'ZZ/(m)').
        """
        text = str(text).strip()
        if text == "QQ":
            return cls(RATIONALS)
        if text == "ZZ":
            return cls(INTEGERS)
        match = _GF_PATTERN.match(text)
        if match:
            return cls(PRIME_FIELD, int(match.group(1)))
        match = _ZMOD_PATTERN.match(text)
        if match:
            return cls(INTEGERS_MOD, int(match.group(1)))
        raise UnsupportedDomainError(
            "Cannot interpret '{}' as a coefficient domain".format(text)
        )

    def __str__(self):
        if self._kind == RATIONALS:
            return "QQ"
        if self._kind == INTEGERS:
            return "ZZ"
        if self._kind == PRIME_FIELD:
            return "GF({})".format(self._modulus)
        return "ZZ/{}".format(self._modulus)

    def __repr__(self):
        return "CoefficientDomain({})".format(str(self))

    def __eq__(self, other):
        return isinstance(other, CoefficientDomain) and \
            (self._kind, self._modulus) == (other._kind, other._modulus)

    def __hash__(self):
        return hash((self._kind, self._modulus))

    @property
    def kind(self):
        return self._kind

    @property
    def modulus(self):
        return self._modulus

    @property
    def is_field(self):
        return self._kind in (PRIME_FIELD, RATIONALS)

    @property
    def is_integral(self):
        """ True for ZZ and ZZ/m, the domains using strong Groebner bases """
        return not self.is_field

    @property
    def sympy_domain(self):
        if self._kind == PRIME_FIELD:
            return GF(self._modulus)
        if self._kind == RATIONALS:
            return QQ
        return ZZ

    @property
    def base_relations(self):
        """ Integer constants adjoined to every ideal (the m of ZZ/m) """
        return [self._modulus] if self._kind == INTEGERS_MOD else []


class BlockEliminationOrder(MonomialOrder):
    """
    Elimination order: grevlex on the first 'block' variables, ties broken
    by grevlex on the remaining ones. Any monomial involving the first block
    is larger than every monomial free of it.
    """
    alias = "elimination"
    is_global = True

    def __init__(self, block):
        self.block = int(block)

    def __call__(self, monomial):
        return (grevlex(monomial[:self.block]),
                grevlex(monomial[self.block:]))

    def __repr__(self):
        return "BlockEliminationOrder({})".format(self.block)

    def __eq__(self, other):
        return isinstance(other, BlockEliminationOrder) and \
            other.block == self.block

    def __hash__(self):
        return hash((self.__class__.__name__, self.block))


class PositionOverTerm(MonomialOrder):
    """
    Module order on P[_e0..] : compares the position exponents first (so
    _e0 is the largest position), then the base order on the rest.
    """
    alias = "pot"
    is_global = True

    def __init__(self, rank, base):
        self.rank = int(rank)
        self.base = base

    def __call__(self, monomial):
        return (monomial[:self.rank], self.base(monomial[self.rank:]))

    def __repr__(self):
        return "PositionOverTerm({}, {!r})".format(self.rank, self.base)

    def __eq__(self, other):
        return isinstance(other, PositionOverTerm) and \
            (other.rank, other.base) == (self.rank, self.base)

    def __hash__(self):
        return hash((self.__class__.__name__, self.rank, self.base))


def _validate_variables(variables):
    variables = tuple(str(v) for v in variables)
    if len(set(variables)) != len(variables):
        raise ValueError("Variable names must be distinct, "
                         "got {}".format(list(variables)))
    for name in variables:
        if not _NAME_PATTERN.match(name):
            raise ValueError("Invalid variable name '{}' (letters, digits "
                             "and '_', starting with a letter)".format(name))
    return variables


@lru_cache(maxsize=None)
def _poly_ring(names, domain, order):
    return PolyRing(names, domain, order)


class PolyRingSpec(object):
    """
    Coefficient domain, ordered variables and a monomial order. Hashable and
    immutable, so that rings and frames can be cached on it.
    """
    ORDERS = ("grevlex", "lex", "elimination")

    def __init__(self, coefficients, variables=(), monomial_order="grevlex",
                 elimination_block=None):
        if isinstance(coefficients, str):
            coefficients = CoefficientDomain.from_string(coefficients)
        if not isinstance(coefficients, CoefficientDomain):
            raise UnsupportedDomainError(
                "Expected a CoefficientDomain, got {!r}".format(coefficients)
            )
        if monomial_order not in self.ORDERS:
            raise ValueError("Monomial order must be one of {}, "
                             "got '{}'".format(self.ORDERS, monomial_order))
        self.coefficients = coefficients
        self.variables = _validate_variables(variables)
        self.monomial_order = monomial_order
        if monomial_order == "elimination":
            if elimination_block is None or \
                    not 0 <= int(elimination_block) <= len(self.variables):
                raise ValueError("Elimination order needs a block size in "
                                 "[0, {}]".format(len(self.variables)))
            elimination_block = int(elimination_block)
        else:
            elimination_block = None
        self.elimination_block = elimination_block

    def _key(self):
        return (self.coefficients, self.variables, self.monomial_order,
                self.elimination_block)

    def __eq__(self, other):
        return isinstance(other, PolyRingSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "PolyRingSpec({}[{}], {})".format(
            self.coefficients, ",".join(self.variables), self.monomial_order
        )

    @property
    def order(self):
        if self.monomial_order == "lex":
            return lex
        if self.monomial_order == "elimination":
            return BlockEliminationOrder(self.elimination_block)
        return grevlex

    @property
    def domain(self):
        return self.coefficients.sympy_domain

    @property
    def ngens(self):
        return len(self.variables)

    @property
    def ring(self):
        """ The sympy PolyRing described by these fields """
        return _poly_ring(self.variables, self.domain, self.order)

    def frame(self, rank):
        """ The ModuleFrame encoding vectors of length 'rank' """
        return _module_frame(self, int(rank))

    def with_variables(self, variables, monomial_order=None,
                       elimination_block=None):
        """ A spec over the same coefficients with other variables/order """
        order = monomial_order or self.monomial_order
        if order == "elimination" and elimination_block is None:
            elimination_block = self.elimination_block
        return PolyRingSpec(self.coefficients, variables, order,
                            elimination_block)

    def fresh_variable(self, stem="t"):
        """ A variable name not among self.variables """
        name, i = stem, 0
        while name in self.variables:
            i += 1
            name = "{}{}".format(stem, i)
        return name

    def monomial_degree(self, monomial):
        return sum(monomial)


class ModuleFrame(object):
    """
    The free module P^rank encoded inside P[_e0, ..., _e{rank-1}].
    """
    def __init__(self, spec, rank):
        if rank < 1:
            raise ValueError("A module frame needs rank >= 1, "
                             "got {}".format(rank))
        self.spec = spec
        self.rank = rank
        names = ["_e{}".format(i) for i in range(rank)] + list(spec.variables)
        self.ring = _poly_ring(tuple(names), spec.domain,
                               PositionOverTerm(rank, spec.order))
        self._units = [tuple(1 if j == i else 0 for j in range(rank))
                       for i in range(rank)]

    def __repr__(self):
        return "ModuleFrame({!r}, rank={})".format(self.spec, self.rank)

    def component(self, monomial):
        """ Position index of a frame monomial """
        return monomial[:self.rank].index(1)

    def base_monomial(self, monomial):
        return monomial[self.rank:]

    def base_degree(self, monomial):
        return sum(monomial[self.rank:])

    def embed(self, vector):
        """ Encodes a vector (sequence of base polynomials) as a frame poly """
        if len(vector) != self.rank:
            raise ValueError("Vector of length {} does not fit frame of "
                             "rank {}".format(len(vector), self.rank))
        poly = self.ring.zero
        for unit, entry in zip(self._units, vector):
            for monomial, coefficient in entry.items():
                poly[unit + monomial] = coefficient
        return poly

    def vector(self, poly):
        """ Decodes a frame polynomial into a list of base polynomials """
        base = self.spec.ring
        result = [base.zero for _ in range(self.rank)]
        for monomial, coefficient in poly.items():
            result[self.component(monomial)][monomial[self.rank:]] = coefficient
        return result

    def unit(self, i):
        poly = self.ring.zero
        poly[self._units[i] + self.spec.ring.zero_monom] = self.ring.domain.one
        return poly

    def max_base_degree(self, poly):
        if not poly:
            return 0
        return max(self.base_degree(m) for m in poly.itermonoms())


@lru_cache(maxsize=None)
def _module_frame(spec, rank):
    return ModuleFrame(spec, rank)
