"""
Buchberger's algorithm with the sugar selection strategy.

Over fields the bases are monic and reduced. Over the integers (and ZZ/m,
which enters as ZZ with the constant m among the generators) strong bases
are computed from S- and G-polynomials, and reduction leaves the residue of
a coefficient modulo the smallest dividing leading coefficient behind.

All functions work on polynomials of a ModuleFrame ring, so Groebner bases
of submodules of P^g are computed by the very same code as those of ideals.
"""

import heapq
import logging

try:
    from sympy import igcdex, ilcm
except ImportError:  # sympy >= 1.13 moved these out of the top-level namespace
    from sympy.core.intfunc import igcdex, ilcm

from prozero import defaults
from prozero.errors import DegreeCapExceeded

_LOGGER = logging.getLogger(__name__)


def normalize(f, field):
    """ Monic over fields, positive leading coefficient over the integers """
    if not f:
        return f
    if field:
        return f.monic()
    return -f if f.LC < 0 else f


def spoly(f, g, field):
    """ S-polynomial of f and g (both normalized) """
    R = f.ring
    lmf, lmg = f.LM, g.LM
    lcm = R.monomial_lcm(lmf, lmg)
    uf, ug = R.monomial_div(lcm, lmf), R.monomial_div(lcm, lmg)
    if field:
        return f.mul_monom(uf) - g.mul_monom(ug)
    a, b = int(f.LC), int(g.LC)
    lc = ilcm(a, b)
    K = R.domain
    return f.mul_term((uf, K(lc // a))) - g.mul_term((ug, K(lc // b)))


def gpoly(f, g):
    """ G-polynomial: leading coefficient gcd(lc(f), lc(g)) at lcm(LM) """
    R = f.ring
    K = R.domain
    lmf, lmg = f.LM, g.LM
    lcm = R.monomial_lcm(lmf, lmg)
    uf, ug = R.monomial_div(lcm, lmf), R.monomial_div(lcm, lmg)
    u, v, _ = igcdex(int(f.LC), int(g.LC))
    return f.mul_term((uf, K(u))) + g.mul_term((ug, K(v)))


def reduce(f, basis, field):
    """
    Return the full normal form of polynomial f modulo the polynomials in
    'basis'. The result is canonical when 'basis' is a reduced (strong)
    Groebner basis.
    """
    R = f.ring
    K = R.domain
    div = R.monomial_div
    leads = [(g.LM, g.LC, g) for g in basis]
    remainder = R.zero
    f = f.copy()
    while f:
        monom, coeff = f.LT
        if field:
            for lm, lc, g in leads:
                quotient = div(monom, lm)
                if quotient is not None:
                    f = f - g.mul_term((quotient, K.quo(coeff, lc)))
                    break
            else:
                remainder[monom] = coeff
                del f[monom]
            continue
        best = None
        for lm, lc, g in leads:
            quotient = div(monom, lm)
            if quotient is not None and (best is None or lc < best[1]):
                best = (quotient, lc, g)
        if best is not None:
            quotient, lc, g = best
            k = int(coeff) // int(lc)
            if k:
                f = f - g.mul_term((quotient, K(k)))
        rest = f.get(monom)
        if rest:
            remainder[monom] = rest
            del f[monom]
    return remainder


def _check_cap(frame, poly, cap):
    degree = frame.max_base_degree(poly)
    if degree > cap:
        raise DegreeCapExceeded(
            "Groebner basis computation reached degree {} (cap {})"
            "".format(degree, cap), degree=degree, cap=cap
        )


def minimalize(G, field):
    """ Drop every element whose leading term is divisible by another's """
    R = G[0].ring if G else None
    keep = []
    for i, g in enumerate(G):
        redundant = False
        for j, h in enumerate(G):
            if i == j or R.monomial_div(g.LM, h.LM) is None:
                continue
            if not field and int(g.LC) % int(h.LC):
                continue
            mutual = R.monomial_div(h.LM, g.LM) is not None and \
                (field or int(h.LC) % int(g.LC) == 0)
            if not mutual or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(g)
    return keep


def interreduce(G, field):
    """ Reduce the tails of a minimal basis against the other elements """
    reduced = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1:]
        head = g.ring.zero
        lm, lc = g.LT
        head[lm] = lc
        reduced.append(normalize(head + reduce(g - head, others, field), field))
    return reduced


def buchberger(frame, generators, field, degree_cap=None, logger=None):
    """
    Return the reduced (strong, when not over a field) Groebner basis of the
    polynomials 'generators' of the ring frame.ring, sorted increasingly by
    leading monomial.

    Args:
        frame:      (ModuleFrame) The frame the generators live in
        generators: (list)        Frame polynomials
        field:      (bool)        Whether the coefficients form a field
        degree_cap: (int)         Maximal base degree, defaults.DEGREE_CAP
                                  if None
        logger:     (Logger)      Optional logger
    """
    cap = defaults.DEGREE_CAP if degree_cap is None else int(degree_cap)
    logger = logger or _LOGGER
    R = frame.ring
    lcm, div, mul = R.monomial_lcm, R.monomial_div, R.monomial_mul
    product_criterion = field and frame.rank == 1

    G, sugars = [], []
    heap, live = [], set()

    def update(h, sugar):
        lmh = h.LM
        component = frame.component(lmh)
        k = len(G)
        if field:
            for (i, j) in list(live):
                L = lcm(G[i].LM, G[j].LM)
                if div(L, lmh) is not None and L != lcm(G[i].LM, lmh) \
                        and L != lcm(G[j].LM, lmh):
                    live.discard((i, j))
        for i, g in enumerate(G):
            lmg = g.LM
            if frame.component(lmg) != component:
                continue
            L = lcm(lmg, lmh)
            if product_criterion and L == mul(lmg, lmh):
                continue
            s = max(sugars[i] + frame.base_degree(div(L, lmg)),
                    sugar + frame.base_degree(div(L, lmh)))
            heapq.heappush(heap, (s, R.order(L), i, k))
            live.add((i, k))
        G.append(h)
        sugars.append(sugar)

    for f in generators:
        if not f:
            continue
        _check_cap(frame, f, cap)
        h = reduce(f, G, field)
        if h:
            update(normalize(h, field), frame.max_base_degree(f))

    while heap:
        sugar, _, i, j = heapq.heappop(heap)
        if (i, j) not in live:
            continue
        live.discard((i, j))
        candidates = [spoly(G[i], G[j], field)]
        if not field:
            a, b = int(G[i].LC), int(G[j].LC)
            if a % b and b % a:
                candidates.append(gpoly(G[i], G[j]))
        for candidate in candidates:
            _check_cap(frame, candidate, cap)
            h = reduce(candidate, G, field)
            if h:
                _check_cap(frame, h, cap)
                update(normalize(h, field), sugar)

    basis = interreduce(minimalize(G, field), field)
    logger.debug("Groebner basis with {} elements from {} generators in "
                 "{!r}".format(len(basis), len(generators), frame))
    return sorted(basis, key=lambda g: R.order(g.LM))


class GroebnerBasis(object):
    """
    The reduced (strong) Groebner basis of a submodule of a free module,
    stored in a ModuleFrame. Immutable once computed.
    """
    def __init__(self, frame, generators, degree_cap=None, logger=None):
        self.frame = frame
        self.field = frame.spec.coefficients.is_field
        self.polys = tuple(buchberger(frame, list(generators), self.field,
                                      degree_cap=degree_cap, logger=logger))

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __repr__(self):
        return "GroebnerBasis({} elements, {!r})".format(len(self),
                                                          self.frame)

    def reduce(self, poly):
        return reduce(poly, self.polys, self.field)

    def contains(self, poly):
        return not self.reduce(poly)

    def reduce_vector(self, vector):
        return self.frame.vector(self.reduce(self.frame.embed(vector)))

    def contains_vector(self, vector):
        return not self.reduce(self.frame.embed(vector))

    def vectors(self):
        return [self.frame.vector(g) for g in self.polys]


def groebner_basis(generators, spec, degree_cap=None):
    """
    Return the reduced (strong, when not over a field) Groebner basis of the
    ideal generated by 'generators' in the polynomial ring of 'spec'. Over
    ZZ/m the modulus is part of the ideal.

    Args:
        generators: (list)         Polynomials of spec.ring
        spec:       (PolyRingSpec) Polynomial ring of the entries

    Returns:
        list of polynomials of spec.ring
    """
    frame = spec.frame(1)
    ring = spec.ring
    polys = [frame.embed([ring(g)]) for g in generators]
    polys += [frame.embed([ring(m)]) for m in spec.coefficients.base_relations]
    basis = GroebnerBasis(frame, polys, degree_cap=degree_cap)
    return [frame.vector(g)[0] for g in basis]
