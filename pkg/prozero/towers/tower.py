"""
Rule-generated inverse, direct and bi-indexed systems of finitely presented
modules, materialized on a finite window of levels 1..W.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor

from prozero import defaults
from prozero.errors import BadLevelsError, TowerConstructionError
from prozero.ground import INTEGERS
from prozero.modules import FpModule, ModuleMap, Subquotient
from prozero.utils import window_or_default, check_window

_LOGGER = logging.getLogger(__name__)

SURJECTIVE_BY_CONSTRUCTION = "SURJECTIVE_BY_CONSTRUCTION"
FINITE_LENGTH_LEVELS = "FINITE_LENGTH_LEVELS"
EVENTUALLY_CONSTANT_BY_CONSTRUCTION = "EVENTUALLY_CONSTANT_BY_CONSTRUCTION"
DIVISIBILITY_BY_CONSTRUCTION = "DIVISIBILITY_BY_CONSTRUCTION"
TORSION_CHAIN_BY_CONSTRUCTION = "TORSION_CHAIN_BY_CONSTRUCTION"
TAGS = (SURJECTIVE_BY_CONSTRUCTION, FINITE_LENGTH_LEVELS,
        EVENTUALLY_CONSTANT_BY_CONSTRUCTION, DIVISIBILITY_BY_CONSTRUCTION,
        TORSION_CHAIN_BY_CONSTRUCTION)


def run_parallel(func, items, jobs):
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(i) for i in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items))


class _Tower(object):
    """
    Shared machinery of InverseTower and DirectTower: level materialization
    (optionally in a thread pool), composite transitions and tags.
    """
    direction = None

    def __init__(self, module_rule=None, step_rule=None, window=None, tags=(),
                 stable_from=None, name=None, subquotient_rule=None,
                 ambient_rule=None, transition_rule=None, jobs=None,
                 logger=None):
        if subquotient_rule is None and (module_rule is None or
                                         step_rule is None):
            raise TowerConstructionError("A tower needs either module and "
                                         "step rules or a subquotient rule "
                                         "with an ambient rule")
        if subquotient_rule is not None and module_rule is None and \
                ambient_rule is None:
            raise TowerConstructionError("A subquotient rule needs an ambient "
                                         "rule for the transition maps")
        self.window = check_window(window_or_default(window), 2)
        for tag in tags:
            if tag not in TAGS:
                raise TowerConstructionError("Unknown tag '{}'".format(tag),
                                             tag=tag)
        self.tags = tuple(sorted(set(tags)))
        if EVENTUALLY_CONSTANT_BY_CONSTRUCTION in self.tags and \
                stable_from is None:
            raise TowerConstructionError(
                "Tag {} needs the level 'stable_from'".format(
                    EVENTUALLY_CONSTANT_BY_CONSTRUCTION
                ), tag=EVENTUALLY_CONSTANT_BY_CONSTRUCTION
            )
        self.stable_from = int(stable_from) if stable_from is not None \
            else None
        self.name = name or self.__class__.__name__
        self.jobs = int(jobs or defaults.JOBS)
        self.logger = logger or _LOGGER
        self._module_rule = module_rule
        self._step_rule = step_rule
        self._subquotient_rule = subquotient_rule
        self._ambient_rule = ambient_rule
        self._transition_rule = transition_rule
        self._subquotients = None
        self._modules = None
        self._steps = None
        self._transitions = {}
        self._tag_results = {}
        self._lock = threading.RLock()

    def __repr__(self):
        return "{}('{}', window={}, tags={})".format(
            self.__class__.__name__, self.name, self.window, list(self.tags)
        )

    @property
    def levels(self):
        return range(1, self.window + 1)

    def _induced_step(self, n):
        raise NotImplementedError

    def materialize(self):
        """
        Computes all levels and one-step maps of the window and verifies the
        structural tags. Raises TowerConstructionError on a failing tag.
        """
        with self._lock:
            if self._modules is not None:
                return self
            self.logger.debug("[*] Materializing {!r}".format(self))
            if self._subquotient_rule is not None:
                self._subquotients = run_parallel(self._subquotient_rule,
                                                   self.levels, self.jobs)
            if self._module_rule is not None:
                modules = run_parallel(self._module_rule, self.levels,
                                        self.jobs)
            else:
                modules = [s.module for s in self._subquotients]
            step_rule = self._step_rule or self._induced_step
            steps = run_parallel(step_rule, range(1, self.window), self.jobs)
            self._modules, self._steps = modules, steps
            for tag in self.tags:
                if not self.check_tag(tag):
                    raise TowerConstructionError(
                        "Tag {} fails on the materialized levels of "
                        "{!r}".format(tag, self), tag=tag
                    )
            return self

    def _check_level(self, n):
        if not 1 <= n <= self.window:
            raise BadLevelsError("Level {} outside the window 1..{}".format(
                n, self.window
            ))

    def module(self, n):
        self.materialize()
        self._check_level(n)
        return self._modules[n - 1]

    def step(self, n):
        """ The one-step map between levels n and n+1 """
        self.materialize()
        if not 1 <= n < self.window:
            raise BadLevelsError("No step map at level {} in window "
                                 "{}".format(n, self.window))
        return self._steps[n - 1]

    def subquotient(self, n):
        """ Level n as a subquotient of its ambient free module """
        self.materialize()
        self._check_level(n)
        if self._subquotients is not None:
            return self._subquotients[n - 1]
        return Subquotient.whole(self._modules[n - 1])

    def check_tag(self, tag):
        """ Verifies one structural tag on the materialized window """
        self.materialize()
        with self._lock:
            if tag not in self._tag_results:
                self._tag_results[tag] = self._verify_tag(tag)
            return self._tag_results[tag]

    def _verify_tag(self, tag):
        steps = self._steps
        if tag == SURJECTIVE_BY_CONSTRUCTION:
            return all(s.is_surjective() for s in steps)
        if tag == FINITE_LENGTH_LEVELS:
            return all(m.is_finite_length() for m in self._modules)
        if tag == EVENTUALLY_CONSTANT_BY_CONSTRUCTION:
            if self.stable_from is None or not \
                    1 <= self.stable_from <= self.window:
                return False
            return all(s.is_isomorphism()
                       for s in steps[self.stable_from - 1:])
        if tag == DIVISIBILITY_BY_CONSTRUCTION:
            for m in self._modules:
                spec = m.ring.spec
                if spec.coefficients.kind != INTEGERS or spec.ngens or \
                        m.relations.cols or m.ring.is_zero_ring():
                    return False
            return all(s.is_injective() for s in steps)
        if tag == TORSION_CHAIN_BY_CONSTRUCTION:
            return self._verify_torsion_chain()
        return False

    def _verify_torsion_chain(self):
        """
        Levels 0 :_N c^n of one module N with multiplication by a fixed c:
        every ambient step is the scalar matrix c, the levels increase inside
        a common ambient and c^n kills level n.
        """
        if self.direction != "inverse" or self._subquotients is None or \
                self._ambient_rule is None:
            return False
        scalar = None
        for n in range(1, self.window):
            matrix = self._ambient_rule(n)
            rank = self._subquotients[n - 1].rank
            if matrix.shape != (rank, rank):
                return False
            for i in range(rank):
                for j in range(rank):
                    entry = matrix[i, j]
                    if i != j:
                        if entry:
                            return False
                    elif scalar is None:
                        scalar = entry
                    elif entry != scalar:
                        return False
        subs = self._subquotients
        for n, sub in enumerate(subs, 1):
            if n < len(subs) and not (
                    sub.is_subset(subs[n]) and
                    all(sub.in_relations(v) for v in subs[n].relations)):
                return False
            if scalar is not None and not all(
                    sub.in_relations([scalar ** n * a for a in u])
                    for u in sub.generators):
                return False
        return True

    def stationary_level(self):
        """
        On a verified torsion chain, the first s >= 0 with level s equal to
        level s+1 (level 0 being the zero module), or None.
        """
        if not self.has_verified_tag(TORSION_CHAIN_BY_CONSTRUCTION):
            return None
        if self.subquotient(1).is_zero():
            return 0
        return next((s for s in range(1, self.window)
                     if self.subquotient(s).equals(self.subquotient(s + 1))),
                    None)

    def has_verified_tag(self, tag):
        return tag in self.tags and self.check_tag(tag)

    def to_dict(self):
        return {"name": self.name, "window": self.window,
                "tags": list(self.tags),
                "levels": [m.describe() for m in self._modules or []]}


class InverseTower(_Tower):
    """
    An inverse system {M_n, phi_{n,m}: M_m -> M_n} on the levels 1..W.

    The system is given by rules: either 'module_rule(n)' and
    'step_rule(n)' (the map M_{n+1} -> M_n), or 'subquotient_rule(n)' (a
    Subquotient) and 'ambient_rule(n)' (an ExactMatrix inducing the map
    M_{n+1} -> M_n on ambient free modules). Composites phi_{n,m} are built
    from the one-step maps, so the transitions are coherent by construction;
    an optional 'transition_rule(m, n)' giving independently constructed
    transitions can be compared against them with 'verify_coherence'.
    """
    direction = "inverse"

    @classmethod
    def from_subquotients(cls, subquotient_rule, ambient_rule, **kwargs):
        return cls(subquotient_rule=subquotient_rule,
                   ambient_rule=ambient_rule, **kwargs)

    def _induced_step(self, n):
        source = self._subquotients[n]
        target = self._subquotients[n - 1]
        return source.induced_map(target, self._ambient_rule(n))

    def transition(self, m, n):
        """
        phi_{n,m}: M_m -> M_n for n <= m (identity when m == n).

        Raises:
            BadLevelsError if m < n or a level is outside the window
        """
        self.materialize()
        if m < n:
            raise BadLevelsError("Inverse transitions need m >= n, got "
                                 "m={}, n={}".format(m, n))
        self._check_level(n)
        self._check_level(m)
        with self._lock:
            if (m, n) in self._transitions:
                return self._transitions[(m, n)]
        if m == n:
            out = ModuleMap.identity(self.module(n))
        else:
            out = self.transition(m - 1, n).compose(self.step(m - 1))
        with self._lock:
            self._transitions[(m, n)] = out
        return out

    def image(self, n, m):
        """ Im(phi_{n,m}) as a subquotient of the free module over M_n """
        return self.transition(m, n).image()

    def image_component(self, n, m):
        """
        Lowest (1-based) coordinate of the ambient free module of level n in
        which Im(phi_{n,m}) is nonzero modulo the level relations, or None
        when the image is zero.
        """
        sub = self.subquotient(n)
        if sub.rank == 0:
            return None
        lowest = None
        for column in self.transition(m, n).matrix.columns():
            vector = sub.ambient_vector(column)
            normal = sub.relation_basis.reduce_vector(vector)
            for index, entry in enumerate(normal):
                if entry:
                    if lowest is None or index < lowest:
                        lowest = index
                    break
        return None if lowest is None else lowest + 1

    def verify_coherence(self):
        """
        Compares the independently constructed transitions (transition_rule)
        with the composites of one-step maps for all n <= m <= W. Returns the
        list of failing (m, n) pairs.
        """
        if self._transition_rule is None:
            return []
        failing = []
        for m in self.levels:
            for n in range(1, m + 1):
                if not self._transition_rule(m, n).equals(
                        self.transition(m, n)):
                    failing.append((m, n))
        return failing


class DirectTower(_Tower):
    """
    A direct system {D_n, psi_{m,n}: D_n -> D_m} on the levels 1..W. The
    one-step maps go D_n -> D_{n+1}; with a subquotient rule, ambient_rule(n)
    induces that map.
    """
    direction = "direct"

    @classmethod
    def from_subquotients(cls, subquotient_rule, ambient_rule, **kwargs):
        return cls(subquotient_rule=subquotient_rule,
                   ambient_rule=ambient_rule, **kwargs)

    def _induced_step(self, n):
        source = self._subquotients[n - 1]
        target = self._subquotients[n]
        return source.induced_map(target, self._ambient_rule(n))

    def transition(self, n, m):
        """ psi_{m,n}: D_n -> D_m for n <= m """
        self.materialize()
        if m < n:
            raise BadLevelsError("Direct transitions need m >= n, got "
                                 "n={}, m={}".format(n, m))
        self._check_level(n)
        self._check_level(m)
        with self._lock:
            if (n, m) in self._transitions:
                return self._transitions[(n, m)]
        if m == n:
            out = ModuleMap.identity(self.module(n))
        else:
            out = self.step(m - 1).compose(self.transition(n, m - 1))
        with self._lock:
            self._transitions[(n, m)] = out
        return out


class BiTower(object):
    """
    A bi-indexed inverse system B(n, m), 1 <= n, m <= W, with horizontal
    maps B(n+1, m) -> B(n, m) and vertical maps B(n, m+1) -> B(n, m), given
    by a subquotient cell rule and ambient matrices inducing the maps.
    """
    def __init__(self, cell_rule, horizontal_rule, vertical_rule, window=None,
                 name=None, jobs=None, logger=None):
        """
        Args:
            cell_rule:       (callable) (n, m) -> Subquotient
            horizontal_rule: (callable) (n, m) -> ExactMatrix inducing
                                        B(n+1, m) -> B(n, m)
            vertical_rule:   (callable) (n, m) -> ExactMatrix inducing
                                        B(n, m+1) -> B(n, m)
            window:          (int) Window W on both indices
        """
        self.window = check_window(window_or_default(window), 2)
        self.name = name or "BiTower"
        self.jobs = int(jobs or defaults.JOBS)
        self.logger = logger or _LOGGER
        self._cell_rule = cell_rule
        self._horizontal_rule = horizontal_rule
        self._vertical_rule = vertical_rule
        self._cells = None
        self._horizontal = {}
        self._vertical = {}
        self._lock = threading.RLock()

    def __repr__(self):
        return "BiTower('{}', window={})".format(self.name, self.window)

    def materialize(self):
        with self._lock:
            if self._cells is not None:
                return self
            self.logger.debug("[*] Materializing {!r}".format(self))
            W = self.window
            keys = [(n, m) for n in range(1, W + 1) for m in range(1, W + 1)]
            cells = run_parallel(lambda k: self._cell_rule(*k), keys,
                                  self.jobs)
            self._cells = dict(zip(keys, cells))
            horizontal = [(n, m) for n in range(1, W) for m in range(1, W + 1)]
            maps = run_parallel(lambda k: self._cells[(k[0] + 1, k[1])]
                                 .induced_map(self._cells[k],
                                              self._horizontal_rule(*k)),
                                 horizontal, self.jobs)
            self._horizontal = dict(zip(horizontal, maps))
            vertical = [(n, m) for n in range(1, W + 1) for m in range(1, W)]
            maps = run_parallel(lambda k: self._cells[(k[0], k[1] + 1)]
                                 .induced_map(self._cells[k],
                                              self._vertical_rule(*k)),
                                 vertical, self.jobs)
            self._vertical = dict(zip(vertical, maps))
            return self

    def cell(self, n, m):
        self.materialize()
        return self._cells[(n, m)]

    def horizontal(self, n, m):
        """ B(n+1, m) -> B(n, m) """
        self.materialize()
        return self._horizontal[(n, m)]

    def vertical(self, n, m):
        """ B(n, m+1) -> B(n, m) """
        self.materialize()
        return self._vertical[(n, m)]

    def transition(self, n2, m2, n, m):
        """ The map B(n2, m2) -> B(n, m), n <= n2, m <= m2 """
        if n2 < n or m2 < m:
            raise BadLevelsError("Cell ({}, {}) does not map to ({}, {})"
                                 "".format(n2, m2, n, m))
        out = ModuleMap.identity(self.cell(n2, m2).module)
        for k in range(m2 - 1, m - 1, -1):
            out = self.vertical(n2, k).compose(out)
        for k in range(n2 - 1, n - 1, -1):
            out = self.horizontal(k, m).compose(out)
        return out

    def verify_squares(self):
        """ Returns the list of cells (n, m) whose square fails to commute """
        W = self.window
        failing = []
        for n in range(1, W):
            for m in range(1, W):
                first = self.horizontal(n, m).compose(self.vertical(n + 1, m))
                second = self.vertical(n, m).compose(self.horizontal(n, m + 1))
                if not first.equals(second):
                    failing.append((n, m))
        return failing

    def diagonal(self, logger=None):
        return diagonal_tower(self, logger=logger)

    def row(self, n, tags=(), stable_from=None, name=None, logger=None):
        """
        The inverse system {B(n, m)}_m at a fixed n, with the vertical maps
        B(n, m+1) -> B(n, m).
        """
        self._check_index(n)
        return InverseTower(
            module_rule=lambda m: self.cell(n, m).module,
            step_rule=lambda m: self.vertical(n, m),
            subquotient_rule=lambda m: self.cell(n, m),
            window=self.window, tags=tags, stable_from=stable_from,
            name=name or "row {} of {}".format(n, self.name),
            jobs=self.jobs, logger=logger or self.logger
        )

    def _check_index(self, n):
        if not 1 <= n <= self.window:
            raise BadLevelsError("Index {} outside the window 1..{}".format(
                n, self.window
            ))


def diagonal_tower(bitower, logger=None):
    """
    The diagonal inverse system D_n = B(n, n), with D_{n+1} -> D_n the
    composite B(n+1, n+1) -> B(n+1, n) -> B(n, n).
    """
    bitower.materialize()
    return InverseTower(
        module_rule=lambda n: bitower.cell(n, n).module,
        step_rule=lambda n: bitower.horizontal(n, n).compose(
            bitower.vertical(n + 1, n)
        ),
        subquotient_rule=lambda n: bitower.cell(n, n),
        window=bitower.window,
        name="diagonal of {}".format(bitower.name),
        jobs=bitower.jobs,
        logger=logger or bitower.logger
    )


def explicit_tower(ring, levels, maps, window=None, tags=(), stable_from=None,
                   name=None, logger=None):
    """
    An InverseTower from explicit data. Level n is FpModule(ring, *levels[n])
    and the map M_{n+1} -> M_n has the matrix maps[n] (0-based lists). When
    the window exceeds the data, the last level and the last map repeat.

    Args:
        ring:   (RingPresentation) Common ring of all levels
        levels: (list) Pairs (generators, relation ExactMatrix or columns)
        maps:   (list) ExactMatrix or rows of elements, one per step
        window: (int) Window W
        tags:   (list) Structural tags, verified on materialization
    """
    if not levels:
        raise TowerConstructionError("An explicit tower needs at least one "
                                     "level")
    window = window_or_default(window)
    if len(levels) > 1 and len(maps) < len(levels) - 1:
        raise TowerConstructionError("{} levels need at least {} step maps, "
                                     "got {}".format(len(levels),
                                                     len(levels) - 1,
                                                     len(maps)))
    if len(levels) < window and not maps:
        raise TowerConstructionError("Repeating the last level needs a step "
                                     "map")
    modules = [FpModule(ring, g, relations) for g, relations in levels]

    def module_rule(n):
        return modules[min(n, len(modules)) - 1]

    def step_rule(n):
        matrix = maps[min(n, len(maps)) - 1]
        return ModuleMap(module_rule(n + 1), module_rule(n), matrix)

    return InverseTower(module_rule=module_rule, step_rule=step_rule,
                        window=window, tags=tags, stable_from=stable_from,
                        name=name or "explicit", logger=logger)
