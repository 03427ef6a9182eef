"""
Subject resolution: every replayable check names the object it runs against
by a key ("tower", "colon:2", "chart:0", ...). The resolvers built here
recreate those objects from a problem file, so that a report can be
re-verified without rerunning the decision procedures.
"""

import re

from prozero.completion import (Filtration, filtration_tower, adic_tower,
                                composite_bitower, row_tower, level_pair,
                                level_towers)
from prozero.koszul import KoszulSystem, SequenceSpec
from prozero.modules import FpModule
from prozero.regularity import colon_tower, torsion_instance, permutation_pair
from prozero.cartier import (pair_tower, koszul_pair_tower, chart_quotient,
                             chart_pair)
from prozero.towers import explicit_tower


class SubjectResolver(object):
    """
    Callable mapping subject keys to objects. Keys are registered either
    exactly or as regular expressions whose groups are passed (as ints where
    they are digits) to the factory. Objects are created once per key.
    """
    def __init__(self):
        self._exact = {}
        self._patterns = []
        self._cache = {}

    def add(self, key, factory):
        self._exact[key] = factory
        return self

    def add_pattern(self, pattern, factory):
        self._patterns.append((re.compile(pattern), factory))
        return self

    def keys(self):
        return sorted(self._exact)

    def __call__(self, key):
        if key in self._cache:
            return self._cache[key]
        if key in self._exact:
            value = self._exact[key]()
        else:
            for pattern, factory in self._patterns:
                match = pattern.fullmatch(key)
                if match:
                    groups = [int(g) if g.isdigit() else g
                              for g in match.groups()]
                    value = factory(*groups)
                    break
            else:
                raise KeyError("Unknown subject '{}'".format(key))
        self._cache[key] = value
        return value


def build_tower(problem, name, window, jobs=None, logger=None):
    """
    Creates the tower defined under 'towers.<name>' with the given window.
    """
    entry = problem.tower_definition(name)
    kind = entry["kind"]
    if kind == "explicit":
        ring = problem.get("rings", entry["ring"])
        levels = []
        for level in entry["levels"]:
            if isinstance(level, str):
                module = problem.get("modules", level)
                levels.append((module.generators, module.relations))
            else:
                levels.append((level["generators"],
                               level.get("relations", [])))
        maps = [problem.get("maps", m).matrix if isinstance(m, str) else m
                for m in entry.get("maps", [])]
        return explicit_tower(ring, levels, maps, window=window,
                              tags=entry.get("tags", ()),
                              stable_from=entry.get("stable_from"),
                              name=name, logger=logger)
    if kind == "filtration":
        filtration = problem.get("filtrations", entry["filtration"])
        return filtration_tower(filtration.module, filtration, window=window,
                                jobs=jobs, logger=logger)
    module = problem.get("modules", entry["module"])
    sequence = problem.get("sequences", entry["sequence"])
    if kind == "adic":
        return adic_tower(module, sequence, window=window, jobs=jobs,
                          logger=logger)
    if kind == "colon":
        return colon_tower(sequence, entry["index"], module, window=window,
                           jobs=jobs, logger=logger)
    system = KoszulSystem(sequence, module, logger=logger)
    if kind == "cokoszul":
        return system.cotower(entry["degree"], window=window, name=name,
                              jobs=jobs)
    return system.tower(entry["degree"], window=window, name=name, jobs=jobs)


def add_instance_subjects(resolver, sequence, module, window, prefix=""):
    """
    Subjects of the sequence predicates on (x, M): the instance itself, the
    colon and Koszul towers, the bounded-torsion quotients of the audit and
    the permutation pairs.
    """
    system = KoszulSystem(sequence, module)
    ring = sequence.ring

    def torsion(i, m):
        x, quotient = torsion_instance(sequence, module, i, m)
        return SequenceSpec(ring, [x]), quotient

    def permutation(key, i):
        p = [int(v) for v in key.split("-")]
        first, second = permutation_pair(sequence, module, p, i)
        return first.module, second.module

    resolver.add(prefix + "instance", lambda: (sequence, module))
    resolver.add_pattern(re.escape(prefix) + r"colon:(\d+)",
                         lambda i: colon_tower(sequence, i, module, window))
    resolver.add_pattern(re.escape(prefix) + r"koszul:(\d+)",
                         lambda i: system.tower(i, window=window))
    resolver.add_pattern(re.escape(prefix) + r"cokoszul:(\d+)",
                         lambda i: system.cotower(i, window=window))
    resolver.add_pattern(re.escape(prefix) + r"torsion:(\d+):(\d+)",
                         torsion)
    resolver.add_pattern(re.escape(prefix) + r"torsion_colon:(\d+):(\d+)",
                         lambda i, m: _torsion_colon(torsion(i, m), window))
    resolver.add_pattern(re.escape(prefix) + r"permutation:([\d-]+):(\d+)",
                         permutation)
    return resolver


def _torsion_colon(instance, window):
    sequence, module = instance
    return colon_tower(sequence, 1, module, window)


def add_torsion_subjects(resolver, module, x, window, subject="instance",
                         tower_subject="colon:1"):
    """ Subjects of a bounded-torsion certificate for x on M """
    sequence = SequenceSpec(module.ring, [x])
    resolver.add(subject, lambda: (sequence, module))
    resolver.add(tower_subject,
                 lambda: colon_tower(sequence, 1, module, window))
    return resolver


def add_composite_subjects(resolver, module, filtration, sequence, window):
    """ Subjects of the composite-completion check """
    def bitower():
        return composite_bitower(module, filtration, sequence, window=window)

    resolver.add("bitower", bitower)
    resolver.add("diagonal", lambda: resolver("bitower").diagonal())
    resolver.add_pattern(r"row:(\d+)", lambda n: row_tower(
        resolver("bitower"), filtration, n))
    resolver.add("levels", lambda: level_towers(module, filtration, sequence,
                                                window=window))
    resolver.add_pattern(r"levels:(\d+)", lambda n: level_pair(
        module, filtration, sequence, n))
    return resolver


def add_divisor_subjects(resolver, divisor, x, window):
    """
    Subjects of the Cartier tasks: R, the chart rings, the torsion faces of
    R/I and of the charts, the pro-regular pairs of the charts, the pair
    (I, x) and the completion faces of R/I at x.
    """
    ring = divisor.ring
    resolver.add("ring", lambda: ring)
    resolver.add_pattern(r"chart:(\d+)", divisor.chart_ring)
    if x is None:
        return resolver
    x = ring.element(x)
    quotient = FpModule.cyclic(ring, divisor.ideal)
    add_torsion_subjects(resolver, quotient, x, window, subject="quotient",
                         tower_subject="quotient_colon")

    def chart_instance(i):
        return (SequenceSpec(divisor.chart_ring(i),
                             [divisor.chart_element(i, x)]),
                chart_quotient(divisor, i))

    resolver.add_pattern(r"chart_quotient:(\d+)", chart_instance)
    resolver.add_pattern(r"chart_quotient_colon:(\d+)",
                         lambda i: _torsion_colon(chart_instance(i), window))
    resolver.add_pattern(r"chart(\d+):colon:(\d+)", lambda i, j: colon_tower(
        chart_pair(divisor, i, x), j,
        FpModule.free(divisor.chart_ring(i), 1), window))
    resolver.add("pair", lambda: pair_tower(divisor.ideal, x, window))
    resolver.add("koszul_pair",
                 lambda: koszul_pair_tower(divisor.ideal, x, window))
    system = KoszulSystem(SequenceSpec(ring, [x]), quotient)
    resolver.add_pattern(r"koszul:(\d+)",
                         lambda i: system.tower(i, window=window))
    free = FpModule.free(ring, 1)
    add_composite_subjects(resolver, free, Filtration.adic(free,
                                                           divisor.ideal),
                           SequenceSpec(ring, [x]), window)
    return resolver
