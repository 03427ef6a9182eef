"""
Problem files: named definitions (rings, ideals, modules, maps, sequences,
filtrations, towers, divisors, prisms) and an ordered list of tasks.

ProblemFile validates the structure and every reference when it is loaded;
definitions are turned into engine objects by 'build'. Errors carry the JSON
path of the offending entry in their 'location' attribute.
"""

import hashlib
import json
import logging
import os

from prozero import defaults
from prozero.errors import (ProblemFileError, UndefinedReferenceError,
                            PolynomialParseError)
from prozero.ground import PolyRingSpec
from prozero.rings import RingPresentation, Ideal
from prozero.modules import FpModule, ModuleMap
from prozero.koszul import SequenceSpec
from prozero.completion import Filtration
from prozero.cartier import CartierDivisor, PrismData
from prozero.towers import TAGS

_LOGGER = logging.getLogger(__name__)

SECTIONS = ("rings", "ideals", "modules", "maps", "sequences", "filtrations",
            "towers", "divisors", "prisms")
FILTRATION_KINDS = ("adic", "sequence_powers", "zero")
TOWER_KINDS = ("koszul", "cokoszul", "colon", "adic", "filtration",
               "explicit")

# Task kind -> (required references, optional fields)
TASK_FIELDS = {
    "pro_zero": (("tower",), ()),
    "mittag_leffler": (("tower",), ()),
    "lim_lim1": (("tower",), ()),
    "tower_audit": (("tower",), ()),
    "ind_zero": (("tower",), ()),
    "koszul_homology": (("sequence", "module", "degree"), ("level",)),
    "cech_homology": (("sequence", "module", "degree"), ()),
    "cech_cohomology": (("sequence", "module", "degree"), ()),
    "regular": (("sequence", "module"), ()),
    "bounded_torsion": (("module", "x"), ()),
    "pro_regular": (("sequence", "module"), ()),
    "weakly_pro_regular": (("sequence", "module"), ()),
    "audit": (("sequence", "module"), ()),
    "permutation_audit": (("sequence", "module"), ()),
    "gm_composite": (("module", "filtration", "sequence"), ()),
    "verify_cartier": (("divisor",), ()),
    "pro_regular_pair": (("ideal", "x"), ()),
    "chart_torsion_audit": (("divisor", "x"), ()),
    "lemma_5_2_audit": (("divisor", "x"), ()),
    "divisor_completion_audit": (("divisor", "x"), ("composite",)),
    "prism_b": (("prism",), ()),
}
# Fields of a task naming a definition, and the section it must be in
REFERENCES = {"tower": "towers", "sequence": "sequences",
              "module": "modules", "filtration": "filtrations",
              "divisor": "divisors", "prism": "prisms", "ideal": "ideals"}


def _path(*parts):
    return "$" + "".join("[{}]".format(p) if isinstance(p, int)
                         else ".{}".format(p) for p in parts)


def _require(mapping, key, location, kind=None):
    if not isinstance(mapping, dict) or key not in mapping:
        raise ProblemFileError("Missing field '{}'".format(key),
                               location=location)
    value = mapping[key]
    if kind is not None and not isinstance(value, kind):
        raise ProblemFileError("Field '{}' has the wrong type ({})".format(
            key, type(value).__name__), location=_path_join(location, key))
    return value


def _path_join(location, key):
    return "{}.{}".format(location, key)


def _window(value, location):
    if isinstance(value, bool) or not isinstance(value, int) or value < 2:
        raise ProblemFileError("A window must be an integer >= 2, got "
                               "{!r}".format(value), location=location)
    return value


def canonical_sha256(data):
    """ SHA-256 of the canonical JSON dump of 'data' """
    dump = json.dumps(data, sort_keys=True, ensure_ascii=False,
                      separators=(",", ":"))
    return hashlib.sha256(dump.encode("utf-8")).hexdigest()


class ProblemFile(object):
    """
    A validated problem file. Engine objects are created by 'build' and are
    available through 'get(section, name)'.
    """
    def __init__(self, data, path=None, logger=None):
        """
        Args:
            data:   (dict) The decoded JSON document
            path:   (str)  Optional path of the file, for messages

        Raises:
            ProblemFileError on schema violations
            UndefinedReferenceError on references to missing definitions
        """
        self.logger = logger or _LOGGER
        self.path = path
        self.data = data
        self._objects = {s: {} for s in SECTIONS}
        self._validate()
        self.sha256 = canonical_sha256(data)

    @classmethod
    def from_file(cls, path, logger=None):
        path = os.path.abspath(path)
        try:
            with open(path, "r", encoding="utf-8") as in_f:
                data = json.load(in_f)
        except (OSError, UnicodeDecodeError) as e:
            raise ProblemFileError("Cannot read problem file '{}': "
                                   "{}".format(path, e), location="$")
        except json.JSONDecodeError as e:
            raise ProblemFileError("Invalid JSON in '{}': {}".format(path, e),
                                   location="$ (line {}, column {})".format(
                                       e.lineno, e.colno))
        return cls(data, path=path, logger=logger)

    def __repr__(self):
        return "ProblemFile({}, {} tasks)".format(self.path or "<memory>",
                                                  len(self.tasks))

    @property
    def tasks(self):
        return self.data.get("tasks", [])

    def section(self, name):
        return self.data.get(name) or {}

    def _validate(self):
        data = self.data
        if not isinstance(data, dict):
            raise ProblemFileError("A problem file holds a JSON object",
                                   location="$")
        version = data.get("schema_version")
        if version != defaults.PROBLEM_SCHEMA_VERSION:
            raise ProblemFileError(
                "Unsupported schema_version {!r}, expected {}".format(
                    version, defaults.PROBLEM_SCHEMA_VERSION),
                location=_path("schema_version")
            )
        unknown = sorted(set(data) - set(SECTIONS) -
                         {"schema_version", "tasks", "window", "name"})
        if unknown:
            raise ProblemFileError("Unknown top-level fields {}".format(
                unknown), location="$")
        for section in SECTIONS:
            entries = data.get(section, {})
            if not isinstance(entries, dict):
                raise ProblemFileError("Section '{}' must map names to "
                                       "definitions".format(section),
                                       location=_path(section))
            for name, entry in entries.items():
                if not isinstance(entry, dict):
                    raise ProblemFileError("Definition must be an object",
                                           location=_path(section, name))
        if "window" in data:
            _window(data["window"], _path("window"))
        self._validate_references()
        tasks = data.get("tasks")
        if not isinstance(tasks, list) or not tasks:
            raise ProblemFileError("'tasks' must be a non-empty list",
                                   location=_path("tasks"))
        for index, task in enumerate(tasks):
            self._validate_task(index, task)

    def _reference(self, section, name, location):
        if not isinstance(name, str) or name not in self.section(section):
            raise UndefinedReferenceError(
                "'{}' is not defined in '{}'".format(name, section),
                location=location
            )
        return name

    def _validate_references(self):
        ref = self._reference
        for name, entry in self.section("ideals").items():
            ref("rings", entry.get("ring"), _path("ideals", name, "ring"))
        for name, entry in self.section("modules").items():
            ref("rings", entry.get("ring"), _path("modules", name, "ring"))
            if isinstance(entry.get("cyclic"), str):
                ref("ideals", entry["cyclic"],
                    _path("modules", name, "cyclic"))
        for name, entry in self.section("maps").items():
            for key in ("source", "target"):
                ref("modules", entry.get(key), _path("maps", name, key))
        for name, entry in self.section("sequences").items():
            ref("rings", entry.get("ring"), _path("sequences", name, "ring"))
        for name, entry in self.section("filtrations").items():
            location = _path("filtrations", name)
            ref("modules", entry.get("module"), _path_join(location,
                                                           "module"))
            kind = entry.get("kind")
            if kind not in FILTRATION_KINDS:
                raise ProblemFileError("Filtration kind must be one of "
                                       "{}".format(FILTRATION_KINDS),
                                       location=_path_join(location, "kind"))
            if kind == "adic":
                ref("ideals", entry.get("ideal"), _path_join(location,
                                                             "ideal"))
            if kind == "sequence_powers":
                ref("sequences", entry.get("sequence"),
                    _path_join(location, "sequence"))
        for name, entry in self.section("towers").items():
            self._validate_tower(name, entry)
        for name, entry in self.section("divisors").items():
            ref("rings", entry.get("ring"), _path("divisors", name, "ring"))
            if isinstance(entry.get("ideal"), str):
                ref("ideals", entry["ideal"], _path("divisors", name,
                                                    "ideal"))
            charts = _require(entry, "charts", _path("divisors", name), list)
            for i, chart in enumerate(charts):
                if not isinstance(chart, list) or len(chart) != 2:
                    raise ProblemFileError("A chart is a pair [f, x]",
                                           location=_path("divisors", name,
                                                          "charts", i))
        for name, entry in self.section("prisms").items():
            location = _path("prisms", name)
            ref("rings", entry.get("ring"), _path_join(location, "ring"))
            if isinstance(entry.get("ideal"), str):
                ref("ideals", entry["ideal"], _path_join(location, "ideal"))
            _require(entry, "p", location, int)
            _require(entry, "frobenius", location, dict)

    def _validate_tower(self, name, entry):
        location = _path("towers", name)
        kind = entry.get("kind")
        if kind not in TOWER_KINDS:
            raise ProblemFileError("Tower kind must be one of {}".format(
                TOWER_KINDS), location=_path_join(location, "kind"))
        if kind == "explicit":
            self._reference("rings", entry.get("ring"),
                            _path_join(location, "ring"))
            levels = _require(entry, "levels", location, list)
            if not levels:
                raise ProblemFileError("An explicit tower needs levels",
                                       location=_path_join(location,
                                                           "levels"))
            for i, level in enumerate(levels):
                if isinstance(level, str):
                    self._reference("modules", level,
                                    _path("towers", name, "levels", i))
            for i, step in enumerate(entry.get("maps", [])):
                if isinstance(step, str):
                    self._reference("maps", step,
                                    _path("towers", name, "maps", i))
            for tag in entry.get("tags", []):
                if tag not in TAGS:
                    raise ProblemFileError("Unknown tag '{}'".format(tag),
                                           location=_path_join(location,
                                                               "tags"))
            return
        if kind == "filtration":
            self._reference("filtrations", entry.get("filtration"),
                            _path_join(location, "filtration"))
            return
        self._reference("modules", entry.get("module"),
                        _path_join(location, "module"))
        self._reference("sequences", entry.get("sequence"),
                        _path_join(location, "sequence"))
        if kind in ("koszul", "cokoszul"):
            _require(entry, "degree", location, int)
        if kind == "colon":
            _require(entry, "index", location, int)

    def _validate_task(self, index, task):
        location = _path("tasks", index)
        if not isinstance(task, dict):
            raise ProblemFileError("A task must be an object",
                                   location=location)
        kind = task.get("kind")
        if kind not in TASK_FIELDS:
            raise ProblemFileError("Unknown task kind {!r}".format(kind),
                                   location=_path_join(location, "kind"))
        required, optional = TASK_FIELDS[kind]
        allowed = set(required) | set(optional) | {"kind", "window", "name"}
        unknown = sorted(set(task) - allowed)
        if unknown:
            raise ProblemFileError("Unknown fields {} for task kind "
                                   "'{}'".format(unknown, kind),
                                   location=location)
        for field in required:
            _require(task, field, location)
        for field, section in REFERENCES.items():
            if field in task:
                self._reference(section, task[field],
                                _path_join(location, field))
        if "window" in task:
            _window(task["window"], _path_join(location, "window"))
        for field in ("degree", "level"):
            if field in task and (isinstance(task[field], bool) or
                                  not isinstance(task[field], int)):
                raise ProblemFileError("'{}' must be an integer".format(
                    field), location=_path_join(location, field))

    def task_window(self, index, override=None):
        """
        The window of task 'index': the task's own window, else the CLI
        override, else the file's window, else the engine default.
        """
        task = self.tasks[index]
        for value in (task.get("window"), override, self.data.get("window")):
            if value is not None:
                return int(value)
        return int(defaults.WINDOW)

    def get(self, section, name):
        """ The built object of a definition """
        if name not in self._objects[section]:
            self._objects[section][name] = self._build(section, name)
        return self._objects[section][name]

    def build(self):
        """
        Creates every definition except towers (which depend on the window
        of the task using them).

        Raises:
            ProblemFileError (with location) when a definition is invalid
        """
        for section in SECTIONS:
            if section == "towers":
                continue
            for name in sorted(self.section(section)):
                self.get(section, name)
        return self

    def _build(self, section, name):
        entry = self.section(section)[name]
        location = _path(section, name)
        try:
            builder = getattr(self, "_build_" + section)
            return builder(name, entry, location)
        except PolynomialParseError as e:
            if e.location is None:
                e.location = location
            raise
        except (KeyError, TypeError) as e:
            raise ProblemFileError("Invalid definition: {}".format(e),
                                   location=location)

    def _build_rings(self, name, entry, location):
        spec = PolyRingSpec(entry.get("coefficients", "QQ"),
                            entry.get("variables", []),
                            entry.get("order", "grevlex"))
        return RingPresentation(spec, entry.get("relations", []), name=name)

    def _elements(self, ring, values, location):
        if not isinstance(values, list):
            raise ProblemFileError("Expected a list of polynomials",
                                   location=location)
        return [self._element(ring, v, "{}[{}]".format(location, i))
                for i, v in enumerate(values)]

    def _element(self, ring, value, location):
        try:
            return ring.element(value)
        except PolynomialParseError as e:
            e.location = location
            raise

    def _ideal(self, ring, value, location):
        if isinstance(value, str):
            ideal = self.get("ideals", value)
            if ideal.ambient != ring:
                raise ProblemFileError("Ideal '{}' lives in another "
                                       "ring".format(value),
                                       location=location)
            return ideal
        return Ideal(ring, self._elements(ring, value, location))

    def _build_ideals(self, name, entry, location):
        ring = self.get("rings", entry["ring"])
        return Ideal(ring, self._elements(ring, entry.get("generators", []),
                                          _path_join(location,
                                                     "generators")))

    def _build_modules(self, name, entry, location):
        ring = self.get("rings", entry["ring"])
        if "free" in entry:
            return FpModule.free(ring, int(entry["free"]))
        if "cyclic" in entry:
            return FpModule.cyclic(ring, self._ideal(
                ring, entry["cyclic"], _path_join(location, "cyclic")
            ))
        generators = _require(entry, "generators", location, int)
        columns = []
        for i, column in enumerate(entry.get("relations", [])):
            columns.append(self._elements(
                ring, column, "{}.relations[{}]".format(location, i)
            ))
        try:
            return FpModule(ring, generators, columns)
        except ValueError as e:
            raise ProblemFileError(str(e), location=location)

    def _build_maps(self, name, entry, location):
        source = self.get("modules", entry["source"])
        target = self.get("modules", entry["target"])
        rows = [self._elements(source.ring, row, "{}.matrix[{}]".format(
            location, i)) for i, row in enumerate(entry.get("matrix", []))]
        return ModuleMap(source, target, rows)

    def _build_sequences(self, name, entry, location):
        ring = self.get("rings", entry["ring"])
        elements = self._elements(ring, entry.get("elements"),
                                  _path_join(location, "elements"))
        if not elements:
            raise ProblemFileError("A sequence needs at least one element",
                                   location=location)
        return SequenceSpec(ring, elements, name=name)

    def _build_filtrations(self, name, entry, location):
        module = self.get("modules", entry["module"])
        kind = entry["kind"]
        if kind == "adic":
            return Filtration.adic(module, self.get("ideals", entry["ideal"]))
        if kind == "sequence_powers":
            return Filtration.sequence_powers(
                module, self.get("sequences", entry["sequence"])
            )
        return Filtration.zero(module)

    def _build_divisors(self, name, entry, location):
        ring = self.get("rings", entry["ring"])
        ideal = self._ideal(ring, entry.get("ideal", []),
                            _path_join(location, "ideal"))
        charts = [self._elements(ring, chart, "{}.charts[{}]".format(
            location, i)) for i, chart in enumerate(entry["charts"])]
        return CartierDivisor(ring, ideal, charts, name=name, verify=False,
                              logger=self.logger)

    def _build_prisms(self, name, entry, location):
        ring = self.get("rings", entry["ring"])
        ideal = self._ideal(ring, entry.get("ideal", []),
                            _path_join(location, "ideal"))
        return PrismData(ring, ideal, entry["p"], dict(entry["frobenius"]),
                         logger=self.logger)

    def tower_definition(self, name):
        return self.section("towers")[name]
