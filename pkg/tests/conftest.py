import json

import pytest

from prozero.ground import PolyRingSpec
from prozero.rings import RingPresentation, Ideal
from prozero.modules import FpModule
from prozero.koszul import SequenceSpec


def ring_from(coefficients, variables, relations=(), name=None):
    return RingPresentation(PolyRingSpec(coefficients, variables),
                            list(relations), name=name)


@pytest.fixture
def qx():
    """ QQ[x] """
    return ring_from("QQ", ["x"], name="qx")


@pytest.fixture
def cubic():
    """ QQ[x]/(x^3) """
    return ring_from("QQ", ["x"], ["x^3"], name="cubic")


@pytest.fixture
def cubic_module(cubic):
    return FpModule.free(cubic, 1)


@pytest.fixture
def cubic_sequence(cubic):
    return SequenceSpec(cubic, ["x"], name="x")


@pytest.fixture
def quintic_instance():
    """ (x, QQ[x]/(x^5)): x-torsion stationary from 5 """
    ring = ring_from("QQ", ["x"], ["x^5"], name="quintic")
    return SequenceSpec(ring, ["x"]), FpModule.free(ring, 1)


@pytest.fixture
def truncations(qx):
    """ A_N: the direct sum of QQ[x]/(x^k) for k = 1..10 """
    n = 10
    columns = [[qx.element("x^{}".format(k)) if i == k - 1 else 0
                for i in range(n)] for k in range(1, n + 1)]
    return FpModule(qx, n, columns)


@pytest.fixture
def escalating_ring():
    """ R_N = QQ[x, y1..y10]/(x*y1, x^2*y2, ..., x^10*y10) """
    n = 10
    variables = ["x"] + ["y{}".format(k) for k in range(1, n + 1)]
    relations = ["x^{}*y{}".format(k, k) for k in range(1, n + 1)]
    return ring_from("QQ", variables, relations, name="escalating")


@pytest.fixture
def cross():
    """ QQ[x, y]/(x*y) """
    return ring_from("QQ", ["x", "y"], ["x*y"], name="cross")


@pytest.fixture
def plane():
    """ QQ[x, y] """
    return ring_from("QQ", ["x", "y"], name="plane")


@pytest.fixture
def circle():
    """ QQ[a, b]/(a^2 + b^2 - 1) """
    return ring_from("QQ", ["a", "b"], ["a^2 + b^2 - 1"], name="circle")


@pytest.fixture
def circle_point(circle):
    return Ideal(circle, ["1 - a", "b"])


@pytest.fixture
def circle_charts():
    return [["1 + a", "b"], ["1 - a", "1"]]


@pytest.fixture
def z4():
    """ (ZZ/4)[u] """
    return ring_from("ZZ/4", ["u"], name="z4")


@pytest.fixture
def integers():
    return ring_from("ZZ", [], name="ZZ")


@pytest.fixture
def example_problem():
    """ The decoded problem file shipped with 'pz init' """
    from prozero import defaults
    import os
    path = os.path.join(os.path.dirname(defaults.engine_yaml_path),
                        "problems", "example.json")
    with open(path, "r", encoding="utf-8") as in_f:
        return json.load(in_f)


@pytest.fixture
def write_problem(tmp_path):
    """ Writes a problem dict to a JSON file in tmp_path, returns its path """
    def write(data, name="problem.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return write
