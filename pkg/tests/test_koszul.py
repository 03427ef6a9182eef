import pytest

from prozero.errors import (BadLevelsError, DegreeOutOfRangeError,
                            UndeterminedError)
from prozero.modules import FpModule, Subquotient
from prozero.koszul import (SequenceSpec, KoszulLevel, KoszulCoLevel,
                            KoszulSystem, koszul_homology, koszul_cohomology,
                            koszul_transition, gamma_torsion,
                            self_duality_certificate)


@pytest.mark.parametrize("n,dimension", [(1, 1), (2, 2), (3, 3), (4, 3)])
def test_first_homology_of_truncated_ring(cubic_sequence, cubic_module, n,
                                          dimension):
    homology = koszul_homology(1, cubic_sequence, n, cubic_module)
    assert homology.vector_space_dimension() == dimension


@pytest.mark.parametrize("n", [1, 2, 3])
def test_zeroth_homology(cubic_sequence, cubic_module, n):
    homology = koszul_homology(0, cubic_sequence, n, cubic_module)
    assert homology.vector_space_dimension() == n


def test_regular_pair_has_no_higher_homology(plane):
    sequence = SequenceSpec(plane, ["x", "y"])
    level = KoszulLevel(sequence, 2, FpModule.free(plane, 1))
    assert level.is_complex()
    assert level.homology(1).is_zero()
    assert level.homology(2).is_zero()
    assert level.homology(0).module.vector_space_dimension() == 4


def test_cross_has_first_homology(cross):
    sequence = SequenceSpec(cross, ["x", "y"])
    assert not KoszulLevel(sequence, 1, FpModule.free(cross, 1)) \
        .homology(1).is_zero()


def test_koszul_cohomology(qx):
    sequence = SequenceSpec(qx, ["x"])
    line = FpModule.free(qx, 1)
    assert koszul_cohomology(0, sequence, 1, line).is_zero()
    top = KoszulCoLevel(sequence, 2, line).cohomology(1)
    assert top.module.vector_space_dimension() == 2


def test_bad_levels_and_degrees(cubic_sequence, cubic_module):
    with pytest.raises(BadLevelsError):
        KoszulLevel(cubic_sequence, 0, cubic_module)
    with pytest.raises(DegreeOutOfRangeError):
        KoszulLevel(cubic_sequence, 1, cubic_module).homology(2)


def test_transition_is_multiplication(cubic_sequence, cubic_module):
    # H_1(x^4) -> H_1(x^1) is multiplication by x^3 = 0
    assert koszul_transition(1, 4, 1, cubic_sequence, cubic_module).is_zero()
    assert not koszul_transition(1, 2, 1, cubic_sequence,
                                 cubic_module).is_zero()


def test_system_caches_levels(cubic_sequence, cubic_module):
    system = KoszulSystem(cubic_sequence, cubic_module)
    assert system.level(2) is system.level(2)
    assert system.tower(1, window=4).window == 4


def test_sequence_helpers(plane):
    sequence = SequenceSpec(plane, ["x", "y"], name="xy")
    assert len(sequence) == 2
    assert sequence.to_strings() == ["x", "y"]
    assert sequence.permuted([1, 0]).to_strings() == ["y", "x"]
    assert sequence.ideal(2).contains("x^2*y + y^3")
    assert not sequence.ideal(2).contains("x*y")


def test_gamma_torsion(cubic_sequence, cubic_module):
    torsion, k = gamma_torsion(cubic_sequence, cubic_module)
    assert k == 3
    assert torsion.equals(Subquotient.whole(cubic_module))


def test_gamma_torsion_of_domain(qx):
    torsion, k = gamma_torsion(SequenceSpec(qx, ["x"]), FpModule.free(qx, 1))
    assert k == 1
    assert torsion.is_zero()


def test_gamma_torsion_cap(qx, truncations):
    with pytest.raises(UndeterminedError):
        gamma_torsion(SequenceSpec(qx, ["x"]), truncations, cap=3)


def test_self_duality(cubic_sequence, cubic_module):
    certificate = self_duality_certificate(cubic_sequence, 2, cubic_module)
    assert certificate is not None and certificate.verify()
