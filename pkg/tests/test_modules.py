import pytest

from prozero.errors import NotAComplexError, NotWellDefinedError
from prozero.modules import (FpModule, ModuleMap, Subquotient, homology_at,
                             colon, joint_annihilator, certify_isomorphism,
                             IsomorphismCertificate)


def _mult(module, element):
    return ModuleMap(module, module, [[element]])


def test_colon_in_truncated_ring(cubic, cubic_module):
    annihilator = colon(cubic_module, [], "x")
    assert annihilator.contains([cubic.element("x^2")])
    assert not annihilator.contains([cubic.element("x")])
    assert not annihilator.is_zero()
    assert annihilator.module.vector_space_dimension() == 1


def test_colon_of_regular_element(qx):
    assert colon(FpModule.free(qx, 1), [], "x").is_zero()


def test_colon_modulo_submodule(cubic, cubic_module):
    # (x^2) :_R x / (x^2) = (x) / (x^2)
    quotient = colon(cubic_module, [[cubic.element("x^2")]], "x")
    assert quotient.contains([cubic.element("x")])
    assert quotient.module.vector_space_dimension() == 1


def test_joint_annihilator(cross):
    free = FpModule.free(cross, 1)
    assert joint_annihilator(free, ["x", "y"]).is_zero()
    assert joint_annihilator(free, ["x"]).contains([cross.element("y")])


def test_dimensions(cubic_module, truncations):
    assert cubic_module.vector_space_dimension() == 3
    assert truncations.vector_space_dimension() == 55


def test_direct_sum(cubic_module):
    total = cubic_module.direct_sum(cubic_module)
    assert total.generators == 2
    assert total.vector_space_dimension() == 6


def test_map_well_definedness(qx):
    point = FpModule.cyclic(qx, ["x"])
    line = FpModule.free(qx, 1)
    with pytest.raises(NotWellDefinedError):
        ModuleMap(point, line, [[1]])
    assert ModuleMap(line, point, [[1]]).is_surjective()


def test_map_properties(qx):
    line = FpModule.free(qx, 1)
    multiplication = _mult(line, "x")
    assert multiplication.is_injective()
    assert not multiplication.is_surjective()
    assert multiplication.compose(multiplication).equals(_mult(line, "x^2"))
    assert ModuleMap.identity(line).is_isomorphism()
    assert ModuleMap.zero(line, line).is_zero()


def test_kernel_and_image(cubic, cubic_module):
    square = _mult(cubic_module, "x^2")
    assert square.kernel().contains([cubic.element("x")])
    assert square.image().module.vector_space_dimension() == 1


def test_homology_at(cubic_module):
    # R --x--> R --x^2--> R is exact in the middle
    assert homology_at(_mult(cubic_module, "x"),
                       _mult(cubic_module, "x^2")).is_zero()
    middle = homology_at(ModuleMap.zero(cubic_module, cubic_module),
                         _mult(cubic_module, "x"))
    assert middle.module.vector_space_dimension() == 1


def test_homology_needs_a_complex(cubic_module):
    with pytest.raises(NotAComplexError):
        homology_at(_mult(cubic_module, "x"), _mult(cubic_module, "x"))


def test_isomorphism_certificate(cubic, cubic_module):
    annihilator = colon(cubic_module, [], "x")
    certificate = certify_isomorphism(annihilator, annihilator)
    assert certificate is not None and certificate.verify()
    again = IsomorphismCertificate.from_dict(certificate.to_dict(),
                                             annihilator.module,
                                             annihilator.module)
    assert again.verify()


def test_whole_module(cubic_module):
    whole = Subquotient.whole(cubic_module)
    assert not whole.is_zero()
    assert whole.equals(Subquotient.whole(cubic_module))
