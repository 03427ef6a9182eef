from .domains import (CoefficientDomain, PolyRingSpec, ModuleFrame,
                      BlockEliminationOrder, PositionOverTerm,
                      PRIME_FIELD, RATIONALS, INTEGERS, INTEGERS_MOD)
from .groebner import GroebnerBasis, groebner_basis
from .matrices import ExactMatrix
from .smith import SmithNormalForm, smith_normal_form, integer_kernel
from .syzygy import syzygies, syzygy_matrix, Lifter
from .polystrings import (parse_polynomial, format_polynomial,
                          format_vector, coefficient_to_fraction)
