from .fp_module import (FpModule, tensor_quotient, is_zero_module, span_basis,
                        unit_vector)
from .maps import ModuleMap, is_zero_map
from .subquotient import (Subquotient, homology_at, colon, joint_annihilator,
                          IsomorphismCertificate, certify_isomorphism)
