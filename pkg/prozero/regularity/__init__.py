from .sequences import (RegularityVerdict, is_regular_sequence,
                        is_bounded_torsion, is_pro_regular,
                        is_weakly_pro_regular, colon_module, colon_tower,
                        prefix_submodule, describe_instance, REGULAR,
                        NOT_REGULAR, BOUNDED, NOT_BOUNDED_WITHIN_WINDOW,
                        PRO_REGULAR, NOT_PRO_REGULAR_WITHIN_WINDOW,
                        WEAKLY_PRO_REGULAR,
                        NOT_WEAKLY_PRO_REGULAR_WITHIN_WINDOW)
from .audit import (audit_equivalences, permutation_audit, permutation_pair,
                    permutation_subject, permutation_key,
                    exterior_permutation_matrix, torsion_instance,
                    torsion_subjects)
