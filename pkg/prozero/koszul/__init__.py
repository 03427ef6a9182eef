from .sequence import SequenceSpec
from .complex import (KoszulLevel, KoszulCoLevel, comparison_matrix,
                      scalar_blocks, exterior_subsets)
from .system import (KoszulSystem, koszul_homology, koszul_cohomology,
                     koszul_transition, koszul_cotransition, koszul_tower,
                     koszul_cotower, gamma_torsion, self_duality_certificate)
