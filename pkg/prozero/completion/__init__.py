from .filtration import (Filtration, filtration_tower, adic_tower, adic_level,
                         scaled_units)
from .cech import (CechHomologyReport, cech_homology_report,
                   cech_cohomology_report, koszul_subject, cokoszul_subject,
                   VANISHES, ISOMORPHIC_TO_COMPLETION)
from .composite import (gm_composite_check, composite_bitower, row_tower,
                        combined_filtration, composite_tower, level_towers,
                        level_pair, level_square_commutes, row_subject,
                        level_subject)
