from .tower import (InverseTower, DirectTower, BiTower, diagonal_tower,
                    explicit_tower, run_parallel, SURJECTIVE_BY_CONSTRUCTION,
                    FINITE_LENGTH_LEVELS, EVENTUALLY_CONSTANT_BY_CONSTRUCTION,
                    DIVISIBILITY_BY_CONSTRUCTION,
                    TORSION_CHAIN_BY_CONSTRUCTION, TAGS)
from .certificates import (Certificate, LimReport, register_check, make_check,
                           run_check, replay_checks, CHECKS, PRO_ZERO,
                           NOT_PRO_ZERO_WITHIN_WINDOW, ML_CERTIFIED,
                           ML_STABILIZED_WITHIN_WINDOW, NOT_ML_WITHIN_WINDOW,
                           UNDETERMINED, IND_ZERO, NOT_IND_ZERO_WITHIN_WINDOW,
                           ZERO_CERTIFIED, PRESENTED)
from .verdicts import (is_pro_zero, is_mittag_leffler, lim_lim1, is_ind_zero,
                       tower_consistency_audit)
from .six_term import six_term_check, bi_pro_zero_equivalence
