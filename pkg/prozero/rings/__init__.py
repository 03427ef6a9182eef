from .presentation import (RingPresentation, Ideal, ideal_power,
                           is_covering_sequence, covering_cofactors,
                           combination_cofactors, ideal_intersection)
from .localization import Localization, localize
