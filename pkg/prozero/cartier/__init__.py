from .divisor import (CartierDivisor, verify_cartier, is_nonzerodivisor,
                      membership_check, chart_power_consistency,
                      chart_injectivity, chart_subject)
from .pairs import (is_pro_regular_pair, pair_tower, pair_level,
                    koszul_pair_tower, chart_quotient, chart_pair,
                    chart_torsion_audit, divisor_completion_audit,
                    chart_quotient_subject, chart_colon_subject,
                    chart_pair_prefix)
from .prism import PrismData, prism_condition_b
