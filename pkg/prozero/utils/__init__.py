from .utils import (b_if_a_is_none, degree_cap_context, half_window,
                    check_window, window_or_default)
