"""
A set of general utility functions used across the codebase
"""

import math
from contextlib import contextmanager


def b_if_a_is_none(a, b):
    """ Returns 'b' if 'a' is None, otherwise returns 'a' """
    if a is None:
        return b
    else:
        return a


def window_or_default(window):
    """ Returns 'window' or the engine default window if 'window' is None """
    from prozero import defaults
    return int(b_if_a_is_none(window, defaults.WINDOW))


def check_window(window, minimum, what="window"):
    """
    Raises ValueError if 'window' is smaller than 'minimum', else returns it

    Args:
        window:  (int) Number of materialized levels
        minimum: (int) Smallest admissible window
        what:    (str) Name used in the error message
    """
    window = int(window)
    if window < minimum:
        raise ValueError("{} must be at least {}, got {}".format(what,
                                                                minimum,
                                                                window))
    return window


def half_window(window):
    """ The last level whose witness is sought inside a window of size W """
    return int(math.ceil(window / 2))


@contextmanager
def degree_cap_context(degree_cap):
    """
    Context manager setting the Groebner degree cap on prozero.defaults for
    the duration of the context. E.g.:

    with degree_cap_context(30):
        ... computations may produce polynomials of degree <= 30
    ... previous cap restored

    Args:
        degree_cap: (int or None) The cap to use. None leaves it unchanged.
    """
    from prozero import defaults
    memory = defaults.DEGREE_CAP
    if degree_cap is not None:
        defaults.DEGREE_CAP = int(degree_cap)
    try:
        yield
    finally:
        defaults.DEGREE_CAP = memory
