"""
Small collection of custom exceptions.
Every class carries a stable string 'code' used in reports and exit codes.
"""


class UnsupportedDomainError(ValueError):
    code = "UNSUPPORTED_DOMAIN"


class DegreeCapExceeded(ArithmeticError):
    code = "DEGREE_CAP_EXCEEDED"

    def __init__(self, *args, degree=None, cap=None, **kwargs):
        super(DegreeCapExceeded, self).__init__(*args, **kwargs)
        self.degree = degree
        self.cap = cap


class ZeroLocalizationError(ValueError):
    code = "ZERO_LOCALIZATION"


class NotAComplexError(ValueError):
    code = "NOT_A_COMPLEX"


class DegreeOutOfRangeError(IndexError):
    code = "DEGREE_OUT_OF_RANGE"

    def __init__(self, *args, degree=None, **kwargs):
        super(DegreeOutOfRangeError, self).__init__(*args, **kwargs)
        self.degree = degree


class BadLevelsError(ValueError):
    code = "BAD_LEVELS"


class UndeterminedError(RuntimeError):
    code = "UNDETERMINED"


class NotCheckableError(RuntimeError):
    code = "NOT_CHECKABLE"


class NotCartierError(ValueError):
    code = "NOT_CARTIER"

    def __init__(self, *args, chart=None, check=None, **kwargs):
        super(NotCartierError, self).__init__(*args, **kwargs)
        self.chart = chart
        self.check = check


class ReplayIncompatibleError(RuntimeError):
    code = "REPLAY_INCOMPATIBLE"


class ProblemFileError(ValueError):
    code = "PARSE_ERROR"

    def __init__(self, *args, location=None, code=None, **kwargs):
        super(ProblemFileError, self).__init__(*args, **kwargs)
        self.location = location
        if code is not None:
            self.code = code


class UndefinedReferenceError(ProblemFileError):
    code = "UNDEFINED_REFERENCE"


class PolynomialParseError(ProblemFileError):
    pass


class NotWellDefinedError(ValueError):
    code = "NOT_WELL_DEFINED"


class TowerConstructionError(ValueError):
    code = "TOWER_CONSTRUCTION"

    def __init__(self, *args, tag=None, **kwargs):
        super(TowerConstructionError, self).__init__(*args, **kwargs)
        self.tag = tag


# Errors which signal bad input rather than an inconclusive computation
INPUT_ERRORS = (UnsupportedDomainError, ZeroLocalizationError,
                NotAComplexError, DegreeOutOfRangeError, BadLevelsError,
                NotWellDefinedError, TowerConstructionError, ProblemFileError)
