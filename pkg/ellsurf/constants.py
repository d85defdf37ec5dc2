import enum
import math


class ErrorCode(enum.Enum):
    """
    Error conditions raised by computations, with the process exit code
    the command line reports for each.
    """
    def __new__(cls, value, exit_code, description):
        obj = object.__new__(cls)
        obj._value_ = value  # noqa

        obj.exit_code = exit_code
        obj.description = description
        return obj

    def __str__(self):
        return self.value

    DEGENERATE = "DEGENERATE", 1, "Discriminant vanishes identically."
    DEGREE_VIOLATION = "DEGREE_VIOLATION", 1, "Coefficient exceeds the degree bound of the model."
    UNFACTORED = "UNFACTORED", 1, "Polynomial could not be certified as a product of irreducibles."
    NOT_RELATIVELY_MINIMAL = "NOT_RELATIVELY_MINIMAL", 1, "Euler number is not a positive multiple of 12."
    NONINTEGRAL = "NONINTEGRAL", 1, "Quantity expected to be integral is not."
    UNSUPPORTED_TRANSITION = "UNSUPPORTED_TRANSITION", 1, "No fibre transition rule for this type and index."
    UNSUPPORTED_COVER = "UNSUPPORTED_COVER", 1, "Cover is outside the supported class."
    MISMATCH = "MISMATCH", 1, "Two independent computations disagree."
    EXCEEDS_H11 = "EXCEEDS_H11", 1, "Picard number exceeds h^{1,1}."
    BAD_COMPONENT = "BAD_COMPONENT", 1, "Fibre component index is not valid for the type."
    IDENTITY_FAILURE = "IDENTITY_FAILURE", 1, "Symbolic identity does not hold."
    PARITY = "PARITY", 1, "Milnor number and branch count have the wrong parity."
    UNRECOGNIZED = "UNRECOGNIZED", 1, "Dual graph does not match a Kodaira fibre."
    DIVERGENT_TAIL = "DIVERGENT_TAIL", 1, "Series tail does not converge at this point."
    EXCLUDED_PARAMETER = "EXCLUDED_PARAMETER", 1, "Parameter value is excluded from the family."
    INVALID_PROFILE = "INVALID_PROFILE", 2, "Branch profile is malformed."
    USAGE = "USAGE", 2, "Invalid command line usage."
    INTERNAL = "INTERNAL", 1, "An unhandled error has been caught."


class Verdict(enum.Enum):
    """
    Outcome of a single claim in a report.
    """
    Pass = 'PASS'
    Fail = 'FAIL'
    Info = 'INFO'


class CollisionLimit(enum.Enum):
    """
    Limit of a triple cover when its two simple branch points collide.
    """
    Smooth = 'SMOOTH_LIMIT'
    Nodal = 'NODAL_LIMIT'


class StepKind(enum.Enum):
    """
    Kind of step in a semistable reduction trace.
    """
    CyclicCover = 'CYCLIC_COVER'
    NormalizeResolve = 'NORMALIZE_RESOLVE'
    BlowDown = 'BLOW_DOWN'


class ContractionOrder(enum.Enum):
    """
    Order in which (-1)-curves are chosen for contraction.
    """
    Lowest = 'lowest'
    Highest = 'highest'


INFINITE = math.inf
"""
Sentinel for infinite monodromy order and for the valuation of zero.
"""

DEFAULT_TERMS = 80
"""
Default truncation order of q-expansions.
"""

DEFAULT_TOLERANCE = 1e-4
"""
Default threshold for numerically vanishing values.
"""

ATKIN_LEHNER_TOLERANCE = 1e-6

ATKIN_LEHNER_SAMPLES = (0.4, 0.5, 0.7)
"""
Imaginary parts of the sample points used for the Atkin-Lehner check.
"""

MODULAR_LEVEL = 11

PRIMITIVITY_N_MAX = 5
PRIMITIVITY_H_MAX = 4
PRIMITIVITY_COEFF_BOUND = 4

SPOT_CHECK_SAMPLES = 20
SPOT_CHECK_SEED = 1729
