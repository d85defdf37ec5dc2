# -*- coding: utf-8 -*-
"""
Exceptions
~~~~~~~~~~

"""
from .constants import ErrorCode
from .resources import Error


class EllSurfError(Exception):
    """
    Base of all errors raised by a computation.

    Each subclass is bound to an :class:`ErrorCode`, which fixes the exit
    code the command line reports.

    """
    code = ErrorCode.INTERNAL

    def __init__(self, message=None, developer_message=None, meta=None):
        super(EllSurfError, self).__init__(message or self.code.description)
        self.message = message
        self.developer_message = developer_message
        self.meta = meta

    @property
    def resource(self):
        # type: () -> Error
        return Error.from_code(self.code, self.message, self.developer_message, self.meta)

    @property
    def exit_code(self):
        return self.code.exit_code


class DegenerateModel(EllSurfError):
    """
    The discriminant of a model vanishes identically.
    """
    code = ErrorCode.DEGENERATE


class DegreeViolation(EllSurfError):
    """
    A coefficient is not a polynomial within the degree bound of its model.
    """
    code = ErrorCode.DEGREE_VIOLATION


class UnfactoredPolynomial(EllSurfError):
    """
    A factor could not be certified irreducible.
    """
    code = ErrorCode.UNFACTORED


class NotRelativelyMinimal(EllSurfError):
    code = ErrorCode.NOT_RELATIVELY_MINIMAL


class NonIntegral(EllSurfError):
    code = ErrorCode.NONINTEGRAL


class UnsupportedTransition(EllSurfError):
    """
    No base change rule is implemented for a fibre type and ramification index.
    """
    code = ErrorCode.UNSUPPORTED_TRANSITION


class UnsupportedCover(EllSurfError):
    code = ErrorCode.UNSUPPORTED_COVER


class Mismatch(EllSurfError):
    """
    Two independent computations of the same quantity disagree; *meta*
    carries both sides.
    """
    code = ErrorCode.MISMATCH


class ExceedsH11(EllSurfError):
    code = ErrorCode.EXCEEDS_H11


class BadComponent(EllSurfError):
    code = ErrorCode.BAD_COMPONENT


class IdentityFailure(EllSurfError):
    code = ErrorCode.IDENTITY_FAILURE


class ParityError(EllSurfError):
    code = ErrorCode.PARITY


class UnrecognizedGraph(EllSurfError):
    code = ErrorCode.UNRECOGNIZED


class DivergentTail(EllSurfError):
    code = ErrorCode.DIVERGENT_TAIL


class ExcludedParameter(EllSurfError):
    code = ErrorCode.EXCLUDED_PARAMETER


class InvalidProfile(EllSurfError):
    code = ErrorCode.INVALID_PROFILE


class UsageError(EllSurfError):
    """
    Invalid arguments were supplied to a command.
    """
    code = ErrorCode.USAGE
