"""
Error Utility Functions

Exception hierarchy shared by every package, plus helpers for logging
exceptions and shaping error payloads for the CLI and the JSON service.
"""

import logging
import traceback

logger = logging.getLogger(__name__)


class ToolkitError(Exception):
    """Root of every error raised by the toolkit."""

    hint = None

    def __init__(self, message, hint=None):
        super().__init__(message)
        if hint is not None:
            self.hint = hint


# Field arithmetic

class FieldError(ToolkitError):
    pass


class ContextMismatch(FieldError):
    pass


class NotAPthPower(FieldError):
    """The element has no p-th root in the current tower (an answer, not a failure)."""


class UnsupportedTower(FieldError):
    pass


class InseparableRadical(FieldError):
    pass


class ZeroRadicand(FieldError):
    pass


class ZeroScale(FieldError):
    pass


class ExpressionError(FieldError):
    hint = "expressions use l1..lr, T, X0.., integers and + - * / ^ ( )"


# p-polynomials

class PPolyError(ToolkitError):
    pass


class MalformedForm(PPolyError):
    pass


class UnsupportedFamily(PPolyError):
    pass


# Groups

class GroupError(ToolkitError):
    pass


class BadParams(GroupError):
    pass


class ArityMismatch(GroupError):
    pass


class NotAMember(GroupError):
    pass


class BadIndex(GroupError):
    pass


# Partial fractions

class PfdError(ToolkitError):
    pass


class UnsupportedDenominator(PfdError):
    pass


class NotProper(PfdError):
    pass


class ComponentNotOnGroup(PfdError):
    pass


# Witness construction

class KillError(ToolkitError):
    pass


class PthPowerModulus(KillError):
    pass


class UndeclaredPole(KillError):
    pass


class WitnessFailure(KillError):
    """A constructed certificate did not re-verify."""


# Rewriting and jobs

class RewriteError(ToolkitError):
    pass


class RewriteBudgetExceeded(RewriteError):
    pass


class JobError(ToolkitError):
    pass


class UsageError(JobError):
    hint = "run with --help for the payload of each command"


USAGE_ERRORS = (UsageError, ExpressionError, BadParams, ArityMismatch, ContextMismatch,
                InseparableRadical, ZeroRadicand, ZeroScale, UnsupportedFamily, MalformedForm,
                UndeclaredPole, UnsupportedDenominator, NotProper, PthPowerModulus, BadIndex)


def log_exception(ex, message=None, level=logging.ERROR):
    """
    Log an exception with detailed traceback.

    Args:
        ex (Exception): The exception to log
        message (str): Optional additional message
        level (int): Logging level to use

    Returns:
        str: The formatted error message that was logged
    """
    ex_type = type(ex).__name__
    if message:
        error_message = f"{message}: {ex_type} - {ex}"
    else:
        error_message = f"{ex_type} - {ex}"

    tb_str = ''.join(traceback.format_exception(type(ex), ex, ex.__traceback__))

    logger.log(level, error_message)
    logger.log(level, f"Traceback:\n{tb_str}")

    return error_message


def format_error_message(error, include_class=True):
    """
    Format an error into a readable message.

    Args:
        error (Exception): The exception to format
        include_class (bool): Whether to include the exception class name

    Returns:
        str: Formatted error message
    """
    if include_class:
        return f"{type(error).__name__}: {error}"
    return str(error)


def usage_payload(error):
    """
    Machine-readable body for usage errors.

    Args:
        error (Exception): The usage error

    Returns:
        dict: {'error': ..., 'hint': ...}
    """
    return {
        'error': format_error_message(error),
        'hint': getattr(error, 'hint', None) or UsageError.hint,
    }


def create_error_response(message, status_code=500, details=None):
    """
    Create a standardized error response dict.

    Args:
        message (str): Error message
        status_code (int): HTTP status code
        details (dict): Additional error details

    Returns:
        dict: Standardized error response
    """
    response = {
        'success': False,
        'error': {
            'message': message,
            'status_code': status_code
        }
    }

    if details:
        response['error']['details'] = details

    return response
