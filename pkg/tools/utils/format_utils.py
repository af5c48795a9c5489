"""
Format Utility Functions

Helpers for rendering multi-indices, coordinate names and report values.
"""

import logging

logger = logging.getLogger(__name__)


def format_multi_index(f):
    """
    Render a multi-index as the JSON key used in reports.

    Args:
        f (tuple): Multi-index

    Returns:
        str: Comma separated entries, e.g. "1,0"
    """
    return ','.join(str(a) for a in f)


def parse_multi_index(text, r=None):
    """
    Inverse of ``format_multi_index``.

    Args:
        text (str): Comma separated integers
        r (int, optional): Expected length

    Returns:
        tuple: The multi-index
    """
    f = tuple(int(a) for a in str(text).split(',') if a.strip() != '')
    if r is not None and len(f) != r:
        raise ValueError(f"multi-index {text!r} must have {r} entries")
    return f


def coordinate_name(prefix, f):
    """
    Name of the coordinate X_f.

    One-slot indices are written ``X3``, longer ones ``X_1_0``; the empty
    index gives the plain prefix.
    """
    if not f:
        return prefix
    if len(f) == 1:
        return f"{prefix}{f[0]}"
    return f"{prefix}_{'_'.join(str(a) for a in f)}"


def serialize_value(value):
    """Canonical text for field elements, rational functions and plain values."""
    if hasattr(value, 'to_expr'):
        return value.to_expr()
    if isinstance(value, dict):
        return {str(k): serialize_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize_value(v) for v in value]
    return value


def truncate_string(text, max_length=100, suffix="..."):
    """
    Truncate a string to a maximum length.

    Args:
        text (str): String to truncate
        max_length (int): Maximum length including suffix
        suffix (str): String to append when truncated

    Returns:
        str: Truncated string
    """
    if not text or len(text) <= max_length:
        return text
    return text[:max_length - len(suffix)] + suffix
