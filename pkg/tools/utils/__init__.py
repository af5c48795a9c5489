"""
Utils Package

Collection of utility functions used across the toolkit.
"""

# Import key functions for easier access
from .file_utils import (
    ensure_directory_exists,
    read_json,
    safe_json_write
)

from .date_utils import (
    format_timestamp,
    get_current_datetime_string,
    Stopwatch,
    timed
)

from .format_utils import (
    format_multi_index,
    parse_multi_index,
    coordinate_name,
    serialize_value,
    truncate_string
)

from .error_utils import (
    ToolkitError,
    USAGE_ERRORS,
    log_exception,
    format_error_message,
    usage_payload,
    create_error_response
)

# Export all key functions for easier imports
__all__ = [
    # File Utils
    'ensure_directory_exists',
    'read_json',
    'safe_json_write',

    # Date Utils
    'format_timestamp',
    'get_current_datetime_string',
    'Stopwatch',
    'timed',

    # Format Utils
    'format_multi_index',
    'parse_multi_index',
    'coordinate_name',
    'serialize_value',
    'truncate_string',

    # Error Utils
    'ToolkitError',
    'USAGE_ERRORS',
    'log_exception',
    'format_error_message',
    'usage_payload',
    'create_error_response'
]
