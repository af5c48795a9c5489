"""
Date Utility Functions

Timestamps for report files and elapsed-time measurement for verifications.
"""

import datetime
import logging
import time
from contextlib import contextmanager

logger = logging.getLogger(__name__)


def format_timestamp(timestamp=None, format_string="%Y-%m-%d %H:%M:%S"):
    """
    Format a timestamp according to the specified format.

    Args:
        timestamp (datetime/int/float, optional): Timestamp to format, uses current time if None
        format_string (str): Format string for the output

    Returns:
        str: Formatted timestamp string
    """
    if timestamp is None:
        dt = datetime.datetime.now()
    elif isinstance(timestamp, (int, float)):
        dt = datetime.datetime.fromtimestamp(timestamp)
    elif isinstance(timestamp, datetime.datetime):
        dt = timestamp
    else:
        raise ValueError(f"Unsupported timestamp type: {type(timestamp)}")
    return dt.strftime(format_string)


def get_current_datetime_string(format_string="%Y%m%d-%H%M%S"):
    """Current date/time as a string, used in report file names."""
    return format_timestamp(datetime.datetime.now(), format_string)


class Stopwatch:
    """Wall-clock timer reporting whole milliseconds."""

    def __init__(self):
        self.start = time.perf_counter()
        self.stop = None

    @property
    def elapsed_ms(self):
        end = self.stop if self.stop is not None else time.perf_counter()
        return int(round((end - self.start) * 1000))


@contextmanager
def timed(label=None):
    """
    Context manager yielding a Stopwatch that is stopped on exit.

    Args:
        label (str, optional): Logged at debug level with the elapsed time
    """
    watch = Stopwatch()
    try:
        yield watch
    finally:
        watch.stop = time.perf_counter()
        if label:
            logger.debug(f"{label} took {watch.elapsed_ms} ms")
