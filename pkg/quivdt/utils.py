"""
Utility Functions for quivdt package.

Holds the package defaults, the option enums shared by the library and the
command line front end, and the logging setup.
"""
__version__ = "1.2"
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/14 (initial version) ~ 2026/10/09 (last revision)"

__all__ = [
    'DEFAULT_TRUNCATION',
    'DEFAULT_MAX_TOTAL_DEGREE',
    'DEFAULT_POINT_BUDGET',
    'DEFAULT_CHUNK_SIZE',
    'DEFAULT_JOBS',
    'MAX_FIELD_SIZE',
    'OutputFormat',
    'Carrier',
    'SpecializeMode',
    'Command',
    'parse_enum',
    'setup_file_logging',
    'setup_console_logging',
]

import sys
import logging
from enum import Enum

#------------------------------------------------------------------------------
# Defaults
#------------------------------------------------------------------------------

DEFAULT_TRUNCATION = 24         # N_max of the Jacobi reduction
DEFAULT_MAX_TOTAL_DEGREE = 2    # G, bound on |gamma| of graded series
DEFAULT_POINT_BUDGET = 2**34    # points enumerated per count
DEFAULT_CHUNK_SIZE = 2**16      # points per enumeration chunk
DEFAULT_JOBS = 1                # counting threads
MAX_FIELD_SIZE = 4096           # largest field with log tables

#------------------------------------------------------------------------------
# Enums
#------------------------------------------------------------------------------

class OutputFormat(Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class Carrier(Enum):
    NUMERIC = "numeric"     # exact rationals at a fixed field size
    SYMBOLIC = "symbolic"   # Laurent polynomials in the line element s


class SpecializeMode(Enum):
    WTM = "wtm"
    CHI = "chi"


class Command(Enum):
    JACOBI = "jacobi"
    MILNOR = "milnor"
    SPECTRUM = "spectrum"
    BPS = "bps"
    GV = "gv"
    FRAMED_CHECK = "framed-check"
    VERIFY = "verify"
    COUNT = "count"


def parse_enum(enum_cls, value):
    """Convert a string (or enum member) to a member of `enum_cls`.

    Parameters
    ----------
    enum_cls: type
        The Enum class.
    value: str or Enum
        Member value such as 'json', or a member itself.

    Returns
    -------
    Enum
        The matching member.

    Raises
    ------
    ValueError
        If no member has the given value.

    Examples
    --------
    >>> parse_enum(OutputFormat, 'csv')
    <OutputFormat.CSV: 'csv'>
    >>> parse_enum(SpecializeMode, SpecializeMode.CHI)
    <SpecializeMode.CHI: 'chi'>
    >>> parse_enum(Command, 'plot')
    Traceback (most recent call last):
    ...
    ValueError: 'plot' is not a valid Command
    """
    if isinstance(value, enum_cls):
        return value
    return enum_cls(value)

#------------------------------------------------------------------------------
# Logging
#------------------------------------------------------------------------------

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


def setup_file_logging(log_fn=None, name='quivdt'):
    """Send the package log records to a file instead of the console.

    Parameters
    ----------
    log_fn: str, optional
        Path of the log file. Defaults to '<name>.log'.
    name: str, optional
        Logger name. Defaults to the package logger.

    Returns
    -------
    logging.FileHandler
        The attached handler.
    """
    log_fn = log_fn or f'{name}.log'
    print(f'Logging to file: {log_fn}', file=sys.stderr)

    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)

    file_handler = logging.FileHandler(log_fn)
    file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(file_handler)

    # Keep the records out of the console
    logger.propagate = False
    return file_handler


def setup_console_logging(verbose=False, name='quivdt'):
    """Attach a stderr handler at INFO level (DEBUG when `verbose`)."""
    logger = logging.getLogger(name)
    level = logging.DEBUG if verbose else logging.INFO
    logger.setLevel(level)

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    stream_handler.setLevel(level)
    logger.addHandler(stream_handler)
    return stream_handler


if __name__ == "__main__":
    import doctest
    doctest.testmod()
