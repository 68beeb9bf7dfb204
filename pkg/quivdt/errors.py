"""
Exceptions raised by the quivdt package.

Every exception carries the exit code that the command line front end
returns when it escapes a pipeline run.
"""
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/14 (initial version) ~ 2026/10/12 (last revision)"

__all__ = [
    'QuivdtError',
    'InputError',
    'DimensionError',
    'UnsupportedError',
    'TruncationError',
    'BudgetError',
    'CongruenceError',
    'ResampleError',
    'InterpolationError',
    'ConventionError',
    'ConsistencyError',
    'TheoremViolation',
]


class QuivdtError(Exception):
    """Base class of all package errors."""
    exit_code = 1


#------------------------------------------------------------------------------
# Input errors (exit code 2)
#------------------------------------------------------------------------------

class InputError(QuivdtError, ValueError):
    """Malformed input, option or argument.

    Parameters
    ----------
    message: str
        Description of the problem.
    line: int, optional
        1-based line number in the input text.
    column: int, optional
        1-based column number in the input text.

    Examples
    --------
    >>> str(InputError("unknown arrow 'z'", line=4, column=12))
    "line 4, column 12: unknown arrow 'z'"
    >>> InputError('bad').exit_code
    2
    """
    exit_code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f'line {line}' if column is None else \
                    f'line {line}, column {column}'
            message = f'{where}: {message}'
        super().__init__(message)


class DimensionError(InputError):
    """Dimension vector or matrix shape does not match the quiver."""


class UnsupportedError(InputError):
    """Potential or sector outside the supported class."""


class TruncationError(InputError):
    """Truncation degree too small for the potential."""


#------------------------------------------------------------------------------
# Resource and field selection errors (exit code 3)
#------------------------------------------------------------------------------

class BudgetError(QuivdtError):
    """Point budget or field size limit exceeded."""
    exit_code = 3


class CongruenceError(QuivdtError):
    """Field size violates the congruence or calibration contract."""
    exit_code = 3


class ResampleError(QuivdtError):
    """Adams operation needs counts at a field that cannot be supplied."""
    exit_code = 3

    def __init__(self, q):
        self.q = q
        super().__init__(f'counts at field size {q} are required '
                         'but no resampling callback can supply them')


class InterpolationError(QuivdtError):
    """Sampled values are not a Laurent polynomial of the expected span."""
    exit_code = 3


class ConventionError(InterpolationError):
    """Reconstructed Laurent coefficients are not integral."""


#------------------------------------------------------------------------------
# Check failures (exit code 1)
#------------------------------------------------------------------------------

class ConsistencyError(QuivdtError):
    """Internal consistency failure, e.g. framed counts not divisible by
    the group order."""
    exit_code = 1


class TheoremViolation(QuivdtError):
    """Positivity, palindromy or vanishing failed on a certified input."""
    exit_code = 1


if __name__ == "__main__":
    import doctest
    doctest.testmod()
