"""Exception types raised across :mod:`topofs`.

The command line maps them to exit codes: :class:`ValidationError` exits with 2,
:class:`DataError` and :class:`NumericalError` exit with 1.
"""


class TopoFSError(Exception):
    pass


class ValidationError(TopoFSError, ValueError):
    """A configuration or precondition was violated."""


class DataError(TopoFSError, ValueError):
    """Input data could not be read or is malformed."""


class NumericalError(TopoFSError, ArithmeticError):
    """A numerical routine failed (for example a singular linear system)."""
