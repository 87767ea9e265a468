"""
Exception hierarchy.

Every error raised on purpose by the package derives from QSpectraError and
carries the exit code the command line should use for it.
"""

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


class QSpectraError(Exception):
    """Base class for all package errors."""
    exit_code = EXIT_USAGE


class InputError(QSpectraError):
    """Bad input supplied by the caller."""


class Graph6ParseError(InputError):
    """Malformed graph6 text; `offset` is the byte where decoding failed."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListParseError(InputError):
    """Malformed edge-list text; `line` is 1-based."""

    def __init__(self, message, line):
        super().__init__(f"{message} (line {line})")
        self.line = line


class InvalidGraphError(InputError):
    """A graph violates a precondition (loops, bad labels, wrong class...)."""


class InvalidMatrixError(InputError):
    """A matrix is not square, not symmetric, or not integral."""


class ConfigError(InputError):
    """Invalid configuration value."""


class FamilyError(InputError):
    """Unknown family id or order below the family minimum."""


class TransferError(InputError):
    """Transfer precondition violated; `vertex` names the offending w_i."""

    def __init__(self, message, vertex):
        super().__init__(message)
        self.vertex = vertex


class WalkGuardError(InputError):
    """Explicit walk enumeration refused because the instance is too large."""


class EnumerationRangeError(InputError):
    """Order outside the supported enumeration range."""


class EmptyClassError(InputError):
    """The requested tricyclic class has no members at this order."""


class EigenSolverError(QSpectraError):
    """Jacobi iteration did not reach the requested tolerance."""

    def __init__(self, residual, sweeps):
        super().__init__(
            f"Jacobi eigensolver did not converge after {sweeps} sweeps (residual {residual:.3e})"
        )
        self.residual = residual
        self.sweeps = sweeps
