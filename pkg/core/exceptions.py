class GridtopError(Exception):
    """Base class for every error raised by the core package."""


class DomainError(GridtopError, ValueError):
    """A precondition failed: bad parameter, non-face, mismatched universes, malformed input."""


class CapacityError(GridtopError):
    """A size cap was exceeded (64-vertex universe, enumeration cap, search budget)."""


class CertificationError(GridtopError):
    """A constructed artifact was rejected by its own checker."""


# Exit codes used by the CLI
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
