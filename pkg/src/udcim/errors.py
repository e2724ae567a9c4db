"""Exception hierarchy shared across the package.

The three leaf categories map onto the CLI exit codes: configuration
errors exit 2, data errors exit 3, cap violations exit 4.
"""


class UdcimError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1
    kind = "error"


class ConfigError(UdcimError):
    """Invalid parameters, policies, or option combinations."""

    exit_code = 2
    kind = "config"


class DataError(UdcimError):
    """Malformed or inconsistent input data (edge lists, tendency files)."""

    exit_code = 3
    kind = "data"


class CapExceededError(UdcimError):
    """A configured size cap (enumeration count, model size) was exceeded."""

    exit_code = 4
    kind = "cap"
