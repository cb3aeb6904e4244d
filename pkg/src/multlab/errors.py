"""Exception types shared across the package."""


class MultlabError(Exception):
    pass


class ConfigurationError(MultlabError):
    """Bad build/scan parameters (wrong limits, empty grids, malformed specs)."""


class RangeError(MultlabError):
    """Argument outside the range a sieve or table can answer for."""


class DomainError(MultlabError):
    """Input violates a mathematical hypothesis of the operation."""


class UnsupportedValueError(MultlabError):
    """Value cannot be represented in the requested exact form."""


class SingularityError(MultlabError):
    """Local-factor denominator vanished or went negative."""


class DegenerateSetupError(MultlabError):
    """Correlation setup with G(1) = 0; the normalized table is undefined."""


class SizeError(MultlabError):
    """Input too large for an exhaustive search."""
