"""
Error taxonomy for pancake-coloring.

Every error derives from PancakeError and, where a caller would naturally
catch a builtin, from that builtin as well.
"""


class PancakeError(Exception):
    """Base class for all errors raised by this package."""


class RangeError(PancakeError, ValueError):
    """A numeric argument is outside its admitted range."""


class MembershipError(PancakeError, ValueError):
    """A permutation is not a vertex of the view it was used with."""


class DomainError(PancakeError, ValueError):
    """A map was evaluated outside the set it is defined on."""


class CapacityError(PancakeError, ValueError):
    """The requested work exceeds the enumeration bound."""


class IdentityConflictError(PancakeError, ValueError):
    """A dominating-set id names the same element as first and last."""


class ConfigurationError(PancakeError, ValueError):
    """Configuration (environment, block scheme, base tables) is invalid."""


class SizeError(PancakeError, ValueError):
    """An explicit graph is too large for the brute-force oracle."""


class ColoringFormatError(PancakeError, ValueError):
    """A coloring file does not follow the coloring-file format."""


class UsageError(PancakeError):
    """Command-line usage error."""
