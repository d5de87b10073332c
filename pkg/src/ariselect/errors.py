"""Exception types raised across the package.

Every error deliberately raised by this library derives from
:class:`AriSelectError`, so callers (and the CLI) can catch one base class.
"""


class AriSelectError(Exception):
    """Base class for all errors raised by this package."""


class MissingValueError(AriSelectError):
    """A CSV cell is empty; datasets must be complete."""


class RaggedRowError(AriSelectError):
    """A CSV row has a different number of cells than the header."""


class EmptyFileError(AriSelectError):
    """A CSV file has no header, no data rows, or no feature columns."""


class SizeOutOfRangeError(AriSelectError):
    """A requested sample size is outside [1, number of rows]."""


class LengthMismatchError(AriSelectError):
    """Two instance rows being compared have different lengths."""


class DimensionTooSmallError(AriSelectError):
    """A synthetic label function needs more features than were configured."""


class RangeUnsupportedError(AriSelectError):
    """A synthetic label function does not support the categorical range."""


class EnumerationTooLargeError(AriSelectError):
    """Full enumeration of the universe would exceed the configured cap."""


class NoScorableFeatureError(AriSelectError):
    """Every feature was flagged, leaving nothing to normalize."""


class EmptySelectionError(AriSelectError):
    """Feature selection produced an empty feature set."""
