"""Exception types raised by the library.

Map-loading problems derive from :class:`MapError`; everything else derives
from :class:`ValueError` directly so callers can catch broadly or precisely.
"""


class MapError(ValueError):
    """A map file or map construction violates the format contract."""


class RaggedRowsError(MapError):
    """ASCII map rows have unequal lengths."""


class BadCharError(MapError):
    """ASCII map contains a character outside '.', '#', 'S', 'G'."""


class MissingOrDuplicateStartError(MapError):
    """ASCII map does not contain exactly one 'S'."""


class MissingOrDuplicateGoalError(MapError):
    """ASCII map does not contain exactly one 'G'."""


class StartOrGoalOnObstacleError(MapError):
    """Start or goal position lands on an obstacle cell."""


class OutOfBoundsError(MapError):
    """A position lies outside the grid rectangle."""


class MalformedHeaderError(MapError):
    """PGM data is not a valid P2/P5 image with maxval <= 255."""


class TruncatedDataError(MapError):
    """PGM raster holds fewer samples than width * height."""


class OriginInvalidError(ValueError):
    """Ray origin is out of bounds or on an obstacle."""


class PoseInvalidError(ValueError):
    """Sweep pose is out of bounds or on an obstacle."""


class DegenerateCandidateError(ValueError):
    """Candidate coincides with the current position."""


class NoCandidatesError(ValueError):
    """Winner selection was asked to choose from an empty candidate list."""


class InvalidConfigError(ValueError):
    """A configuration value violates its documented range."""


class TraceMapMismatchError(ValueError):
    """A trace document does not describe the supplied map."""


class GenerationExhaustedError(RuntimeError):
    """Map generation could not produce a feasible map within the retry budget."""
