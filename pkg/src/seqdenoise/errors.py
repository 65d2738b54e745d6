"""Error types shared across the toolkit.

All subclass ValueError so callers that don't care about the distinction can
catch one thing; the CLI maps them onto its exit codes.
"""


class DimensionError(ValueError):
    """Shapes or lengths of frames/sequences do not agree."""


class FormatError(ValueError):
    """Byte stream is not a valid 8-bit PGM / raw raster."""


class ParameterError(ValueError):
    """A numeric parameter is outside its valid range."""


class SequenceError(ValueError):
    """A frame-sequence directory is empty, gapped, or unreadable."""
