"""Exception hierarchy shared by the library and the command line."""


class EntroedgeError(Exception):
    """Base class for every error raised by this package."""


class PGMParseError(EntroedgeError, ValueError):
    """A PGM byte stream could not be decoded.

    ``element`` names the part of the file that was rejected
    (``"magic"``, ``"width"``, ``"maxval"``, ``"raster"``, ...).
    """

    def __init__(self, element, message):
        self.element = element
        super().__init__(f"{element}: {message}")


class BadMagicError(PGMParseError):
    pass


class HeaderTokenError(PGMParseError):
    pass


class MaxvalError(PGMParseError):
    pass


class TruncatedDataError(PGMParseError):
    pass


class DegenerateHistogramError(EntroedgeError, ValueError):
    """No threshold can separate the gray levels of an image or image part.

    ``part`` is ``"image"`` for the full histogram, ``"part1"`` for the
    levels at or below the global threshold and ``"part2"`` for those above.
    """

    def __init__(self, message, part="image"):
        self.part = part
        super().__init__(message)
