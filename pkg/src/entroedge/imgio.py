"""Reading and writing 8-bit grayscale PGM images (Netpbm P2 and P5)."""

import numpy as np

from .exceptions import BadMagicError, HeaderTokenError, MaxvalError, TruncatedDataError
from .validation import check_binary_image, check_gray_image

_WHITESPACE = b" \t\r\n\v\f"


def _next_token(data, pos):
    """Return ``(token, end)`` for the next header token at or after ``pos``.

    Comments run from ``#`` to end of line and are skipped.
    """
    n = len(data)
    while pos < n:
        c = data[pos:pos + 1]
        if c == b"#":
            while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
        elif c in _WHITESPACE:
            pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b"#":
        pos += 1
    return data[start:pos], pos


def _header_int(data, pos, element):
    token, pos = _next_token(data, pos)
    if not token:
        raise TruncatedDataError(element, "header ended before this field")
    if not token.isdigit():
        raise HeaderTokenError(element, f"expected a non-negative integer, got {token!r}")
    return int(token), pos


def read_pgm(data):
    """Decode a P2 or P5 PGM byte string into a ``(height, width)`` uint8 array."""
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise BadMagicError("magic", f"expected b'P2' or b'P5', got {magic!r}")
    if len(data) > 2 and data[2:3] not in _WHITESPACE and data[2:3] != b"#":
        raise BadMagicError("magic", f"unexpected bytes after magic: {data[:3]!r}")

    width, pos = _header_int(data, 2, "width")
    height, pos = _header_int(data, pos, "height")
    maxval, pos = _header_int(data, pos, "maxval")
    if width < 1:
        raise HeaderTokenError("width", "must be positive")
    if height < 1:
        raise HeaderTokenError("height", "must be positive")
    if not 1 <= maxval <= 255:
        raise MaxvalError("maxval", f"only 8-bit images (1..255) are supported, got {maxval}")

    npix = width * height
    if magic == b"P5":
        if pos >= len(data) or data[pos:pos + 1] not in _WHITESPACE:
            raise TruncatedDataError("raster", "missing separator after maxval")
        raster = data[pos + 1:pos + 1 + npix]
        if len(raster) < npix:
            raise TruncatedDataError(
                "raster", f"expected {npix} bytes for {width}x{height}, got {len(raster)}"
            )
        pixels = np.frombuffer(raster, dtype=np.uint8)
    else:
        values = []
        while len(values) < npix:
            token, pos = _next_token(data, pos)
            if not token:
                raise TruncatedDataError(
                    "raster", f"expected {npix} values for {width}x{height}, got {len(values)}"
                )
            if not token.isdigit():
                raise HeaderTokenError("raster", f"non-numeric pixel value {token!r}")
            values.append(int(token))
        pixels = np.array(values, dtype=np.int64)
    if pixels.max() > maxval:
        raise MaxvalError("raster", f"pixel value {int(pixels.max())} exceeds maxval {maxval}")
    return pixels.astype(np.uint8).reshape(height, width)


def write_pgm(img):
    """Encode an image as binary P5 with maxval 255."""
    img = check_gray_image(img)
    height, width = img.shape
    return b"P5\n%d %d\n255\n" % (width, height) + img.tobytes()


def load_pgm(path):
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def save_pgm(path, img):
    payload = write_pgm(img)
    with open(path, "wb") as fh:
        fh.write(payload)


def render_edges(edges):
    """Map an edge map to a viewable image: edge pixels white (255), others black."""
    edges = check_binary_image(edges, name="edge map")
    return edges * np.uint8(255)
