"""Input validation helpers.

Images are plain 2-D numpy arrays indexed ``img[x, y]`` with ``x`` the row
(0 .. M-1) and ``y`` the column (0 .. N-1). Gray images hold ``uint8``
intensities, binary images and edge maps hold ``uint8`` values in {0, 1}.
"""

import numbers

import numpy as np


def check_gray_image(img, min_size=1, name="image"):
    """Return ``img`` as a C-contiguous 2-D ``uint8`` array.

    Integer or float input is accepted when every value is an integer in
    0..255; anything else raises ``ValueError``.
    """
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] < min_size or arr.shape[1] < min_size:
        raise ValueError(
            f"{name} must be at least {min_size}x{min_size}, got {arr.shape[0]}x{arr.shape[1]}"
        )
    if arr.dtype == np.uint8:
        return np.ascontiguousarray(arr)
    if arr.dtype == bool:
        return arr.astype(np.uint8)
    if not np.issubdtype(arr.dtype, np.number):
        raise ValueError(f"{name} must be numeric, got dtype {arr.dtype}")
    if arr.size and (arr.min() < 0 or arr.max() > 255):
        raise ValueError(f"{name} values must lie in 0..255")
    if np.issubdtype(arr.dtype, np.floating) and not np.all(np.floor(arr) == arr):
        raise ValueError(f"{name} values must be integers")
    return arr.astype(np.uint8)


def check_binary_image(bits, min_size=1, name="binary image"):
    arr = check_gray_image(bits, min_size=min_size, name=name)
    if arr.size and arr.max() > 1:
        raise ValueError(f"{name} values must be 0 or 1")
    return arr


def check_q(q, allow_any=True):
    """Validate an entropic index.

    ``q`` must be a positive real. With ``allow_any=False`` it is further
    restricted to the open interval (0, 1).
    """
    if isinstance(q, bool) or not isinstance(q, numbers.Real) or not np.isfinite(q):
        raise ValueError(f"q must be a finite real number, got {q!r}")
    if q <= 0:
        raise ValueError(f"q must be positive, got {q}")
    if not allow_any and q >= 1:
        raise ValueError(f"q must lie in (0, 1), got {q}")
    return float(q)
