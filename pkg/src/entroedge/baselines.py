"""Classical convolution edge detectors used as comparison baselines.

Both detectors return edge maps with the same conventions as the entropic
detector (uint8 0/1, border rows and columns cleared).
"""

import math
from dataclasses import dataclass

import numpy as np

from .validation import check_gray_image


@dataclass(frozen=True, eq=False)
class Kernel:
    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] % 2 == 0:
            raise ValueError(f"kernel must be square with odd size, got shape {w.shape}")
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)

    @property
    def size(self):
        return self.weights.shape[0]


SOBEL_X = Kernel([[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]])
SOBEL_Y = Kernel([[-1, -2, -1], [0, 0, 0], [1, 2, 1]])


def log_kernel(sigma=2.0):
    """Laplacian-of-Gaussian kernel of size ``2*ceil(3*sigma)+1``, shifted to sum to zero."""
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    half = math.ceil(3 * sigma)
    ax = np.arange(-half, half + 1, dtype=float)
    xx, yy = np.meshgrid(ax, ax, indexing="ij")
    r2 = xx ** 2 + yy ** 2
    w = (r2 - 2 * sigma ** 2) / sigma ** 4 * np.exp(-r2 / (2 * sigma ** 2))
    return Kernel(w - w.mean())


def convolve(img, kernel):
    """2-D convolution with edge-replicated borders; output has the input's shape."""
    if not isinstance(kernel, Kernel):
        kernel = Kernel(kernel)
    arr = np.asarray(img, dtype=float)
    if arr.ndim != 2:
        raise ValueError(f"image must be 2-D, got shape {arr.shape}")
    s = kernel.size
    if arr.shape[0] < s or arr.shape[1] < s:
        raise ValueError(f"kernel of size {s} is larger than the {arr.shape[0]}x{arr.shape[1]} image")
    h = s // 2
    padded = np.pad(arr, h, mode="edge")
    m, n = arr.shape
    out = np.zeros((m, n))
    # true convolution: weight (i, j) multiplies the pixel at offset (h - i, h - j)
    flipped = kernel.weights[::-1, ::-1]
    for i in range(s):
        for j in range(s):
            wt = flipped[i, j]
            if wt != 0:
                out += wt * padded[i:i + m, j:j + n]
    return out


def _clear_border(edges):
    edges[0, :] = edges[-1, :] = 0
    edges[:, 0] = edges[:, -1] = 0
    return edges


def sobel_magnitude(img):
    img = check_gray_image(img, min_size=3)
    return np.hypot(convolve(img, SOBEL_X), convolve(img, SOBEL_Y))


def sobel_edges(img, scale=4.0):
    """Edges where the Sobel gradient magnitude exceeds ``scale`` times its mean."""
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    mag = sobel_magnitude(img)
    edges = (mag > scale * mag.mean()).astype(np.uint8)
    return _clear_border(edges)


def zero_crossings(response, zc_thresh=0.0):
    """Mark sign changes between horizontal or vertical neighbours.

    Of each crossing pair the pixel with the smaller absolute response is
    marked, the upper/left one on a tie. Pairs whose absolute difference is
    not above ``zc_thresh`` are ignored. Round-off is absorbed by a tolerance
    of 1e-9 times the peak magnitude: smaller responses count as zero and
    smaller magnitude differences as ties.
    """
    r = np.array(response, dtype=float)
    tol = 1e-9 * (np.abs(r).max() if r.size else 0.0)
    r[np.abs(r) <= tol] = 0.0
    edges = np.zeros(r.shape, dtype=np.uint8)
    for axis in (0, 1):
        a = r[:-1, :] if axis == 0 else r[:, :-1]
        b = r[1:, :] if axis == 0 else r[:, 1:]
        cross = (a * b < 0) & (np.abs(a - b) > zc_thresh)
        first = cross & (np.abs(a) <= np.abs(b) + tol)
        second = cross & ~first
        if axis == 0:
            edges[:-1, :] |= first
            edges[1:, :] |= second
        else:
            edges[:, :-1] |= first
            edges[:, 1:] |= second
    return edges


def log_edges(img, sigma=2.0, zc_thresh=0.0):
    """Zero crossings of the Laplacian-of-Gaussian response."""
    if zc_thresh < 0:
        raise ValueError(f"zc_thresh must be non-negative, got {zc_thresh}")
    img = check_gray_image(img)
    response = convolve(img, log_kernel(sigma))
    return _clear_border(zero_crossings(response, zc_thresh))
