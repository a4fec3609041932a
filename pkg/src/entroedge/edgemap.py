"""Binarization and the 3x3 homogeneity edge detector.

A pixel of a binary image is an edge when at most 6 of the 9 cells of its
3x3 window (itself included) share its value, i.e. when the probability
``p_c`` of the central value inside the window is at most 6/9. Windows
with ``p_c`` of 7/9, 8/9 or 9/9 are considered homogeneous. Border pixels
have no full window and are never edges.
"""

import math
from dataclasses import dataclass

import numpy as np

from .entropic import shannon_threshold, tsallis_sqrt_threshold, tsallis_threshold
from .exceptions import DegenerateHistogramError
from .histogram import build_histogram, split_at
from .validation import check_binary_image, check_gray_image, check_q

#: Largest window match count (center included) that still marks an edge.
MAX_EDGE_MATCHES = 6


@dataclass(frozen=True)
class ThresholdSet:
    """The three thresholds of the hybrid scheme.

    ``t1`` is the global Shannon threshold; ``t2`` and ``t3`` are Tsallis
    thresholds of the levels ``<= t1`` and ``> t1`` respectively.
    ``criteria`` optionally records the maximised objective of each.
    """

    t1: int
    t2: int
    t3: int
    q: float = 0.5
    criteria: tuple = None

    def __post_init__(self):
        _check_order(self)


def _check_order(ts):
    if not (ts.t2 <= ts.t1 < ts.t3):
        raise ValueError(f"thresholds must satisfy t2 <= t1 < t3, got t1={ts.t1} t2={ts.t2} t3={ts.t3}")


def binarize(img, t):
    """0 where the pixel is ``<= t``, 1 elsewhere."""
    img = check_gray_image(img)
    return (img > t).astype(np.uint8)


def binarize_hybrid(img, ts):
    """Single binary image for all three thresholds.

    A pixel is 1 iff ``t2 <= v < t1`` or ``v >= t3``. A pixel equal to
    ``t1`` is therefore 0.
    """
    _check_order(ts)
    img = check_gray_image(img)
    low = (img >= ts.t2) & (img < ts.t1)
    return (low | (img >= ts.t3)).astype(np.uint8)


def central_entropy(p_c):
    """``-p_c ln p_c`` for the central-value probability of a 3x3 window."""
    p = float(p_c)
    if not 0 < p <= 1:
        raise ValueError(f"p_c must lie in (0, 1], got {p_c}")
    return -p * math.log(p)


def window_matches(bits):
    """Number of cells in each interior 3x3 window equal to its center (1..9).

    Returns an ``(M-2, N-2)`` array aligned with the interior pixels.
    """
    m, n = bits.shape
    ones = np.zeros((m - 2, n - 2), dtype=np.uint8)
    for dx in range(3):
        for dy in range(3):
            ones += bits[dx:dx + m - 2, dy:dy + n - 2]
    center = bits[1:-1, 1:-1]
    return np.where(center == 1, ones, 9 - ones)


def detect_edges(bits):
    """Edge map of a binary image; border rows and columns are 0."""
    bits = check_binary_image(bits, min_size=3)
    edges = np.zeros_like(bits)
    edges[1:-1, 1:-1] = window_matches(bits) <= MAX_EDGE_MATCHES
    return edges


def _local_threshold(hist, q, part):
    if len(hist) < 2:
        raise DegenerateHistogramError(
            f"{part} holds a single gray level ({int(hist.levels[0])}); no local threshold exists",
            part=part,
        )
    if q == 0.5:
        return tsallis_sqrt_threshold(hist)
    if q == 1:
        return shannon_threshold(hist)
    return tsallis_threshold(hist, q)


def thresholds_from_histogram(hist, q=0.5):
    """Global Shannon threshold plus Tsallis thresholds of both parts.

    ``q == 1`` selects the Shannon criterion for the parts as well.
    """
    q = check_q(q)
    if len(hist) < 2:
        raise DegenerateHistogramError(
            f"image holds a single gray level ({int(hist.levels[0])}); no threshold exists",
            part="image",
        )
    r1 = shannon_threshold(hist)
    low, high = split_at(hist, r1.entry_index)
    r2 = _local_threshold(low, q, "part1")
    r3 = _local_threshold(high, q, "part2")
    return ThresholdSet(
        t1=r1.level, t2=r2.level, t3=r3.level, q=q,
        criteria=(r1.criterion, r2.criterion, r3.criterion),
    )


def hybrid_thresholds(img, q=0.5):
    return thresholds_from_histogram(build_histogram(img), q)


def detect_hybrid(img, q=0.5):
    """Hybrid entropic edge detection. Returns ``(edges, thresholds)``."""
    img = check_gray_image(img, min_size=3)
    ts = hybrid_thresholds(img, q)
    return detect_edges(binarize_hybrid(img, ts)), ts
