"""Sparse gray-level histograms.

Only the levels that actually occur in an image are kept, so threshold
searches run over the ``k`` distinct levels rather than all 256. Entry
indices are 1-based throughout the public API: index ``t`` splits a
histogram into entries ``1..t`` and ``t+1..k``.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateHistogramError
from .validation import check_gray_image


@dataclass(frozen=True, eq=False)
class SparseHistogram:
    """Observed gray levels (strictly ascending) and their positive counts."""

    levels: np.ndarray
    counts: np.ndarray

    def __post_init__(self):
        levels = np.array(self.levels, dtype=np.int64)
        counts = np.array(self.counts, dtype=np.int64)
        if levels.ndim != 1 or levels.shape != counts.shape:
            raise ValueError("levels and counts must be 1-D arrays of equal length")
        if levels.size == 0:
            raise ValueError("a histogram needs at least one entry")
        if np.any(counts <= 0):
            raise ValueError("counts must be positive; strip zero-count levels first")
        if np.any(np.diff(levels) <= 0):
            raise ValueError("levels must be strictly ascending")
        if levels[0] < 0 or levels[-1] > 255:
            raise ValueError("levels must lie in 0..255")
        levels.flags.writeable = False
        counts.flags.writeable = False
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "counts", counts)

    @property
    def total(self):
        return int(self.counts.sum())

    @property
    def probs(self):
        return self.counts / self.total

    @property
    def entries(self):
        """``(level, count, prob)`` triples in ascending level order."""
        total = self.total
        return [(int(l), int(c), int(c) / total) for l, c in zip(self.levels, self.counts)]

    def __len__(self):
        return int(self.levels.size)

    def level_at(self, idx):
        """Gray level of the 1-based entry ``idx``."""
        if not 1 <= idx <= len(self):
            raise IndexError(f"entry index {idx} out of range 1..{len(self)}")
        return int(self.levels[idx - 1])

    def __repr__(self):
        return f"SparseHistogram(k={len(self)}, total={self.total})"


def build_histogram(img):
    """Count the gray levels of ``img``, dropping levels that never occur."""
    img = check_gray_image(img, min_size=0)
    if img.size == 0:
        raise DegenerateHistogramError("cannot build a histogram of an empty image")
    full = np.bincount(img.ravel(), minlength=256)
    levels = np.flatnonzero(full)
    return SparseHistogram(levels, full[levels])


def split_at(hist, idx):
    """Split into entries ``1..idx`` and ``idx+1..k``; each part renormalises itself."""
    k = len(hist)
    if not 1 <= idx < k:
        raise ValueError(f"split index {idx} must lie in 1..{k - 1} so both parts are non-empty")
    return (
        SparseHistogram(hist.levels[:idx], hist.counts[:idx]),
        SparseHistogram(hist.levels[idx:], hist.counts[idx:]),
    )
