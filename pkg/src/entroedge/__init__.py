"""Hybrid entropic thresholding and window-homogeneity edge detection."""

from .baselines import Kernel, convolve, log_edges, log_kernel, sobel_edges
from .edgemap import (
    ThresholdSet,
    binarize,
    binarize_hybrid,
    central_entropy,
    detect_edges,
    detect_hybrid,
    hybrid_thresholds,
    thresholds_from_histogram,
)
from .entropic import (
    ThresholdResult,
    class_distributions,
    pseudo_additive_combine,
    shannon_entropy,
    shannon_threshold,
    tsallis_entropy,
    tsallis_sqrt_threshold,
    tsallis_threshold,
)
from .estimators import EntropicThreshold, HybridEdgeDetector, LoGEdgeDetector, SobelEdgeDetector
from .exceptions import DegenerateHistogramError, EntroedgeError, PGMParseError
from .histogram import SparseHistogram, build_histogram, split_at
from .imgio import load_pgm, read_pgm, render_edges, save_pgm, write_pgm

__version__ = "0.1.0"
