"""scikit-learn style wrappers around the detectors.

Each estimator takes a single 2-D grayscale image as ``X``. ``fit`` learns
whatever depends on the image statistics (the entropic thresholds) and
``transform`` returns a 0/1 ``uint8`` array of the same shape, so a fitted
detector can be re-applied to other images with frozen thresholds.
"""

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import baselines
from .edgemap import binarize, binarize_hybrid, detect_edges, thresholds_from_histogram
from .entropic import shannon_threshold, tsallis_sqrt_threshold, tsallis_threshold
from .histogram import build_histogram
from .validation import check_gray_image, check_q


class EntropicThreshold(TransformerMixin, BaseEstimator):
    """Single global entropic threshold.

    Parameters
    ----------
    criterion : {"shannon", "tsallis"}, default="shannon"
    q : float, default=0.5
        Entropic index for ``criterion="tsallis"``; ignored otherwise.

    Attributes
    ----------
    histogram_ : SparseHistogram
    threshold_ : ThresholdResult
    """

    def __init__(self, criterion="shannon", q=0.5):
        self.criterion = criterion
        self.q = q

    def fit(self, X, y=None):
        hist = build_histogram(check_gray_image(X))
        if self.criterion == "shannon":
            result = shannon_threshold(hist)
        elif self.criterion == "tsallis":
            q = check_q(self.q)
            result = tsallis_sqrt_threshold(hist) if q == 0.5 else tsallis_threshold(hist, q)
        else:
            raise ValueError(f"criterion must be 'shannon' or 'tsallis', got {self.criterion!r}")
        self.histogram_ = hist
        self.threshold_ = result
        return self

    def transform(self, X):
        check_is_fitted(self, "threshold_")
        return binarize(X, self.threshold_.level)


class HybridEdgeDetector(TransformerMixin, BaseEstimator):
    """Shannon global threshold refined by two Tsallis local thresholds,
    followed by the 3x3 homogeneity detector.

    Parameters
    ----------
    q : float, default=0.5
        Entropic index of the local thresholds.
    allow_any_q : bool, default=True
        When False, ``q`` must lie in (0, 1).

    Attributes
    ----------
    histogram_ : SparseHistogram
    thresholds_ : ThresholdSet
    """

    def __init__(self, q=0.5, allow_any_q=True):
        self.q = q
        self.allow_any_q = allow_any_q

    def fit(self, X, y=None):
        q = check_q(self.q, allow_any=self.allow_any_q)
        self.histogram_ = build_histogram(check_gray_image(X))
        self.thresholds_ = thresholds_from_histogram(self.histogram_, q)
        return self

    def transform(self, X):
        check_is_fitted(self, "thresholds_")
        X = check_gray_image(X, min_size=3)
        return detect_edges(binarize_hybrid(X, self.thresholds_))


class _StatelessDetector(TransformerMixin, BaseEstimator):
    def fit(self, X, y=None):
        check_gray_image(X)
        return self

    def __sklearn_is_fitted__(self):
        return True


class SobelEdgeDetector(_StatelessDetector):
    """Sobel gradient magnitude above ``scale`` times its image mean."""

    def __init__(self, scale=4.0):
        self.scale = scale

    def transform(self, X):
        return baselines.sobel_edges(X, scale=self.scale)


class LoGEdgeDetector(_StatelessDetector):
    """Zero crossings of a Laplacian-of-Gaussian response."""

    def __init__(self, sigma=2.0, zc_thresh=0.0):
        self.sigma = sigma
        self.zc_thresh = zc_thresh

    def transform(self, X):
        return baselines.log_edges(X, sigma=self.sigma, zc_thresh=self.zc_thresh)
