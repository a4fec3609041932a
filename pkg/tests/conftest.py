import sys
from pathlib import Path

import numpy as np
import pytest

from entroedge.histogram import SparseHistogram

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS = pytest.StashKey[dict]()


def random_histogram(rng, kmin=2, kmax=256, cmax=1000):
    k = int(rng.integers(kmin, kmax + 1))
    levels = np.sort(rng.choice(256, size=k, replace=False))
    counts = rng.integers(1, cmax + 1, size=k)
    return SparseHistogram(levels, counts)


def four_band(size=64, levels=(40, 90, 160, 220), vertical=True):
    """Equal-population bands, one per level."""
    band = np.repeat(np.array(levels, dtype=np.uint8), size // len(levels))
    img = np.tile(band, (size, 1))
    return img if vertical else img.T.copy()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the build")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    results = item.config.stash.setdefault(_RESULTS, {})
    if report.when == "call" or report.failed:
        results.setdefault(marker.args, "PASS")
        if report.failed:
            results[marker.args] = "FAIL"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(results.items()):
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}")


def class_stripe_image(rng, shape=(24, 24)):
    """Random thresholds and a stripe image whose levels avoid them.

    The thresholds t2 < t1 < t3 cut 0..255 into four level classes. Stripes
    are at least two pixels wide, run along a random axis, and neighbouring
    stripes always come from neighbouring classes, so no 3x3 window ever
    sees two classes that are not adjacent in level order. Within a stripe
    the levels are random but strictly inside the class interval.
    """
    t2 = int(rng.integers(10, 80))
    t1 = int(rng.integers(t2 + 10, 160))
    t3 = int(rng.integers(t1 + 10, 240))
    bounds = [(0, t2 - 1), (t2 + 1, t1 - 1), (t1 + 1, t3 - 1), (t3 + 1, 255)]
    m, n = shape
    length = n if rng.random() < 0.5 else m
    cls = int(rng.integers(0, 4))
    labels = []
    while len(labels) < length:
        labels += [cls] * int(rng.integers(2, 6))
        cls = min(3, cls + 1) if cls == 0 or (cls < 3 and rng.random() < 0.5) else cls - 1
    labels = np.array(labels[:length])
    if length == n:
        grid = np.broadcast_to(labels[None, :], shape)
    else:
        grid = np.broadcast_to(labels[:, None], shape)
    lo = np.array([b[0] for b in bounds])[grid]
    hi = np.array([b[1] for b in bounds])[grid]
    img = rng.integers(lo, hi + 1).astype(np.uint8)
    return img, (t1, t2, t3)
