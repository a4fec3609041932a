"""Wall-clock benchmark of the hybrid detector against the baselines.

Each method gets one discarded warm-up call followed by ``runs`` timed
calls on the already decoded image; file I/O is outside the timed region.
The garbage collector is paused while timing, as ``timeit`` does.
"""

import csv
import gc
import math
import re
import time
from dataclasses import dataclass, field

from .baselines import log_edges, sobel_edges
from .edgemap import binarize_hybrid, detect_edges, thresholds_from_histogram
from .histogram import build_histogram

METHODS = ("hybrid", "sobel", "log")
PHASES = ("histogram", "thresholds", "binarize", "detect")
CSV_FIELDS = ("method", "image_id", "width", "height", "runs", "mean_seconds")
BOUNDARY_COMMENT = "# boundary=compute-only"


@dataclass
class TimingRecord:
    method: str
    image_id: str
    width: int
    height: int
    runs: int
    mean_seconds: float
    per_phase: dict = None
    times: list = field(default_factory=list)
    error: str = None

    @property
    def ok(self):
        return self.error is None


def image_ids(names):
    """CSV-safe, pairwise distinct identifiers (``[a-z0-9_]+``) for image names."""
    ids, used = [], set()
    for name in names:
        base = re.sub(r"[^a-z0-9_]+", "_", name.lower()).strip("_") or "image"
        candidate, n = base, 2
        while candidate in used:
            candidate, n = f"{base}_{n}", n + 1
        used.add(candidate)
        ids.append(candidate)
    return ids


def _hybrid_phased(img, q, clock):
    t0 = clock()
    hist = build_histogram(img)
    t1 = clock()
    ts = thresholds_from_histogram(hist, q)
    t2 = clock()
    bits = binarize_hybrid(img, ts)
    t3 = clock()
    detect_edges(bits)
    t4 = clock()
    return dict(zip(PHASES, (t1 - t0, t2 - t1, t3 - t2, t4 - t3)))


def time_method(method, img, runs=10, q=0.5, scale=4.0, sigma=2.0, zc_thresh=0.0, clock=time.perf_counter):
    """Time one method on one image. Returns ``(mean_seconds, per_run, per_phase)``.

    ``per_phase`` holds mean phase durations for ``hybrid`` and is None otherwise.
    """
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")
    if method == "hybrid":
        call = lambda: _hybrid_phased(img, q, clock)
    elif method == "sobel":
        call = lambda: sobel_edges(img, scale=scale)
    elif method == "log":
        call = lambda: log_edges(img, sigma=sigma, zc_thresh=zc_thresh)
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")

    call()
    times, phase_totals = [], dict.fromkeys(PHASES, 0.0)
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(runs):
            start = clock()
            out = call()
            times.append(clock() - start)
            if method == "hybrid":
                for k, v in out.items():
                    phase_totals[k] += v
    finally:
        if gc_was_enabled:
            gc.enable()
    per_phase = {k: v / runs for k, v in phase_totals.items()} if method == "hybrid" else None
    return sum(times) / runs, times, per_phase


def bench_image(image_id, img, runs=10, methods=METHODS, **params):
    records = []
    height, width = img.shape
    for method in methods:
        try:
            mean, times, phases = time_method(method, img, runs=runs, **params)
        except Exception as exc:  # recorded per method; the caller decides the exit status
            records.append(TimingRecord(method, image_id, width, height, 0, math.nan, error=str(exc)))
        else:
            records.append(TimingRecord(method, image_id, width, height, runs, mean, phases, times))
    return records


def write_csv(records, fh, phases=False):
    fields = list(CSV_FIELDS) + ([f"phase_{p}" for p in PHASES] if phases else [])
    fh.write(BOUNDARY_COMMENT + "\n")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(fields)
    for r in records:
        row = [r.method, r.image_id, r.width, r.height, r.runs, f"{r.mean_seconds:.9f}" if r.ok else "nan"]
        if phases:
            row += [f"{r.per_phase[p]:.9f}" if r.per_phase else "" for p in PHASES]
        writer.writerow(row)


def format_table(records):
    lines = [f"{'method':<8} {'image_id':<24} {'size':>11} {'runs':>5} {'mean_ms':>10}"]
    for r in records:
        size = f"{r.width}x{r.height}"
        mean = f"{r.mean_seconds * 1e3:10.3f}" if r.ok else f"{'error':>10}"
        lines.append(f"{r.method:<8} {r.image_id:<24} {size:>11} {r.runs:>5} {mean}")
    return "\n".join(lines)
