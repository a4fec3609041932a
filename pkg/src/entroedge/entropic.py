"""Entropy functionals and entropic threshold selection.

The threshold criteria split a sparse histogram after entry ``t`` into a
low class A (entries ``1..t``) and a high class B (entries ``t+1..k``),
renormalise each class, and pick the split that maximises

* Shannon:  ``S(A) + S(B)``
* Tsallis:  ``S_q(A) + S_q(B) + (1 - q) S_q(A) S_q(B)``
* q = 0.5:  ``a * b - 1`` with ``a``, ``b`` the per-class sums of
  square-rooted probabilities, an algebraically equivalent form of the
  Tsallis criterion (it equals half of it) that avoids the power function.

Candidates are ``t = 1 .. k-1`` so both classes are always non-empty; the
first maximiser wins ties. Objectives are evaluated for all candidates at
once from prefix/suffix sums of the integer counts.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateHistogramError


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of a threshold search.

    ``level`` is the gray level of the last entry of class A, so pixels
    ``<= level`` fall in class A. ``entry_index`` is that entry's 1-based
    position in the searched histogram and ``criterion`` the maximised
    objective.
    """

    level: int
    entry_index: int
    criterion: float


def _check_probs(probs):
    p = np.asarray(probs, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ValueError("probabilities must be a non-empty 1-D sequence")
    if np.any(p <= 0) or np.any(p > 1):
        raise ValueError("probabilities must lie in (0, 1]; strip zero entries first")
    if abs(p.sum() - 1.0) > 1e-9:
        raise ValueError(f"probabilities must sum to 1, got {p.sum()!r}")
    return p


def shannon_entropy(probs, base=math.e):
    """``-sum(p log p)``, natural log unless ``base`` is given."""
    p = _check_probs(probs)
    h = -float(np.sum(p * np.log(p)))
    return h if base == math.e else h / math.log(base)


def tsallis_entropy(probs, q):
    """``(1 - sum(p**q)) / (q - 1)`` for ``q > 0``, ``q != 1``."""
    if q == 1:
        raise ValueError("Tsallis entropy is undefined at q == 1; use shannon_entropy (the q -> 1 limit)")
    if q <= 0:
        raise ValueError(f"q must be positive, got {q}")
    p = _check_probs(probs)
    return float((1.0 - np.sum(p ** q)) / (q - 1.0))


def pseudo_additive_combine(sa, sb, q):
    """Tsallis entropy of two independent subsystems from their entropies."""
    return sa + sb + (1.0 - q) * sa * sb


def class_distributions(hist, t_idx):
    """Class masses and renormalised class distributions for a split after ``t_idx``.

    Returns ``(P_A, P_B, dist_a, dist_b)``.
    """
    k = len(hist)
    if not 1 <= t_idx < k:
        raise ValueError(f"t_idx {t_idx} must lie in 1..{k - 1} so both classes are non-empty")
    pa = float(hist.probs[:t_idx].sum())
    pb = 1.0 - pa
    # renormalise from the integer counts so a single-entry class is exactly [1.0]
    ca, cb = hist.counts[:t_idx], hist.counts[t_idx:]
    return pa, pb, ca / ca.sum(), cb / cb.sum()


def _require_split(hist):
    if len(hist) < 2:
        raise DegenerateHistogramError(
            f"no threshold separates one level (only level {int(hist.levels[0])} present)"
        )


def _prefix_suffix(values):
    """Per-candidate sums over class A and class B of a per-entry quantity."""
    head = np.cumsum(values)[:-1]
    tail = np.cumsum(values[::-1])[::-1][1:]
    return head, tail


def _class_sizes(hist):
    return _prefix_suffix(hist.counts.astype(float))


def shannon_objective(hist, base=math.e):
    """``S(A) + S(B)`` for every candidate split ``t = 1..k-1``.

    With class size ``n`` and member counts ``c_i`` the class entropy is
    ``log n - sum(c_i log c_i) / n``.
    """
    _require_split(hist)
    log = np.log2 if base == 2 else np.log
    c = hist.counts.astype(float)
    na, nb = _class_sizes(hist)
    la, lb = _prefix_suffix(c * log(c))
    obj = (log(na) - la / na) + (log(nb) - lb / nb)
    if base not in (2, math.e):
        obj = obj / math.log(base)
    return obj


def tsallis_objective(hist, q):
    """Pseudo-additive Tsallis criterion for every candidate split."""
    if q == 1:
        raise ValueError("the Tsallis criterion needs q != 1; use shannon_threshold for q == 1")
    if q <= 0:
        raise ValueError(f"q must be positive, got {q}")
    _require_split(hist)
    c = hist.counts.astype(float)
    na, nb = _class_sizes(hist)
    pa_sum, pb_sum = _prefix_suffix(c ** q)
    sa = (1.0 - pa_sum / na ** q) / (q - 1.0)
    sb = (1.0 - pb_sum / nb ** q) / (q - 1.0)
    return pseudo_additive_combine(sa, sb, q)


def tsallis_sqrt_objective(hist):
    """``a * b - 1`` for every candidate split (the q = 0.5 criterion)."""
    _require_split(hist)
    root = np.sqrt(hist.counts.astype(float))
    na, nb = _class_sizes(hist)
    ra, rb = _prefix_suffix(root)
    return (ra / np.sqrt(na)) * (rb / np.sqrt(nb)) - 1.0


def _select(hist, objective):
    i = int(np.argmax(objective))
    return ThresholdResult(level=int(hist.levels[i]), entry_index=i + 1, criterion=float(objective[i]))


def shannon_threshold(hist, base=math.e):
    """Maximum-entropy threshold (sum of class Shannon entropies)."""
    return _select(hist, shannon_objective(hist, base=base))


def tsallis_threshold(hist, q):
    """Tsallis threshold of entropic index ``q``."""
    return _select(hist, tsallis_objective(hist, q))


def tsallis_sqrt_threshold(hist):
    """Tsallis threshold at q = 0.5 via the square-root criterion."""
    return _select(hist, tsallis_sqrt_objective(hist))
