"""Label space discretization: lifting scalars to staircase vectors and back.

A value t in [labels[0], labels[-1]] is represented by the vector with
``interval`` leading ones, then ``alpha`` in [0, 1], then zeros, where
``t = labels[interval] + alpha * (labels[interval+1] - labels[interval])``.
Intervals are indexed 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class LabelSet:
    """Strictly increasing labels and the derived interval widths."""

    labels: np.ndarray
    gamma_tilde: np.ndarray = field(init=False)

    def __post_init__(self):
        labels = np.asarray(self.labels, dtype=np.float64)
        if labels.ndim != 1 or labels.size < 2:
            raise ValueError("need at least two labels")
        widths = np.diff(labels)
        if not np.all(widths > 0):
            raise ValueError("labels must be strictly increasing")
        labels.setflags(write=False)
        widths.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "gamma_tilde", widths)

    @property
    def n_labels(self) -> int:
        return self.labels.size

    @property
    def l(self) -> int:
        """Number of intervals, i.e. channels of lifted vectors."""
        return self.labels.size - 1

    @property
    def vmin(self) -> float:
        return float(self.labels[0])

    @property
    def vmax(self) -> float:
        return float(self.labels[-1])


@dataclass(frozen=True)
class SublabelIndex:
    """Interval index (0-based) plus position alpha within the interval."""

    interval: int
    alpha: float


def lift(value: float, labels: LabelSet) -> tuple[SublabelIndex, np.ndarray]:
    """Map a scalar into (interval, alpha) and its staircase vector.

    A value equal to an interior label is assigned to the interval to its
    right (alpha = 0), so round trips are deterministic.
    """
    value = float(value)
    if not (labels.vmin <= value <= labels.vmax):
        raise ValueError(f"value {value} outside label range [{labels.vmin}, {labels.vmax}]")
    k = int(np.searchsorted(labels.labels, value, side="right")) - 1
    k = min(k, labels.l - 1)
    alpha = (value - labels.labels[k]) / labels.gamma_tilde[k]
    alpha = float(min(max(alpha, 0.0), 1.0))
    vec = np.zeros(labels.l)
    vec[:k] = 1.0
    vec[k] = alpha
    return SublabelIndex(k, alpha), vec


def staircase_vector(idx: SublabelIndex, labels: LabelSet) -> np.ndarray:
    vec = np.zeros(labels.l)
    vec[: idx.interval] = 1.0
    vec[idx.interval] = idx.alpha
    return vec


def unlift(vec: np.ndarray, labels: LabelSet) -> float:
    """Inverse of :func:`lift` on staircase vectors; applied as-is to any vector."""
    vec = np.asarray(vec, dtype=np.float64)
    return float(labels.vmin + vec @ labels.gamma_tilde)


def lift_field(values: np.ndarray, labels: LabelSet) -> np.ndarray:
    """Vectorized :func:`lift` over a scalar field; returns the lifted field."""
    values = np.asarray(values, dtype=np.float64)
    if values.min() < labels.vmin or values.max() > labels.vmax:
        raise ValueError("field values outside label range")
    k = np.searchsorted(labels.labels, values.ravel(), side="right") - 1
    k = np.minimum(k, labels.l - 1)
    alpha = (values.ravel() - labels.labels[k]) / labels.gamma_tilde[k]
    alpha = np.clip(alpha, 0.0, 1.0)
    n = values.size
    out = np.zeros((n, labels.l))
    cols = np.arange(labels.l)
    out[cols[None, :] < k[:, None]] = 1.0
    out[np.arange(n), k] = alpha
    return out.reshape(values.shape + (labels.l,))


def unlift_field(u: np.ndarray, labels: LabelSet) -> np.ndarray:
    """Vectorized :func:`unlift` over the trailing channel axis."""
    u = np.asarray(u, dtype=np.float64)
    return labels.vmin + u @ labels.gamma_tilde


def check_sublabel_integral(vec: np.ndarray, tol: float = 1e-3) -> SublabelIndex | None:
    """Return (interval, alpha) if ``vec`` is within ``tol`` (sup norm) of a
    staircase vector, else None.

    Ties at interval boundaries resolve to the right interval with alpha 0,
    matching the tie-break of :func:`lift`.
    """
    vec = np.asarray(vec, dtype=np.float64)
    l = vec.size
    for k in range(l - 1, -1, -1):
        if np.all(np.abs(vec[:k] - 1.0) <= tol) and np.all(np.abs(vec[k + 1 :]) <= tol):
            if -tol <= vec[k] <= 1.0 + tol:
                return SublabelIndex(k, float(min(max(vec[k], 0.0), 1.0)))
    return None


def integral_intervals_field(u: np.ndarray, tol: float = 1e-3) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized integrality test over all pixels of a lifted field.

    Returns ``(interval, ok)`` where ``interval[p]`` is the active interval
    of pixel p (largest valid, matching :func:`check_sublabel_integral`) and
    ``ok[p]`` is False for pixels that are not within ``tol`` of any
    staircase vector (their ``interval`` is the best-effort choice: the last
    channel exceeding ``1 - tol``, plus one, clipped).
    """
    u = np.asarray(u, dtype=np.float64)
    flat = u.reshape(-1, u.shape[-1])
    n, l = flat.shape
    near_one = np.abs(flat - 1.0) <= tol
    near_zero = np.abs(flat) <= tol
    ones_prefix = np.cumprod(near_one, axis=1).astype(bool)
    zeros_suffix = np.cumprod(near_zero[:, ::-1], axis=1)[:, ::-1].astype(bool)
    # candidate k valid iff channels < k are ~1, channels > k are ~0, and
    # channel k lies in [-tol, 1+tol]
    in_range = (flat >= -tol) & (flat <= 1.0 + tol)
    prefix_ok = np.ones((n, l), dtype=bool)
    prefix_ok[:, 1:] = ones_prefix[:, :-1]
    suffix_ok = np.ones((n, l), dtype=bool)
    suffix_ok[:, :-1] = zeros_suffix[:, 1:]
    valid = prefix_ok & suffix_ok & in_range
    ok = valid.any(axis=1)
    # largest valid k, mirroring the scan order of check_sublabel_integral
    rev_arg = np.argmax(valid[:, ::-1], axis=1)
    interval = l - 1 - rev_arg
    # fallback for non-integral pixels: one past the last confidently-one channel
    n_ones = ones_prefix.sum(axis=1)
    fallback = np.clip(n_ones, 0, l - 1)
    interval = np.where(ok, interval, fallback)
    shape = u.shape[:-1]
    return interval.reshape(shape), ok.reshape(shape)
