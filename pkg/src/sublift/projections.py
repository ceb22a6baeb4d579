"""Projections onto the lifted TV dual constraint sets and the row transform.

Per pixel the dual variable is an (l, d) matrix q. Feasible sets:

* isotropic:   ||q[i, :]||_2   <= gamma_tilde[i] per row i
* anisotropic: |q[i, j]|       <= gamma_tilde[i] per entry

Both accept a single pixel ``(l, d)`` or whole fields ``(..., l, d)``.
"""

from __future__ import annotations

import numpy as np

from .labels import LabelSet


def project_K_iso(q: np.ndarray, labels: LabelSet) -> np.ndarray:
    """Row-wise euclidean projection onto 2-norm balls of radius gamma_tilde."""
    q = np.asarray(q, dtype=np.float64)
    radii = labels.gamma_tilde
    norms = np.sqrt(np.sum(q * q, axis=-1))
    scale = np.ones_like(norms)
    mask = norms > radii
    scale[mask] = (radii * np.ones_like(norms))[mask] / norms[mask]
    return q * scale[..., None]


def project_K_an(q: np.ndarray, labels: LabelSet) -> np.ndarray:
    """Entry-wise clamp to [-gamma_tilde[i], gamma_tilde[i]]."""
    q = np.asarray(q, dtype=np.float64)
    radii = labels.gamma_tilde[:, None]
    return np.clip(q, -radii, radii)


def project_K(q: np.ndarray, labels: LabelSet, tv: str) -> np.ndarray:
    if tv == "iso":
        return project_K_iso(q, labels)
    if tv == "an":
        return project_K_an(q, labels)
    raise ValueError(f"tv must be 'iso' or 'an', got {tv!r}")


def transform_dual(q_pixel: np.ndarray, interval: int, labels: LabelSet) -> np.ndarray:
    """Rescale the active row of q across all rows: row r becomes
    ``gamma_tilde[r] * q[interval] / gamma_tilde[interval]``.

    By construction every output column is a scalar multiple of gamma_tilde,
    and feasibility w.r.t. either constraint set is preserved.
    """
    q_pixel = np.asarray(q_pixel, dtype=np.float64)
    gt = labels.gamma_tilde
    row = q_pixel[interval] / gt[interval]
    return gt[:, None] * row[None, :]


def transform_dual_field(q: np.ndarray, intervals: np.ndarray, mask: np.ndarray,
                         labels: LabelSet) -> np.ndarray:
    """Apply :func:`transform_dual` at pixels where ``mask`` is True.

    ``q`` has shape (..., l, d); ``intervals`` and ``mask`` shape (...).
    Pixels with mask False keep their raw rows.
    """
    q = np.asarray(q, dtype=np.float64)
    gt = labels.gamma_tilde
    flat = q.reshape(-1, q.shape[-2], q.shape[-1])
    iv = np.asarray(intervals).ravel()
    m = np.asarray(mask).ravel()
    out = flat.copy()
    idx = np.nonzero(m)[0]
    if idx.size:
        rows = flat[idx, iv[idx], :] / gt[iv[idx], None]
        out[idx] = gt[None, :, None] * rows[:, None, :]
    return out.reshape(q.shape)
