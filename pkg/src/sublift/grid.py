"""Discrete image domain and forward-difference operators.

Field conventions (channel-innermost storage):

* scalar field on a 2d grid: array of shape ``(H, W)``
* lifted field with ``l`` channels: ``(H, W, l)``
* dual field: ``(H, W, l, 2)``, last axis = spatial dimension

1d signals use ``(N,)``, ``(N, l)`` and ``(N, l, 1)`` respectively. The
spatial dimensionality is inferred from ``ndim``; a trailing channel axis
of size ``l`` is always present for lifted/dual fields (use ``l=1`` to
lift/derive plain scalars).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GridShape:
    """Pixel grid with uniform spacing ``h``."""

    height: int
    width: int
    h: float = 1.0

    def __post_init__(self):
        if self.height < 1 or self.width < 1:
            raise ValueError(f"grid must have at least one pixel, got {self.height}x{self.width}")
        if not self.h > 0:
            raise ValueError(f"grid spacing must be positive, got {self.h}")

    @property
    def npix(self) -> int:
        return self.height * self.width


def _as_lifted(u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=np.float64)
    if u.ndim not in (2, 3):
        raise ValueError(f"lifted field must be (N, l) or (H, W, l), got shape {u.shape}")
    return u


def gradient(u: np.ndarray, h: float = 1.0) -> np.ndarray:
    """Forward-difference gradient with Neumann (zero) boundary.

    ``(H, W, l) -> (H, W, l, 2)`` with axis 0 differences in component 0,
    or ``(N, l) -> (N, l, 1)`` for 1d signals. The difference at the last
    pixel of each axis is zero.
    """
    u = _as_lifted(u)
    if u.ndim == 2:
        n, l = u.shape
        g = np.zeros((n, l, 1))
        g[:-1, :, 0] = (u[1:] - u[:-1]) / h
        return g
    H, W, l = u.shape
    g = np.zeros((H, W, l, 2))
    g[:-1, :, :, 0] = (u[1:] - u[:-1]) / h
    g[:, :-1, :, 1] = (u[:, 1:] - u[:, :-1]) / h
    return g


def divergence_adjoint(q: np.ndarray, h: float = 1.0) -> np.ndarray:
    """Exact adjoint of :func:`gradient` (negative discrete divergence).

    Satisfies ``<gradient(u), q> == <u, divergence_adjoint(q)>`` up to
    rounding for every finite ``u``, ``q``. Components of ``q`` that the
    gradient never writes (last pixel per axis) are ignored.
    """
    q = np.asarray(q, dtype=np.float64)
    if q.ndim == 3:
        n, l, d = q.shape
        if d != 1:
            raise ValueError(f"1d dual field must have d=1, got {d}")
        p = np.zeros((n, l))
        p[:-1] -= q[:-1, :, 0]
        p[1:] += q[:-1, :, 0]
        return p / h
    if q.ndim != 4:
        raise ValueError(f"dual field must be (N, l, 1) or (H, W, l, 2), got shape {q.shape}")
    H, W, l, d = q.shape
    if d != 2:
        raise ValueError(f"2d dual field must have d=2, got {d}")
    p = np.zeros((H, W, l))
    p[:-1] -= q[:-1, :, :, 0]
    p[1:] += q[:-1, :, :, 0]
    p[:, :-1] -= q[:, :-1, :, 1]
    p[:, 1:] += q[:, :-1, :, 1]
    return p / h


def field_inner(a: np.ndarray, b: np.ndarray) -> float:
    """Plain euclidean inner product of two equally shaped fields."""
    return float(np.sum(np.asarray(a) * np.asarray(b)))


def operator_norm_bound(d: int, h: float = 1.0) -> float:
    """Upper bound on the forward-difference operator norm, ``2 sqrt(d) / h``."""
    return 2.0 * np.sqrt(d) / h
