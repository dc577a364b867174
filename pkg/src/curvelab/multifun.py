"""Distances between fibers and between sampled curves, branch separation,
and drift of discriminant loci under perturbation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .errors import DegenerateSlice, EmptyDomain
from .polycalc import BivarPoly, Disk, roots_batch
from .projection import Fiber, Polydisk, discriminant_clusters, polar_grid

SEPARATION_GRID = (64, 256)
SAMPLE_GRID = (24, 96)


def _points(f):
    return np.asarray(f.points if isinstance(f, Fiber) else list(f), dtype=complex)


def d_sym(a, b) -> float:
    """Directed distance ``sup_k inf_j |a_k - b_j|`` between two fibers.

    Not symmetric; see :func:`d_sym_symmetric`.
    """
    pa, pb = _points(a), _points(b)
    if not len(pa) or not len(pb):
        raise ValueError("fibers must be nonempty")
    return float(np.abs(pa[:, None] - pb[None, :]).min(axis=1).max())


def d_sym_symmetric(a, b) -> float:
    return max(d_sym(a, b), d_sym(b, a))


@dataclass(frozen=True)
class SampledCurve:
    """Finite point sample ``(z, w)`` of a plane curve."""

    points: np.ndarray  # shape (N, 2), complex
    source: str = ""

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=complex).reshape(-1, 2)
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def as_real(self):
        p = self.points
        return np.column_stack([p[:, 0].real, p[:, 0].imag, p[:, 1].real, p[:, 1].imag])

    def residual(self, F: BivarPoly) -> float:
        return float(np.abs(F.eval_many(self.points[:, 0], self.points[:, 1])).max())


def sample_curve(F: BivarPoly, region, grid=SAMPLE_GRID, source="") -> SampledCurve:
    """Fiber points of ``F`` over a closed polar grid of the base disk.

    With a :class:`Polydisk`, points outside the vertical disk are dropped.
    """
    base = region.base if isinstance(region, Polydisk) else region
    zs = polar_grid(base, *grid)
    rows = F.slice_rows(zs)
    if np.any(rows[:, -1] == 0):
        raise DegenerateSlice("leading w-coefficient vanishes on the sample grid")
    ws = roots_batch(rows)
    pts = np.column_stack([np.repeat(zs, ws.shape[1]), ws.ravel()])
    if isinstance(region, Polydisk):
        pts = pts[region.vertical.contains(pts[:, 1])]
    return SampledCurve(pts, source)


def _directed(a: np.ndarray, b: np.ndarray) -> float:
    d, _ = cKDTree(b).query(a, k=1)
    return float(d.max())


def hausdorff(a: SampledCurve, b: SampledCurve) -> float:
    """Hausdorff distance between two finite samples in C^2 = R^4.

    Exact for the samples; an estimate for the underlying curves whose
    quality depends on sampling density.
    """
    if not len(a) or not len(b):
        raise ValueError("samples must be nonempty")
    ra, rb = a.as_real(), b.as_real()
    return max(_directed(ra, rb), _directed(rb, ra))


def _separation_points(region: Disk, excluded, grid):
    n_r, n_t = (grid, 4 * grid) if isinstance(grid, int) else grid
    pts = [polar_grid(region, n_r, n_t)]
    # boundaries of the excluded disks belong to the compact complement
    for d in excluded:
        circ = d.boundary(n_t)
        pts.append(circ[np.abs(circ - region.center) <= region.radius])
    zs = np.concatenate(pts)
    keep = np.ones(len(zs), dtype=bool)
    for d in excluded:
        keep &= np.abs(zs - d.center) >= d.radius * (1 - 1e-12)
    return zs[keep]


def separation(F: BivarPoly, region: Disk, excluded=(), grid=SEPARATION_GRID) -> float:
    """Minimum pairwise fiber distance over ``region`` minus the open ``excluded`` disks."""
    zs = _separation_points(region, list(excluded), grid)
    if not len(zs):
        raise EmptyDomain("no grid point outside the excluded disks")
    rows = F.slice_rows(zs)
    if np.any(rows[:, -1] == 0):
        raise DegenerateSlice("leading w-coefficient vanishes on the grid")
    if rows.shape[1] <= 2:
        return math.inf
    ws = roots_batch(rows)
    d = np.abs(ws[:, :, None] - ws[:, None, :])
    m = ws.shape[1]
    d[:, np.arange(m), np.arange(m)] = np.inf
    return float(d.min())


def discriminant_locations(F: BivarPoly, base: Disk):
    radius = max(1.0, abs(base.center) + base.radius)
    clusters, _ = discriminant_clusters(F, radius=radius)
    return [c for c, _ in clusters if abs(c - base.center) < base.radius]


def point_hausdorff(a, b) -> float:
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    if not len(a) and not len(b):
        return 0.0
    if not len(a) or not len(b):
        return math.inf
    d = np.abs(a[:, None] - b[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def discriminant_drift(F: BivarPoly, G: BivarPoly, base: Disk) -> float:
    """Hausdorff distance between the discriminant point sets inside ``base``.

    Infinite when exactly one of the sets is empty.
    """
    return point_hausdorff(discriminant_locations(F, base), discriminant_locations(G, base))


__all__ = [
    "d_sym",
    "d_sym_symmetric",
    "SampledCurve",
    "sample_curve",
    "hausdorff",
    "separation",
    "discriminant_drift",
    "discriminant_locations",
    "point_hausdorff",
]
