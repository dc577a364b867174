"""Proper projection ``(z, w) -> z`` of a plane curve ``F = 0``.

Good-neighborhood checks, fibers, the discriminant locus and the
normal-crossing classification of its points.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateSlice,
    NonSquareFree,
    ProbeFalsePositive,
    ProbeTooLarge,
    ZeroWDegree,
)
from .polycalc import (
    BivarPoly,
    CPoly,
    Disk,
    canonical,
    cluster_roots,
    contour_roots,
    resultant_values,
    resultant_with_error,
    roots,
    roots_batch,
    w_slice,
)

log = logging.getLogger(__name__)

DISC_CLUSTER_TOL = 1e-6
GOOD_MARGIN = 1e-6
GOOD_SAMPLES = 32


@dataclass(frozen=True)
class Polydisk:
    base: Disk
    vertical: Disk

    def contains(self, z, w, margin=0.0):
        return bool(self.base.contains(z, margin * self.base.radius)) and bool(
            self.vertical.contains(w, margin * self.vertical.radius)
        )


@dataclass(frozen=True)
class Fiber:
    """Unordered multiset of w-values over ``base_point``, stored in canonical order."""

    base_point: complex
    points: tuple

    def __post_init__(self):
        object.__setattr__(self, "base_point", complex(self.base_point))
        object.__setattr__(self, "points", tuple(canonical(self.points)))

    def __len__(self):
        return len(self.points)

    def distinct(self, tol=DISC_CLUSTER_TOL):
        """(value, multiplicity) pairs after merging points closer than ``tol``."""
        groups = []
        for p in self.points:
            for g in groups:
                if abs(g[0] - p) <= tol:
                    g[1].append(p)
                    break
            else:
                groups.append([p, [p]])
        return [(complex(np.mean(g[1])), len(g[1])) for g in groups]


class Crossing(str, enum.Enum):
    NORMAL = "normal_crossing"
    NON_NORMAL = "non_normal_crossing"


@dataclass(frozen=True)
class DiscriminantPoint:
    location: complex
    multiplicity: int
    crossing: Crossing


@dataclass
class DiscriminantReport:
    points: list
    sheet_count: int
    dropped: list = field(default_factory=list)

    @property
    def locations(self):
        return [p.location for p in self.points]

    def non_normal(self):
        return [p.location for p in self.points if p.crossing is Crossing.NON_NORMAL]


@dataclass(frozen=True)
class GoodResult:
    good: bool
    witness: tuple | None = None
    max_distance: float = 0.0
    reason: str = ""

    def __bool__(self):
        return self.good


def polar_grid(disk: Disk, n_radii, n_angles, include_center=True):
    """Closed polar grid over ``disk`` including its boundary circle."""
    radii = np.linspace(0.0, 1.0, n_radii) * disk.radius
    if not include_center:
        radii = radii[1:]
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    pts = disk.center + radii[:, None] * np.exp(1j * theta)[None, :]
    return pts.ravel()


def check_good(F: BivarPoly, H: Polydisk, boundary_samples=GOOD_SAMPLES) -> GoodResult:
    """Does ``F = 0`` stay off ``H.base x boundary(H.vertical)``?

    Samples ``boundary_samples`` radii by ``boundary_samples`` angles over the
    closed base disk and requires every fiber point to satisfy
    ``|w - c| < R - margin``. Returns the worst offender as witness.
    """
    m = F.w_degree
    if m < 1:
        raise ZeroWDegree("curve is constant in w")
    zs = polar_grid(H.base, boundary_samples, boundary_samples)
    rows = F.slice_rows(zs)
    lead = np.abs(rows[:, -1])
    scale = np.abs(rows).max(axis=1)
    degenerate = lead <= 1e-12 * np.maximum(scale, 1e-300)
    if degenerate.any():
        k = int(np.flatnonzero(degenerate)[0])
        return GoodResult(False, (complex(zs[k]), complex("inf")), math.inf,
                          "degenerate slice: leading w-coefficient vanishes")
    ws = roots_batch(rows)
    dist = np.abs(ws - H.vertical.center)
    k, j = np.unravel_index(int(np.argmax(dist)), dist.shape)
    worst = float(dist[k, j])
    margin = GOOD_MARGIN * H.vertical.radius
    if worst >= H.vertical.radius - margin:
        return GoodResult(False, (complex(zs[k]), complex(ws[k, j])), worst,
                          "curve reaches the vertical boundary")
    return GoodResult(True, None, worst)


def fiber(F: BivarPoly, z0) -> Fiber:
    """Roots of ``w -> F(z0, w)`` with multiplicity."""
    s = w_slice(F, z0)
    if s.is_zero():
        raise DegenerateSlice(f"F({z0}, w) vanishes identically")
    if s.degree < F.w_degree:
        raise DegenerateSlice(f"w-degree drops from {F.w_degree} to {s.degree} at z={z0}")
    return Fiber(z0, roots(s))


def _refine(f, center, mult, radius, depth=0):
    """Split a resultant root cluster with contour power sums; recurse on splits."""
    try:
        local_roots, local = contour_roots(f, Disk(center, radius))
    except Exception as exc:  # BoundaryZero or NoConvergence on the local polynomial
        log.debug("contour refinement at %s failed: %s", center, exc)
        return [(center, mult)]
    if len(local_roots) != mult:
        log.debug("contour count %d != cluster size %d at %s", len(local_roots), mult, center)
        return [(center, mult)]
    ys = (local_roots - center) / radius
    subs = cluster_roots(local.coeffs, ys, tol=DISC_CLUSTER_TOL / radius, coeff_err=1e-10)
    out = []
    for y, k in subs:
        z = center + radius * y
        if len(subs) > 1 and k > 1 and depth < 4:
            gap = min(abs(y - y2) for y2, _ in subs if y2 != y) * radius
            out.extend(_refine(f, z, k, 0.4 * gap, depth + 1))
        else:
            out.append((z, k))
    return out


def discriminant_clusters(F: BivarPoly, radius=1.0):
    """All roots of ``Res_w(F, dF/dw)`` as (location, multiplicity), unrestricted."""
    if F.w_degree < 1:
        raise ZeroWDegree("curve is constant in w")
    if F.w_degree == 1:
        return [], CPoly([1.0])  # a single sheet never branches
    Fw = F.diff_w()
    R, err = resultant_with_error(F, Fw, radius=radius)
    if R.is_zero():
        raise NonSquareFree("Res_w(F, dF/dw) vanishes identically")
    if R.degree < 1:
        return [], R
    raw = roots_batch(R.coeffs[None, :])[0]
    coarse = cluster_roots(R.coeffs, raw, tol=DISC_CLUSTER_TOL, coeff_err=err)

    def f(zs):
        return resultant_values(F, Fw, zs)

    refined = []
    for c, k in coarse:
        if k == 1:
            refined.append((c, k))
            continue
        others = [abs(c - c2) for c2, _ in coarse if c2 != c]
        spread = float(np.sort(np.abs(raw - c))[k - 1])
        rho = max(4 * spread, 1e-3 * (1 + abs(c)))
        if others:
            rho = min(rho, 0.45 * min(others))
        refined.extend(_refine(f, c, k, rho))
    refined.sort(key=lambda cm: (cm[0].real, cm[0].imag))
    return refined, R


def default_probe_radius(q, others, base: Disk):
    d = 0.5 * (base.radius - abs(q - base.center))
    near = [abs(q - o) for o in others if o != q]
    if near:
        d = min(d, 0.5 * min(near))
    return d


def discriminant(F: BivarPoly, base: Disk, probe_radius=None, steps_per_turn=None) -> DiscriminantReport:
    """Discriminant points of the projection inside ``base``, classified."""
    radius = max(1.0, abs(base.center) + base.radius)
    clusters, _ = discriminant_clusters(F, radius=radius)
    all_locs = [c for c, _ in clusters]
    points, dropped = [], []
    for q, k in clusters:
        if not abs(q - base.center) < base.radius:
            continue
        rho = probe_radius or default_probe_radius(q, all_locs, base)
        try:
            crossing = classify_crossing(F, q, rho, others=all_locs, steps_per_turn=steps_per_turn)
        except ProbeFalsePositive as exc:
            log.warning("dropping discriminant candidate %s: %s", q, exc)
            dropped.append((q, k))
            continue
        points.append(DiscriminantPoint(q, k, crossing))
    return DiscriminantReport(points, F.w_degree, dropped)


def classify_crossing(F: BivarPoly, q, probe_radius, others=(), steps_per_turn=None) -> Crossing:
    """Normal crossing iff the local monodromy is trivial and sheets meet over ``q``."""
    from .monodromy import LoopSpec, track  # monodromy imports this module

    q = complex(q)
    for o in others:
        if o != q and 0 < abs(o - q) <= probe_radius:
            raise ProbeTooLarge(f"discriminant point {o} lies within {probe_radius:g} of {q}")
    kw = {} if steps_per_turn is None else {"steps_per_turn": steps_per_turn}
    res = track(F, LoopSpec(q, probe_radius, 1, **kw))
    if not res.is_identity():
        return Crossing.NON_NORMAL
    try:
        fib = fiber(F, q)
    except DegenerateSlice:
        return Crossing.NON_NORMAL
    if any(k > 1 for _, k in fib.distinct(tol=coincidence_tol(fib))):
        return Crossing.NORMAL
    raise ProbeFalsePositive(f"trivial monodromy and distinct sheets over {q}")


def coincidence_tol(fib: Fiber):
    scale = max([abs(p) for p in fib.points] + [1.0])
    return max(DISC_CLUSTER_TOL, 1e-6 * scale)


__all__ = [
    "Polydisk",
    "Fiber",
    "Crossing",
    "DiscriminantPoint",
    "DiscriminantReport",
    "GoodResult",
    "check_good",
    "fiber",
    "discriminant",
    "discriminant_clusters",
    "classify_crossing",
    "polar_grid",
]
