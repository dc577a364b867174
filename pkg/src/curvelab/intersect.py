"""Certify or refute ``V ∩ W ≠ ∅`` inside a polydisk.

``W = {G = 0}`` is pulled back through each Puiseux branch of
``V = {F = 0}``; zeros of the univariate pullback inside the parameter disk
are intersection points. A brute-force grid scan is run as an independent
check before ``Empty`` is ever declared.
"""

from __future__ import annotations

import enum
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BoundaryZero,
    DegreeCap,
    DomainError,
    IdenticallyZero,
    NotGood,
    TruncationDominates,
)
from .monodromy import locate_nnc
from .multifun import hausdorff, sample_curve
from .polycalc import EPS, BivarPoly, CPoly, Disk, MPoly, count_zeros_in_disk, roots, roots_batch
from .projection import Polydisk, check_good, discriminant, fiber, polar_grid
from .puiseux import DEFAULT_ORDER, PuiseuxParam, puiseux_expand, singular_centers

log = logging.getLogger(__name__)

WITNESS_TOL = 1e-8
SCAN_GRID = (24, 96)
SCAN_CANDIDATES = 24
NEWTON_ITERS = 30
DEGREE_CAP = 64
UNIT_DISK = Disk(0j, 1.0)


class Status(str, enum.Enum):
    INTERSECTS = "intersects"
    EMPTY = "empty"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Witness:
    z: complex
    w: complex
    res_f: float
    res_g: float
    in_polydisk: bool
    method: str  # "pullback", "identical-branch" or "scan"
    t: complex | None = None

    @property
    def valid(self):
        return self.res_f <= WITNESS_TOL and self.res_g <= WITNESS_TOL


@dataclass
class IntersectionVerdict:
    status: Status
    witnesses: list = field(default_factory=list)
    zero_count: int = 0
    hypothesis_report: dict = field(default_factory=dict)
    pullback_degrees: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def residuals(self):
        return [(w.res_f, w.res_g) for w in self.witnesses]


# -- pullback ---------------------------------------------------------------


def _compose(G: BivarPoly, zt: CPoly, wt: CPoly):
    acc = CPoly()
    for col in reversed(G.w_coeffs()):
        inner = CPoly()
        for c in reversed(col.coeffs):
            inner = inner * zt + complex(c)
        acc = acc * wt + inner
    return acc


def _abs_poly(p: CPoly):
    return CPoly(np.abs(p.coeffs))


def _abs_bivar(G: BivarPoly):
    return BivarPoly({k: abs(v) for k, v in G.terms.items()})


def _tail_bound(series, rho):
    """Rough bound on the discarded tail of ``series`` on ``|t| = rho``.

    Uses a root-test growth estimate from the upper half of the stored
    coefficients; ``inf`` when the extrapolated tail does not shrink.
    """
    c = np.abs(np.asarray(series))
    n = len(c)
    ks = [k for k in range(max(1, n // 2), n) if c[k] > 0]
    if not ks:
        return 0.0
    growth = max(c[k] ** (1.0 / k) for k in ks)
    q = growth * rho
    if q >= 1:
        return math.inf
    return float(c[ks[-1]] * rho ** ks[-1] * q / (1 - q))


def pullback(param: PuiseuxParam, G: BivarPoly, t_disk: Disk | None = None) -> CPoly:
    """``f(t) = G(t^m + shift_z, g(t) + shift_w)`` as a univariate polynomial.

    Coefficients below the rounding level of the composition are set to
    zero, so exact cancellations (e.g. a curve pulled back through itself)
    come out as exact zeros. For a truncated series, ``t_disk`` enables a
    check that the discarded tail cannot move the zero count inside it.
    """
    zs, ws = param.base_shift
    m = param.ramification
    zt = CPoly([zs] + [0] * (m - 1) + [1])
    wt = CPoly(param.series) + ws
    f = _compose(G, zt, wt)
    mag = _compose(_abs_bivar(G), _abs_poly(zt), _abs_poly(wt))
    if not f.is_zero():
        cleaned = f.coeffs.copy()
        tiny = np.abs(cleaned) <= 64 * EPS * np.pad(mag.coeffs.real, (0, max(0, len(cleaned) - len(mag.coeffs))))[: len(cleaned)]
        cleaned[tiny] = 0
        f = CPoly(cleaned)
    if not param.exact and t_disk is not None and not f.is_zero():
        rho = abs(t_disk.center) + t_disk.radius
        tail = _tail_bound(param.series, rho)
        circle = t_disk.boundary(256)
        z, w = param(circle)
        gw = G.diff_w()
        slope = float(np.abs(gw.eval_many(z, w)).max()) + tail * float(
            np.abs(gw.diff_w().eval_many(z, w)).max()
        )
        if not math.isfinite(tail) or slope * tail >= float(np.abs(f(circle)).min()):
            raise TruncationDominates(
                f"series tail (~{tail:.3g}) may change the zero count on |t| <= {rho:g}"
            )
    return f


# -- Newton in two variables ------------------------------------------------


class _System:
    def __init__(self, F: BivarPoly, G: BivarPoly):
        self.F, self.G = F, G
        self.d = (F.diff_z(), F.diff_w(), G.diff_z(), G.diff_w())

    def residual(self, z, w):
        return abs(self.F.eval_many(z, w).item()), abs(self.G.eval_many(z, w).item())

    def polish(self, z, w, iters=NEWTON_ITERS):
        """Newton iteration; returns the best point seen and its residuals."""
        best = (z, w, *self.residual(z, w))
        for _ in range(iters):
            f = self.F.eval_many(z, w).item()
            g = self.G.eval_many(z, w).item()
            fz, fw, gz, gw = (p.eval_many(z, w).item() for p in self.d)
            det = fz * gw - fw * gz
            if det == 0 or not np.isfinite(det):
                break
            dz = (f * gw - fw * g) / det
            dw = (fz * g - f * gz) / det
            z, w = z - dz, w - dw
            if not (np.isfinite(z) and np.isfinite(w)):
                break
            rf, rg = self.residual(z, w)
            if max(rf, rg) < max(best[2], best[3]):
                best = (z, w, rf, rg)
            if abs(dz) + abs(dw) <= 4 * EPS * (1 + abs(z) + abs(w)):
                break
        return best


def _in_closed(H: Polydisk, z, w, slack=1e-9):
    return bool(
        abs(z - H.base.center) <= H.base.radius * (1 + slack)
        and abs(w - H.vertical.center) <= H.vertical.radius * (1 + slack)
    )


def _witness(system, H, z, w, method, t=None):
    z1, w1, rf, rg = system.polish(complex(z), complex(w))
    return Witness(complex(z1), complex(w1), rf, rg, _in_closed(H, z1, w1), method, t)


# -- brute-force scan -------------------------------------------------------


def scan(F: BivarPoly, G: BivarPoly, H: Polydisk, grid=SCAN_GRID, candidates=SCAN_CANDIDATES):
    """Common points found by Newton from the closest fiber pairs on a polar grid."""
    zs = polar_grid(H.base, *grid)
    wf = roots_batch(F.slice_rows(zs))
    wg = roots_batch(G.slice_rows(zs))
    d = np.abs(wf[:, :, None] - wg[:, None, :])
    d = np.where(H.vertical.contains(wf)[:, :, None], d, np.inf)
    order = np.argsort(d, axis=None, kind="stable")[:candidates]
    system = _System(F, G)
    found = []
    for flat in order:
        k, i, j = np.unravel_index(int(flat), d.shape)
        if not np.isfinite(d[k, i, j]):
            break
        w0 = 0.5 * (wf[k, i] + wg[k, j])
        wit = _witness(system, H, zs[k], w0, "scan")
        if not (wit.valid and wit.in_polydisk):
            continue
        if all(abs(wit.z - o.z) + abs(wit.w - o.w) > 1e-7 for o in found):
            found.append(wit)
    return found


# -- certify ----------------------------------------------------------------


def _snap(x, tol=1e-14):
    x = complex(x)
    return complex(0.0 if abs(x.real) < tol else x.real, 0.0 if abs(x.imag) < tol else x.imag)


def _centers(F: BivarPoly, H: Polydisk):
    report = discriminant(F, H.base)
    centers = [c for c in singular_centers(F, report.locations)
               if H.vertical.contains(c[1])]
    if centers:
        out = [(_snap(z), _snap(w)) for z, w in centers]
        # smooth sheets over a singular base point are branches too
        for z in dict.fromkeys(z for z, _ in out):
            for w, _ in fiber(F, z).distinct():
                w = _snap(w)
                if H.vertical.contains(w) and all(abs(w - w2) > 1e-6 for z2, w2 in out if z2 == z):
                    out.append((z, w))
        return out
    zc = H.base.center
    return [(zc, _snap(w)) for w, _ in fiber(F, zc).distinct() if H.vertical.contains(w)]


def _branch_disk(param: PuiseuxParam, base: Disk):
    """Largest t-disk whose image lies in the closed base disk."""
    room = base.radius - abs(param.base_shift[0] - base.center)
    return Disk(0j, max(room, 0.0) ** (1.0 / param.ramification))


def hypothesis_report(F, G, H, grid=(16, 64)):
    """Count of non-normal-crossing points of G and a sampled Hausdorff estimate."""
    out = {"nnc_count_W": None, "d_H_estimate": None, "d_H_grid": list(grid)}
    try:
        out["nnc_count_W"] = len(locate_nnc(G, H.base))
    except DomainError as exc:
        out["nnc_error"] = f"{type(exc).__name__}: {exc}"
    a = sample_curve(F, H, grid, "V")
    b = sample_curve(G, H, grid, "W")
    if len(a) and len(b):
        out["d_H_estimate"] = hausdorff(a, b)
    return out


def certify(
    F: BivarPoly,
    G: BivarPoly,
    H: Polydisk,
    t_disk: Disk | str | None = UNIT_DISK,
    order=DEFAULT_ORDER,
    scan_grid=SCAN_GRID,
    hausdorff_grid=(16, 64),
) -> IntersectionVerdict:
    """Decide whether ``F = 0`` and ``G = 0`` meet inside ``H``.

    Parameters
    ----------
    F, G : BivarPoly
        Defining polynomials of V and W.
    H : Polydisk
        Must be a good neighborhood for both curves.
    t_disk : Disk, "auto" or None
        Parameter disk for zero counting on each branch. ``"auto"`` (or
        None) uses, per branch, the largest disk mapped into the base.
    order : int
        Puiseux truncation order.

    Returns
    -------
    IntersectionVerdict
        ``Intersects`` once a witness on both curves lies in the closed
        polydisk; ``Empty`` only when every branch has no zeros mapping into
        ``H`` and the grid scan finds no common point; otherwise
        ``Inconclusive``.
    """
    for name, P in (("V", F), ("W", G)):
        good = check_good(P, H)
        if not good:
            raise NotGood(f"{name}: {good.reason} (witness {good.witness})")
    verdict = IntersectionVerdict(Status.INCONCLUSIVE)
    verdict.hypothesis_report = hypothesis_report(F, G, H, hausdorff_grid)
    system = _System(F, G)
    blocked = False
    for center in _centers(F, H):
        for param in puiseux_expand(F, center, order=order):
            disk = _branch_disk(param, H.base) if t_disk in (None, "auto") else t_disk
            try:
                f = pullback(param, G, disk)
            except TruncationDominates as exc:
                verdict.notes.append(f"branch at {center}: {exc}")
                blocked = True
                continue
            if f.is_zero():
                verdict.pullback_degrees.append(None)
                verdict.notes.append(f"branch at {center} lies on W")
                z, w = param(0.0)
                verdict.witnesses.append(_witness(system, H, complex(z), complex(w), "identical-branch", 0j))
                continue
            verdict.pullback_degrees.append(f.degree)
            try:
                count = count_zeros_in_disk(f, disk)
            except BoundaryZero as exc:
                verdict.notes.append(f"branch at {center}: {exc}")
                blocked = True
                continue
            verdict.zero_count += count
            if count == 0:
                continue
            inside = [t for t in dict.fromkeys(roots(f)) if abs(t - disk.center) < disk.radius]
            for t in inside:
                z, w = param(t)
                verdict.witnesses.append(_witness(system, H, complex(z), complex(w), "pullback", complex(t)))
    good = [w for w in verdict.witnesses if w.valid and w.in_polydisk]
    if good:
        verdict.status = Status.INTERSECTS
        return verdict
    if any(w.in_polydisk and not w.valid for w in verdict.witnesses):
        verdict.notes.append("a pullback zero failed the residual check")
        blocked = True
    found = scan(F, G, H, scan_grid)
    if found:
        verdict.witnesses.extend(found)
        verdict.status = Status.INTERSECTS
        verdict.notes.append("common point found by the grid scan only")
    elif not blocked:
        verdict.status = Status.EMPTY
    return verdict


# -- C^3 pullback and line restriction --------------------------------------


def pullback_map(components, Q: MPoly, degree_cap=DEGREE_CAP) -> BivarPoly:
    """``Q(g1(z, w), g2(z, w), g3(z, w))`` expanded as a bivariate polynomial."""
    if len(components) != 3 or Q.arity != 3:
        raise ValueError("need exactly three components and a 3-variable Q")
    comps = [c if isinstance(c, BivarPoly) else BivarPoly.constant(c) for c in components]
    bound = Q.degree() * max(max(c.degree(), 0) for c in comps)
    if bound > degree_cap:
        raise DegreeCap(f"expected degree {bound} exceeds cap {degree_cap}")
    out = Q.substitute(comps)
    if not isinstance(out, MPoly):
        return BivarPoly({(0, 0): out} if out != 0 else {})
    # drop cancellation residue, judged against the expansion of |Q|(|g|)
    mag = MPoly({k: abs(v) for k, v in Q.terms.items()}, nvars=3).substitute([_abs_bivar(c) for c in comps])
    mag = mag.terms if isinstance(mag, MPoly) else {(0, 0): mag}
    return BivarPoly({k: v for k, v in out.terms.items() if abs(v) > 64 * EPS * abs(mag.get(k, 0))})


def line_zero(p: BivarPoly, line=("w", 0.0), disk: Disk = UNIT_DISK):
    """Zeros of ``p`` restricted to ``{var = value}`` inside ``disk``."""
    var, value = line
    value = complex(value)
    if var == "w":
        q = p.swap()
    elif var == "z":
        q = p
    else:
        raise ValueError(f"line variable must be 'z' or 'w', got {var!r}")
    cols = q.w_coeffs()
    restricted = CPoly([col(value) for col in cols]) if cols else CPoly()
    if restricted.is_zero():
        raise IdenticallyZero(f"p vanishes on the whole line {var} = {value}")
    return [r for r in roots(restricted) if abs(r - disk.center) < disk.radius]


# -- sweeps -----------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    eps: complex
    status: str
    zero_count: int | None
    d_h: float | None
    nnc_count: int | None
    error: str = ""


def _threads():
    raw = os.environ.get("CURVELAB_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            log.warning("ignoring CURVELAB_THREADS=%r", raw)
    return min(4, os.cpu_count() or 1)


def _cell(F, family, eps, H, t_disk, kwargs):
    try:
        v = certify(F, family(eps), H, t_disk, **kwargs)
    except DomainError as exc:
        return SweepRow(eps, "error", None, None, None, f"{type(exc).__name__}: {exc}")
    rep = v.hypothesis_report
    return SweepRow(eps, v.status.value, v.zero_count, rep.get("d_H_estimate"), rep.get("nnc_count_W"))


def sweep(F: BivarPoly, family, grid, H: Polydisk, t_disk=UNIT_DISK, workers=None, **kwargs):
    """Run :func:`certify` for ``family(eps)`` at each grid value.

    Rows come back in grid order regardless of the worker count; failed
    cells carry the error text instead of aborting the sweep.
    """
    workers = workers or _threads()
    grid = list(grid)
    if workers == 1:
        return [_cell(F, family, e, H, t_disk, kwargs) for e in grid]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda e: _cell(F, family, e, H, t_disk, kwargs), grid))


def empirical_threshold(rows):
    """Largest ``|eps|`` below which every tested cell intersects (empirical only)."""
    best = None
    for row in sorted(rows, key=lambda r: abs(r.eps)):
        if row.status != Status.INTERSECTS.value:
            break
        best = abs(row.eps)
    return best


__all__ = [
    "Status",
    "Witness",
    "IntersectionVerdict",
    "pullback",
    "certify",
    "scan",
    "hypothesis_report",
    "pullback_map",
    "line_zero",
    "SweepRow",
    "sweep",
    "empirical_threshold",
]
