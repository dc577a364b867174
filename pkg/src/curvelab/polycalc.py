"""Complex polynomial arithmetic: univariate and bivariate polynomials,
Sylvester resultants, simultaneous root finding and winding-number zero
counting.

Coefficients are complex doubles. Exact zeros are never stored in sparse
polynomials; dense univariate coefficient arrays are ascending (index =
degree) with the leading coefficient nonzero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import BoundaryZero, DegreeCap, NoConvergence, ZeroWDegree

EPS = float(np.finfo(float).eps)
ROOT_TOL = 1e-10
CLUSTER_TOL = 1e-7
WINDING_SAMPLES = 2048
BOUNDARY_ZERO_RATIO = 1e-8
MAX_DEGREE = 16
MAX_ITER = 500


@dataclass(frozen=True)
class Disk:
    """Open disk ``|z - center| < radius`` in the complex plane."""

    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius > 0 or not math.isfinite(self.radius):
            raise ValueError(f"disk radius must be positive, got {self.radius!r}")

    def contains(self, z, margin=0.0):
        return np.abs(np.asarray(z) - self.center) < self.radius - margin

    def boundary(self, n):
        theta = 2 * np.pi * np.arange(n) / n
        return self.center + self.radius * np.exp(1j * theta)


# ---------------------------------------------------------------------------
# univariate


class CPoly:
    """Dense univariate polynomial with complex coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        nz = np.flatnonzero(c)
        self.coeffs = c[: nz[-1] + 1] if nz.size else c[:0]

    @classmethod
    def from_roots(cls, roots, lead=1.0):
        p = cls([lead])
        for r in roots:
            p = p * cls([-r, 1.0])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"CPoly({self.coeffs.tolist()!r})"

    def __eq__(self, other):
        if not isinstance(other, CPoly):
            other = CPoly(other)
        return len(self) == len(other) and bool(np.all(self.coeffs == other.coeffs))

    def __call__(self, x):
        # Horner from the leading coefficient; scalars stay in Python complex
        # arithmetic so eval_bivar and w_slice evaluation agree bit for bit.
        if np.isscalar(x):
            acc = 0j
            x = complex(x)
            for c in self.coeffs[::-1]:
                acc = acc * x + complex(c)
            return acc
        x = np.asarray(x, dtype=complex)
        acc = np.zeros_like(x)
        for c in self.coeffs[::-1]:
            acc = acc * x + c
        return acc

    def abs_eval(self, x):
        """Evaluate the polynomial with ``|coeffs|`` at ``|x|``; a rounding scale."""
        return np.real(CPoly(np.abs(self.coeffs))(np.abs(x)))

    def derivative(self, k=1) -> "CPoly":
        c = self.coeffs
        for _ in range(k):
            if len(c) <= 1:
                return CPoly()
            c = c[1:] * np.arange(1, len(c))
        return CPoly(c)

    def taylor_shift(self, center) -> "CPoly":
        """Coefficients of ``x -> p(center + x)``."""
        c = self.coeffs.copy()
        n = len(c)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                c[j] += center * c[j + 1]
        return CPoly(c)

    def _coerce(self, other):
        if isinstance(other, CPoly):
            return other
        return CPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self), len(other))
        out = np.zeros(n, dtype=complex)
        out[: len(self)] += self.coeffs
        out[: len(other)] += other.coeffs
        return CPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return CPoly(-self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return CPoly()
        return CPoly(np.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = CPoly([1.0]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


def _as_coeffs(p):
    return p.coeffs if isinstance(p, CPoly) else CPoly(p).coeffs


def _horner_rows(a, x):
    """Evaluate each row of ascending coefficients ``a`` (N, n+1) at ``x`` (N, k)."""
    acc = np.zeros(x.shape, dtype=complex)
    dacc = np.zeros(x.shape, dtype=complex)
    for j in range(a.shape[1] - 1, -1, -1):
        dacc = dacc * x + acc
        acc = acc * x + a[:, j : j + 1]
    return acc, dacc


def _initial_guesses(a):
    """Starting points on circles read off the Newton polygon of ``log|a_k|``."""
    n = len(a) - 1
    mags = np.abs(a)
    pts = [(k, math.log(mags[k])) for k in range(n + 1) if mags[k] > 0]
    hull = []
    for pt in pts:  # upper hull
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    guesses = []
    for (k0, y0), (k1, y1) in zip(hull, hull[1:]):
        u = math.exp((y0 - y1) / (k1 - k0))
        cnt = k1 - k0
        theta = 2 * np.pi * np.arange(cnt) / cnt + 2 * np.pi * k0 / n + 0.4
        guesses.extend(u * np.exp(1j * theta))
    return np.array(guesses, dtype=complex)


def roots_batch(rows, tol=ROOT_TOL, max_iter=MAX_ITER):
    """Aberth-Ehrlich iteration on a stack of polynomials of one degree.

    ``rows`` has shape (N, n+1), ascending coefficients, every leading
    coefficient nonzero. Returns an (N, n) complex array of raw (unclustered)
    roots. Exact zero constant terms are deflated before iterating.
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=complex))
    N, n1 = rows.shape
    n = n1 - 1
    if n < 1:
        return np.zeros((N, 0), dtype=complex)
    if np.any(rows[:, -1] == 0):
        raise ValueError("leading coefficient vanishes")
    out = np.zeros((N, n), dtype=complex)
    # trailing exact zeros: count leading zero coefficients per row
    nz = rows != 0
    k0 = np.argmax(nz, axis=1)
    for shift in np.unique(k0):
        idx = np.flatnonzero(k0 == shift)
        sub = rows[idx, shift:]
        if sub.shape[1] > 1:
            out[idx, : n - shift] = _aberth(sub, tol, max_iter)
        # the remaining `shift` roots are exactly zero
    return out


def _aberth(rows, tol, max_iter):
    N, n1 = rows.shape
    n = n1 - 1
    a = rows / rows[:, -1:]
    if n == 1:
        return -a[:, :1]
    z = np.stack([_initial_guesses(r) for r in a])
    absa = np.abs(a)
    active = np.ones(z.shape, dtype=bool)
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(max_iter):
        p, dp = _horner_rows(a, z)
        # backward-error stop: value at rounding level of the evaluation
        scale, _ = _horner_rows(absa, np.abs(z))
        done = np.abs(p) <= 4 * n * EPS * scale
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            diff = z[:, :, None] - z[:, None, :]
            inv = np.where(offdiag, 1.0 / np.where(offdiag, diff, 1.0), 0.0)
            s = inv.sum(axis=2)
            step = ratio / (1.0 - ratio * s)
        bad = ~np.isfinite(step)
        step[bad] = 1e-3 * (1 + np.abs(z[bad]))
        small = np.abs(step) <= EPS * np.abs(z)
        active &= ~(done | small)
        if not active.any():
            break
        z = np.where(active, z - step, z)
    p, _ = _horner_rows(a, z)
    resid = np.abs(p) / (1 + np.abs(z)) ** n
    scale = np.abs(a).max(axis=1, keepdims=True)
    if np.any(resid > tol * scale):
        raise NoConvergence(
            f"Aberth iteration did not reach residual {tol:g} after {max_iter} iterations"
        )
    return z


def _noise(coeffs, z, coeff_err=None):
    if coeff_err is None:
        n = max(len(coeffs) - 1, 1)
        return 4 * n * EPS * CPoly(np.abs(coeffs))(abs(z)).real
    err = np.broadcast_to(np.asarray(coeff_err, dtype=float), np.shape(coeffs))
    return CPoly(err)(abs(z)).real


def cluster_roots(coeffs, raw, tol=CLUSTER_TOL, kappa=4.0, coeff_err=None):
    """Group numerically coincident roots into (centroid, multiplicity) pairs.

    Two groups merge when the merged group's diameter is within ``tol`` or
    within ``kappa`` times the spread a ``k``-fold root would show under
    coefficient noise, ``(noise / |p^(k)(c)/k!|)^(1/k)``. The noise defaults
    to rounding relative to each coefficient; pass ``coeff_err`` (absolute,
    scalar or per coefficient) for coefficients that carry their own error,
    such as interpolated resultants. Edges are processed shortest first.
    """
    coeffs = _as_coeffs(coeffs)
    raw = np.asarray(raw, dtype=complex)
    m = len(raw)
    if m == 0:
        return []
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    members = {i: [i] for i in range(m)}
    edges = sorted(
        (abs(raw[i] - raw[j]), i, j) for i in range(m) for j in range(i + 1, m)
    )
    for d, i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            continue
        group = members[ri] + members[rj]
        pts = raw[group]
        c = pts.mean()
        diam = float(np.max(np.abs(pts[:, None] - pts[None, :])))
        ok = diam <= tol
        if not ok and diam < 1e100:  # huge spreads only come from near-zero leading terms
            k = len(group)
            shifted = CPoly(coeffs).taylor_shift(c).coeffs
            bk = abs(shifted[k]) if k < len(shifted) else 0.0
            if bk > 0:
                noise = _noise(coeffs, c, coeff_err)
                spread = (noise / bk) ** (1.0 / k)
                ok = diam <= kappa * spread
                # a vanishing b_k alone is not a cluster: the lower Taylor
                # coefficients must also look like those of a k-fold root
                ok = ok and all(
                    abs(shifted[j]) <= 4**k * math.comb(k, j) * bk * diam ** (k - j) + 100 * noise
                    for j in range(k)
                )
        if ok:
            parent[rj] = ri
            members[ri] = group
            del members[rj]
    out = [(complex(raw[g].mean()), len(g)) for g in members.values()]
    out.sort(key=lambda cm: (cm[0].real, cm[0].imag))
    return out


def polish_multiple(p, center, k, iters=8):
    """Newton on ``p^(k-1)``, whose zero is simple at a ``k``-fold root."""
    if k < 2:
        return center
    d = p.derivative(k - 1)
    dd = d.derivative()
    z = complex(center)
    for _ in range(iters):
        den = dd(z)
        if den == 0:
            break
        step = d(z) / den
        z -= step
        if abs(step) <= 4 * EPS * (1 + abs(z)):
            break
    return z


def roots(p, tol=ROOT_TOL, cluster_tol=CLUSTER_TOL, coeff_err=None):
    """All ``deg(p)`` roots with multiplicity, clusters snapped to centroids.

    A cluster of size ``k`` is polished by Newton on the ``(k-1)``-th
    derivative (kept only if it stays near the cluster). Output is sorted
    by (real, imag).
    """
    p = p if isinstance(p, CPoly) else CPoly(p)
    if p.is_zero():
        raise ValueError("roots of the zero polynomial are undefined")
    if p.degree == 0:
        return []
    raw = roots_batch(p.coeffs[None, :], tol=tol)[0]
    out = []
    for c, k in cluster_roots(p.coeffs, raw, tol=cluster_tol, coeff_err=coeff_err):
        if k > 1:
            spread = float(np.sort(np.abs(raw - c))[k - 1])
            z = polish_multiple(p, c, k)
            if abs(z - c) <= max(spread, cluster_tol):
                c = z
        out.extend([c] * k)
    return sorted(out, key=lambda x: (x.real, x.imag))


def count_zeros_in_disk(p, disk: Disk, samples=WINDING_SAMPLES, ratio=BOUNDARY_ZERO_RATIO):
    """Winding number of ``p`` along the sampled boundary of ``disk``."""
    p = p if isinstance(p, CPoly) else CPoly(p)
    if p.is_zero():
        raise ValueError("zero polynomial has no zero count")
    vals = p(disk.boundary(samples))
    mags = np.abs(vals)
    if mags.min() < ratio * mags.max():
        raise BoundaryZero(
            f"|p| drops to {mags.min():.3g} on the boundary (max {mags.max():.3g})"
        )
    steps = np.angle(np.roll(vals, -1) / vals)
    return int(round(steps.sum() / (2 * np.pi)))


def contour_roots(f, disk: Disk, samples=512, ratio=BOUNDARY_ZERO_RATIO):
    """Zeros of an analytic ``f`` inside ``disk`` from contour power sums.

    ``f`` must accept an array of points. The logarithm of ``f`` on the
    boundary is Fourier-analysed; negative modes give the power sums of the
    interior zeros relative to the center, and Newton's identities turn them
    into a monic polynomial. Returns the raw zeros (unclustered) and that
    local polynomial in the scaled variable ``(z - center) / radius``.
    """
    zs = disk.boundary(samples)
    vals = np.asarray(f(zs), dtype=complex)
    mags = np.abs(vals)
    if mags.min() < ratio * mags.max():
        raise BoundaryZero("function nearly vanishes on the contour")
    steps = np.angle(np.roll(vals, -1) / vals)
    k = int(round(steps.sum() / (2 * np.pi)))
    if k <= 0:
        return np.zeros(0, dtype=complex), CPoly([1.0])
    theta = 2 * np.pi * np.arange(samples) / samples
    phase = np.concatenate([[np.angle(vals[0])], np.angle(vals[0]) + np.cumsum(steps[:-1])])
    logf = np.log(mags) + 1j * (phase - k * theta)
    modes = np.fft.fft(logf) / samples
    # power sums of y = (z - center)/radius
    s = np.array([-p * modes[samples - p] for p in range(1, k + 1)])
    e = np.zeros(k + 1, dtype=complex)  # elementary symmetric polynomials
    e[0] = 1.0
    for i in range(1, k + 1):
        acc = 0j
        for j in range(1, i + 1):
            acc += (-1) ** (j - 1) * e[i - j] * s[j - 1]
        e[i] = acc / i
    # monic y^k - e1 y^(k-1) + e2 y^(k-2) ...
    coeffs = np.array([(-1) ** (k - j) * e[k - j] for j in range(k + 1)], dtype=complex)
    local = CPoly(coeffs)
    ys = roots_batch(local.coeffs[None, :], tol=1e-6)[0]
    return disk.center + disk.radius * ys, local


# ---------------------------------------------------------------------------
# multivariate


def _scalar(x):
    return complex(x)


class MPoly:
    """Sparse polynomial in ``nvars`` variables with complex coefficients."""

    nvars = None

    def __init__(self, terms: Mapping | Iterable = (), nvars=None):
        if nvars is None:
            nvars = type(self).nvars
        if nvars is None:
            raise ValueError("nvars required")
        self._n = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        t = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or min(exps) < 0:
                raise ValueError(f"bad exponent tuple {exps}")
            c = complex(c)
            if c != 0:
                t[exps] = t.get(exps, 0) + c
                if t[exps] == 0:
                    del t[exps]
        self.terms = t

    @property
    def arity(self) -> int:
        return self._n

    def _new(self, terms):
        if type(self) is MPoly:
            return MPoly(terms, nvars=self._n)
        return type(self)(terms)

    @classmethod
    def constant(cls, c, nvars=None):
        n = nvars or cls.nvars
        obj = MPoly({(0,) * n: c}, nvars=n) if cls is MPoly else cls({(0,) * n: c})
        return obj

    @classmethod
    def variable(cls, k, nvars=None):
        n = nvars or cls.nvars
        e = [0] * n
        e[k] = 1
        return MPoly({tuple(e): 1.0}, nvars=n) if cls is MPoly else cls({tuple(e): 1.0})

    def is_zero(self):
        return not self.terms

    def degree(self, k=None):
        if not self.terms:
            return -1
        if k is None:
            return max(sum(e) for e in self.terms)
        return max(e[k] for e in self.terms)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other._n != self._n:
                raise ValueError("variable count mismatch")
            return other
        return self._new({(0,) * self._n: _scalar(other)})

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return self._new(t)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return self._new(t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            raise TypeError("polynomial division is not supported")
        return self * (1.0 / complex(other))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out, base = self._coerce(1.0), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def substitute(self, values):
        """Evaluate at ``values`` (numbers or ring elements), one per variable."""
        if len(values) != self._n:
            raise ValueError("wrong number of values")
        cache = [dict() for _ in range(self._n)]

        def power(k, e):
            if e not in cache[k]:
                cache[k][e] = values[k] ** e
            return cache[k][e]

        acc = None
        for exps, c in sorted(self.terms.items()):
            term = c
            for k, e in enumerate(exps):
                if e:
                    term = term * power(k, e)
            acc = term if acc is None else acc + term
        return 0j if acc is None else acc

    def __repr__(self):
        return f"{type(self).__name__}({self.terms!r})"


class BivarPoly(MPoly):
    """Polynomial ``F(z, w)``; exponent tuples are ``(i, j)`` = (z-degree, w-degree)."""

    nvars = 2

    def __init__(self, terms: Mapping | Iterable = ()):
        super().__init__(terms, nvars=2)

    @classmethod
    def z(cls):
        return cls({(1, 0): 1.0})

    @classmethod
    def w(cls):
        return cls({(0, 1): 1.0})

    @property
    def w_degree(self):
        return self.degree(1)

    @property
    def z_degree(self):
        return self.degree(0)

    def dense(self):
        """Dense coefficient matrix ``C[i, j]`` for ``z^i w^j``."""
        C = np.zeros((max(self.z_degree, 0) + 1, max(self.w_degree, 0) + 1), dtype=complex)
        for (i, j), c in self.terms.items():
            C[i, j] = c
        return C

    def w_coeffs(self):
        """Coefficients of ``w^j`` as univariate polynomials in ``z``."""
        C = self.dense()
        return [CPoly(C[:, j]) for j in range(C.shape[1])]

    def slice_rows(self, zs):
        """Stacked ascending w-coefficients of ``w -> F(z, w)`` for each ``z``."""
        zs = np.atleast_1d(np.asarray(zs, dtype=complex))
        C = self.dense()
        acc = np.zeros((len(zs), C.shape[1]), dtype=complex)
        for i in range(C.shape[0] - 1, -1, -1):
            acc = acc * zs[:, None] + C[i][None, :]
        return acc

    def diff_w(self, k=1):
        t = {}
        for (i, j), c in self.terms.items():
            if j >= k:
                t[(i, j - k)] = c * math.perm(j, k)
        return BivarPoly(t)

    def diff_z(self, k=1):
        t = {}
        for (i, j), c in self.terms.items():
            if i >= k:
                t[(i - k, j)] = c * math.perm(i, k)
        return BivarPoly(t)

    def translate(self, dz, dw):
        """``(z, w) -> F(z + dz, w + dw)``."""
        out = {}
        for (i, j), c in self.terms.items():
            for a in range(i + 1):
                ca = math.comb(i, a) * complex(dz) ** (i - a)
                if ca == 0:
                    continue
                for b in range(j + 1):
                    cb = math.comb(j, b) * complex(dw) ** (j - b)
                    if cb == 0:
                        continue
                    out[(a, b)] = out.get((a, b), 0) + c * ca * cb
        return BivarPoly(out)

    def swap(self):
        return BivarPoly({(j, i): c for (i, j), c in self.terms.items()})

    def eval_many(self, zs, ws):
        """Vectorised evaluation at paired arrays of points."""
        zs = np.asarray(zs, dtype=complex)
        ws = np.asarray(ws, dtype=complex)
        rows = self.slice_rows(zs.ravel())
        acc = np.zeros(zs.size, dtype=complex)
        wf = ws.ravel()
        for j in range(rows.shape[1] - 1, -1, -1):
            acc = acc * wf + rows[:, j]
        return acc.reshape(zs.shape)


def eval_bivar(p: BivarPoly, z, w) -> complex:
    """``p(z, w)``: Horner in ``z`` per w-coefficient, then Horner in ``w``.

    Identical arithmetic to ``w_slice(p, z)(w)``.
    """
    return w_slice(p, z)(w)


def w_slice(p: BivarPoly, z0) -> CPoly:
    """The univariate polynomial ``w -> p(z0, w)``."""
    z0 = complex(z0)
    return CPoly([c(z0) for c in p.w_coeffs()]) if p.terms else CPoly()


def _sylvester(a, b):
    """Sylvester matrices for stacked coefficient rows (descending powers)."""
    N, na1 = a.shape
    nb1 = b.shape[1]
    m, n = na1 - 1, nb1 - 1
    S = np.zeros((N, m + n, m + n), dtype=complex)
    for r in range(n):
        S[:, r, r : r + m + 1] = a
    for r in range(m):
        S[:, n + r, r : r + n + 1] = b
    return S


def resultant_values(p: BivarPoly, q: BivarPoly, zs):
    """``Res_w(p, q)`` evaluated at each point of ``zs`` by Sylvester determinant.

    The determinant uses LU with partial pivoting. Both polynomials are taken
    at their formal w-degree, so the values vanish where both leading
    coefficients vanish.
    """
    if p.w_degree < 1 or q.w_degree < 1:
        raise ZeroWDegree("both polynomials need positive degree in w")
    for f in (p, q):
        if f.w_degree > MAX_DEGREE or f.z_degree > MAX_DEGREE:
            raise DegreeCap(f"degree exceeds {MAX_DEGREE} in some variable")
    zs = np.atleast_1d(np.asarray(zs, dtype=complex))
    a = p.slice_rows(zs)[:, ::-1]
    b = q.slice_rows(zs)[:, ::-1]
    return np.linalg.det(_sylvester(a, b))


def resultant_with_error(p: BivarPoly, q: BivarPoly, radius=1.0):
    """Interpolated ``Res_w(p, q)`` and the absolute error of its coefficients.

    Determinants are sampled at roots of unity scaled by ``radius`` and
    interpolated by FFT. Coefficients below the interpolation rounding floor
    are set to exact zero.
    """
    if p.w_degree < 1 or q.w_degree < 1:
        raise ZeroWDegree("both polynomials need positive degree in w")
    bound = p.w_degree * max(q.z_degree, 0) + q.w_degree * max(p.z_degree, 0)
    n = 1
    while n < 2 * (bound + 1):
        n *= 2
    zs = radius * np.exp(2j * np.pi * np.arange(n) / n)
    vals = resultant_values(p, q, zs)
    coeffs = np.fft.fft(vals)[: bound + 1] / n
    coeffs = coeffs / radius ** np.arange(bound + 1)
    floor = 64 * EPS * np.abs(vals).max() / radius ** np.arange(bound + 1)
    coeffs[np.abs(coeffs) <= floor] = 0
    return CPoly(coeffs), floor[: len(CPoly(coeffs))]


def resultant_w(p: BivarPoly, q: BivarPoly, radius=1.0) -> CPoly:
    """Sylvester resultant eliminating ``w``, as a polynomial in ``z``."""
    return resultant_with_error(p, q, radius)[0]


def pairwise_min(points) -> float:
    pts = np.asarray(points, dtype=complex)
    if len(pts) < 2:
        return math.inf
    d = np.abs(pts[:, None] - pts[None, :])
    d[np.diag_indices(len(pts))] = np.inf
    return float(d.min())


def canonical(points):
    """Sort complex numbers by (real, imag)."""
    return sorted((complex(x) for x in points), key=lambda c: (c.real, c.imag))


__all__ = [
    "Disk",
    "CPoly",
    "MPoly",
    "BivarPoly",
    "eval_bivar",
    "w_slice",
    "resultant_w",
    "resultant_with_error",
    "resultant_values",
    "roots",
    "roots_batch",
    "cluster_roots",
    "count_zeros_in_disk",
    "contour_roots",
    "canonical",
    "pairwise_min",
]
