"""Puiseux parametrizations ``t -> (t^m, g(t))`` of curve germs.

Numerical Newton-Puiseux: edges of the Newton polygon give leading
exponents, edge-polynomial roots give leading coefficients, and the
substitution ``z = t^q, w = t^p (c + w1)`` is repeated until each branch
is a smooth graph, which is then solved as a power series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NonSquareFree, OrderTooSmall, TrivialPolygon, VerticalComponent
from .polycalc import BivarPoly, CPoly, resultant_w, roots

DEFAULT_ORDER = 16
ON_CURVE_TOL = 1e-9
EXACT_TOL = 1e-13


@dataclass(frozen=True)
class Edge:
    slope: Fraction
    monomials: tuple

    @property
    def exponent(self) -> Fraction:
        """Leading Puiseux exponent ``w ~ c z^exponent`` along this edge."""
        return -self.slope


@dataclass(frozen=True)
class PuiseuxParam:
    """``t -> (t^ramification + shift_z, g(t) + shift_w)``.

    ``series[k]`` is the coefficient of ``t^k`` in ``g``; exponents run
    below ``truncation_order``. ``exact`` marks series that terminate, so the
    parametrization is exact rather than truncated.
    """

    ramification: int
    series: tuple
    truncation_order: int
    base_shift: tuple = (0j, 0j)
    exact: bool = False

    def g(self, t):
        return CPoly(self.series)(t)

    def __call__(self, t):
        zs, ws = self.base_shift
        return np.asarray(t, dtype=complex) ** self.ramification + zs, self.g(t) + ws

    def leading(self):
        """(exponent, coefficient) of the first nonzero term of ``g``."""
        for k, c in enumerate(self.series):
            if c != 0:
                return k, c
        return None


def newton_polygon(F: BivarPoly):
    """Edges of the Newton polygon joining the w-axis to the z-axis.

    Support points are ``(i, j)`` for ``z^i w^j``. Each edge's slope is
    ``delta_i / delta_j`` (negative); the leading exponent is ``-slope``.
    """
    if len(F.terms) <= 1:
        raise TrivialPolygon("polynomial is a monomial")
    if (0, 0) in F.terms:
        raise ValueError("F(0, 0) != 0: the origin is not on the curve")
    on_w = [j for (i, j) in F.terms if i == 0]
    on_z = [i for (i, j) in F.terms if j == 0]
    if not on_w:
        raise ValueError("F is divisible by z; divide out the factor first")
    if not on_z:
        raise ValueError("F is divisible by w; divide out the factor first")
    start, end = (0, min(on_w)), (min(on_z), 0)
    pts = sorted(p for p in F.terms if p[0] <= end[0] and p[1] <= start[1])
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    hull = hull[hull.index(start): hull.index(end) + 1]
    edges = []
    for a, b in zip(hull, hull[1:]):
        di, dj = b[0] - a[0], b[1] - a[1]
        on = tuple(sorted(
            (p for p in F.terms
             if (p[0] - a[0]) * dj - (p[1] - a[1]) * di == 0 and a[0] <= p[0] <= b[0]),
            key=lambda p: p[1],
        ))
        edges.append(Edge(Fraction(di, dj), on))
    return edges


def _series_mul(a, b, n):
    return np.convolve(a, b)[:n] if len(a) and len(b) else np.zeros(0, dtype=complex)


def _eval_series(P: BivarPoly, h, n):
    """``P(t, h(t)) mod t^n`` for a truncated series ``h``."""
    cols = P.w_coeffs()
    acc = np.zeros(n, dtype=complex)
    for col in reversed(cols):
        acc = _series_mul(acc, h, n)
        acc = np.pad(acc, (0, n - len(acc)))
        c = col.coeffs[:n]
        acc[: len(c)] += c
    return acc


def _solve_graph(P: BivarPoly, n):
    """Series ``h`` with ``h(0) = 0`` and ``P(t, h(t)) = 0 mod t^n``; needs dP/dw(0,0) != 0."""
    a = P.terms.get((0, 1), 0)
    h = np.zeros(n, dtype=complex)
    for _ in range(n):
        r = _eval_series(P, h, n)
        if not np.any(r):
            break
        h = h - r / a
    return h


def _composition_vanishes(P: BivarPoly, h):
    """Is ``P(t, h(t))`` zero as an untruncated polynomial (up to rounding)?"""
    cols = P.w_coeffs()
    hp = CPoly(h)
    acc, mag = CPoly(), CPoly()
    hm = CPoly(np.abs(hp.coeffs))
    for col in reversed(cols):
        acc = acc * hp + col
        mag = mag * hm + CPoly(np.abs(col.coeffs))
    if acc.is_zero():
        return True
    scale = max(np.abs(mag.coeffs).max(), max(abs(a) for a in P.terms.values()))
    return bool(np.abs(acc.coeffs).max() <= EXACT_TOL * scale)


def _substitute(P: BivarPoly, p, q, c, N):
    """``P(t^q, t^p (c + y)) / t^N``."""
    out = {}
    for (i, j), a in P.terms.items():
        e = q * i + p * j - N
        for b in range(j + 1):
            coef = a * math.comb(j, b) * c ** (j - b)
            if coef != 0:
                out[(e, b)] = out.get((e, b), 0) + coef
    return BivarPoly(out)


def _snap(u, tol=1e-14):
    re, im = u.real, u.imag
    if abs(im) <= tol * abs(u):
        im = 0.0
    if abs(re) <= tol * abs(u):
        re = 0.0
    return complex(re, im)


def _branches(P: BivarPoly, order):
    """List of (ramification, series array, exact) with ``P(t^m, g(t)) ~ 0``."""
    out = []
    on_z = [i for (i, j) in P.terms if j == 0]
    if not on_z:  # y divides P: the branch y = 0
        stripped = BivarPoly({(i, j - 1): a for (i, j), a in P.terms.items()})
        if not [i for (i, j) in stripped.terms if j == 0]:
            raise NonSquareFree("repeated factor w at the center")
        out.append((1, np.zeros(max(order, 1), dtype=complex), True))
        if (0, 0) in stripped.terms:
            return out  # the remaining factor does not pass through the center
        P = stripped
    if len(P.terms) <= 1:
        return out
    for edge in newton_polygon(P):
        gamma = edge.exponent
        p, q = gamma.numerator, gamma.denominator
        jmin = edge.monomials[0][1]
        N = q * edge.monomials[0][0] + p * jmin
        psi = np.zeros((edge.monomials[-1][1] - jmin) // q + 1, dtype=complex)
        for (i, j) in edge.monomials:
            psi[(j - jmin) // q] = P.terms[(i, j)]
        us = roots(CPoly(psi))
        distinct = []
        for u in us:
            for d in distinct:
                if d[0] == u:
                    d[1] += 1
                    break
            else:
                distinct.append([u, 1])
        for u, mult in distinct:
            c = _snap(complex(u)) ** (1.0 / q)
            P1 = _substitute(P, p, q, c, N)
            # t^0 terms below y^mult vanish in exact arithmetic
            scale = max(abs(a) for (e, b), a in P1.terms.items() if e == 0)
            for b in range(mult):
                if (0, b) in P1.terms:
                    if abs(P1.terms[(0, b)]) > 1e-8 * scale:
                        raise ArithmeticError("edge root failed to annihilate the edge polynomial")
                    del P1.terms[(0, b)]
            if mult == 1:
                n = max(order - p, 1)
                h = _solve_graph(P1, n)
                exact = _composition_vanishes(P1, h)
                g = np.zeros(max(order, p + 1), dtype=complex)
                g[p] += c
                g[p: p + n] += h
                out.append((q, g[:order], exact and p < order))
                continue
            if order - p <= 0:
                raise OrderTooSmall(f"branches coincide up to order {order}")
            for m1, g1, ex1 in _branches(P1, order - p):
                shift = p * m1
                g = np.zeros(order, dtype=complex)
                if shift < order:
                    g[shift] += c
                    k = min(len(g1), order - shift)
                    g[shift: shift + k] += g1[:k]
                cut = g1[max(order - shift, 0):]
                out.append((q * m1, g, ex1 and shift < order and not np.any(cut)))
    return out


def puiseux_expand(F: BivarPoly, center=(0j, 0j), order=DEFAULT_ORDER, check_square_free=True):
    """One parametrization per local branch of ``F = 0`` at ``center``."""
    zc, wc = complex(center[0]), complex(center[1])
    P = F.translate(zc, wc)
    scale = max(abs(a) for a in F.terms.values())
    const = P.terms.pop((0, 0), 0)
    if abs(const) > ON_CURVE_TOL * scale * (1 + abs(zc) + abs(wc)) ** max(F.degree(), 1):
        raise ValueError(f"center {center} is not on the curve (|F| = {abs(const):.3g})")
    P = BivarPoly(P.terms)
    if check_square_free and F.w_degree >= 2 and resultant_w(F, F.diff_w()).is_zero():
        raise NonSquareFree("F has a repeated factor in w")
    if not [j for (i, j) in P.terms if i == 0]:
        raise VerticalComponent(f"the line z = {zc} lies on the curve")
    params = []
    for m, g, exact in _branches(P, order):
        series = np.zeros(order, dtype=complex)
        series[: min(order, len(g))] = g[:order]
        params.append(PuiseuxParam(m, tuple(complex(x) for x in series), order, (zc, wc), bool(exact)))
    params.sort(key=_branch_key)
    return params


def _branch_key(pp):
    lead = pp.leading()
    if lead is None:
        return (-pp.ramification, pp.truncation_order, 0.0, 0.0)
    k, c = lead
    return (-pp.ramification, k, c.real, c.imag)


def param_residual(param: PuiseuxParam, F: BivarPoly, samples=256, radius=0.3) -> float:
    """Largest ``|F(param(t))|`` over ``samples`` points of ``|t| = radius``."""
    t = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
    z, w = param(t)
    return float(np.abs(F.eval_many(z, w)).max())


def singular_centers(F: BivarPoly, locations, tol=1e-6):
    """Points ``(q, w)`` over the given base points where sheets coincide."""
    from .projection import coincidence_tol, fiber

    centers = []
    for q in locations:
        fib = fiber(F, q)
        for w, k in fib.distinct(tol=max(tol, coincidence_tol(fib))):
            if k > 1:
                centers.append((complex(q), complex(w)))
    return canonical_pairs(centers)


def canonical_pairs(pairs):
    return sorted(pairs, key=lambda zw: (zw[0].real, zw[0].imag, zw[1].real, zw[1].imag))


__all__ = [
    "Edge",
    "PuiseuxParam",
    "newton_polygon",
    "puiseux_expand",
    "param_residual",
    "singular_centers",
]
