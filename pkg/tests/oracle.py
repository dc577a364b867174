"""Brute-force intersection oracle, independent of the library's solvers.

Grids the base disk (n x n Cartesian points), solves each w-slice with
companion-matrix eigenvalues, and refines the closest (z, w_F, w_G)
triples with two-variable Newton iteration using exact monomial sums.
"""

import numpy as np


def _dense(terms):
    m = max(j for (_, j) in terms)
    k = max(i for (i, _) in terms)
    C = np.zeros((k + 1, m + 1), dtype=complex)
    for (i, j), c in terms.items():
        C[i, j] += c
    return C


def _slices(C, zs):
    # rows[:, j] = sum_i C[i, j] z^i
    powers = zs[:, None] ** np.arange(C.shape[0])[None, :]
    return powers @ C


def _fibers(C, zs):
    rows = _slices(C, zs)
    m = C.shape[1] - 1
    lead = rows[:, -1:]
    comp = np.zeros((len(zs), m, m), dtype=complex)
    comp[:, 0, :] = -rows[:, -2::-1] / lead
    if m > 1:
        comp[:, np.arange(1, m), np.arange(m - 1)] = 1
    return np.linalg.eigvals(comp)


def _value(terms, z, w):
    return sum(c * z**i * w**j for (i, j), c in terms.items())


def _grad(terms, z, w):
    dz = sum(c * i * z ** (i - 1) * w**j for (i, j), c in terms.items() if i)
    dw = sum(c * j * z**i * w ** (j - 1) for (i, j), c in terms.items() if j)
    return dz, dw


def newton2(F, G, z, w, iters=40):
    for _ in range(iters):
        f, g = _value(F, z, w), _value(G, z, w)
        (fz, fw), (gz, gw) = _grad(F, z, w), _grad(G, z, w)
        det = fz * gw - fw * gz
        if det == 0:
            break
        dz, dw = (f * gw - fw * g) / det, (fz * g - f * gz) / det
        z, w = z - dz, w - dw
        if not (np.isfinite(z) and np.isfinite(w)) or abs(z) > 10 or abs(w) > 10:
            return None
        if abs(dz) + abs(dw) < 1e-15:
            break
    if abs(_value(F, z, w)) < 1e-10 and abs(_value(G, z, w)) < 1e-10:
        return z, w
    return None


def brute_force_intersects(F, G, base_center, base_radius, v_center, v_radius, n=200, candidates=60):
    """Return a list of common points of F = 0 and G = 0 in the closed polydisk.

    Newton is started from the local minima of the fiber-to-fiber distance
    over an n x n Cartesian grid, smallest first.
    """
    F, G = dict(F.terms), dict(G.terms)
    xs = np.linspace(-base_radius, base_radius, n)
    grid = base_center + xs[:, None] + 1j * xs[None, :]
    zs = grid.ravel()
    wf, wg = _fibers(_dense(F), zs), _fibers(_dense(G), zs)
    d = np.abs(wf[:, :, None] - wg[:, None, :])
    pair = d.reshape(len(zs), -1).argmin(axis=1)
    dmin = d.reshape(len(zs), -1).min(axis=1).reshape(n, n)
    dmin[np.abs(grid - base_center) > base_radius * 1.02] = np.inf
    padded = np.pad(dmin, 1, constant_values=np.inf)
    neigh = np.min([padded[1 + a : n + 1 + a, 1 + b : n + 1 + b]
                    for a in (-1, 0, 1) for b in (-1, 0, 1) if a or b], axis=0)
    minima = np.flatnonzero((dmin <= neigh).ravel() & np.isfinite(dmin.ravel()))
    minima = minima[np.argsort(dmin.ravel()[minima], kind="stable")][:candidates]
    found = []
    m = wg.shape[1]
    for k in minima:
        i, j = divmod(int(pair[k]), m)
        hit = newton2(F, G, zs[k], 0.5 * (wf[k, i] + wg[k, j]))
        if hit is None:
            continue
        z, w = hit
        if abs(z - base_center) <= base_radius * (1 + 1e-9) and abs(w - v_center) <= v_radius * (1 + 1e-9):
            if all(abs(z - a) + abs(w - b) > 1e-7 for a, b in found):
                found.append((z, w))
    return found
