"""Analytic continuation of fibers around loops in the base.

The fiber over each point of a discretised circle is solved in one batch;
paths are then stitched step by step by nearest-root matching, refusing any
step where the match is ambiguous.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import DegenerateSlice, OnDiscriminant, PathJump
from .polycalc import BivarPoly, Disk, canonical, pairwise_min, roots_batch
from .projection import DiscriminantReport, Fiber, discriminant

log = logging.getLogger(__name__)

STEPS_PER_TURN = 512
MAX_STEPS_PER_TURN = 4096
JUMP_FRACTION = 0.4
COLLAPSE_RATIO = 1e-9


@dataclass(frozen=True)
class LoopSpec:
    center: complex
    radius: float
    turns: int = 1
    steps_per_turn: int = STEPS_PER_TURN

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        if not self.radius > 0:
            raise ValueError("loop radius must be positive")
        if self.turns < 1:
            raise ValueError("turns must be >= 1")
        if self.steps_per_turn < 16:
            raise ValueError("steps_per_turn must be >= 16")

    def points(self):
        n = self.turns * self.steps_per_turn
        theta = 2 * np.pi * np.arange(n + 1) / self.steps_per_turn
        return self.center + self.radius * np.exp(1j * theta)


def cycle_lengths(perm):
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        n, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            n += 1
        out.append(n)
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class MonodromyResult:
    """``permutation[i] = j``: the path leaving start point ``i`` ends at start point ``j``.

    Indices are 0-based into ``start_fiber.points`` (canonical order).
    """

    permutation: tuple
    start_fiber: Fiber
    steps_per_turn: int

    @property
    def cycles(self):
        return cycle_lengths(self.permutation)

    @property
    def order(self):
        return reduce(math.lcm, self.cycles, 1)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.permutation))

    def power(self, k):
        perm = list(range(len(self.permutation)))
        for _ in range(k):
            perm = [self.permutation[p] for p in perm]
        return tuple(perm)


def _track_once(F: BivarPoly, loop: LoopSpec):
    zs = loop.points()
    rows = F.slice_rows(zs)
    lead = np.abs(rows[:, -1])
    if np.any(lead <= 1e-14 * np.abs(rows).max(axis=1)):
        raise DegenerateSlice("leading w-coefficient vanishes on the loop")
    fibers = roots_batch(rows)
    start = np.array(canonical(fibers[0]))
    scale = 1.0 + np.abs(fibers).max()
    sep0 = pairwise_min(start)
    if sep0 <= COLLAPSE_RATIO * scale:
        raise OnDiscriminant(f"start fiber over {zs[0]} has coincident points")
    current = start
    sep = sep0
    m = len(start)
    for k in range(1, len(zs)):
        cand = fibers[k]
        d = np.abs(current[:, None] - cand[None, :])
        hits = d < JUMP_FRACTION * sep
        if not np.all(hits.sum(axis=1) == 1):
            raise PathJump(f"ambiguous continuation at step {k} (z={zs[k]:.6g})")
        assign = np.argmax(hits, axis=1)
        if len(set(assign.tolist())) != m:
            raise PathJump(f"two paths merged at step {k}")
        current = cand[assign]
        sep = pairwise_min(current)
        if sep <= COLLAPSE_RATIO * scale:
            raise OnDiscriminant(f"fiber collapses near z={zs[k]:.6g}")
    d = np.abs(current[:, None] - start[None, :])
    perm = tuple(int(j) for j in np.argmin(d, axis=1))
    if len(set(perm)) != m or np.any(d.min(axis=1) >= JUMP_FRACTION * sep0):
        raise PathJump("loop did not close onto the start fiber")
    return perm, Fiber(zs[0], start)


def track(F: BivarPoly, loop: LoopSpec, max_steps=MAX_STEPS_PER_TURN) -> MonodromyResult:
    """Monodromy permutation of the fiber along ``loop``.

    On ``PathJump`` the step count is doubled up to ``max_steps`` per turn
    before the error is surfaced.
    """
    if F.w_degree < 1:
        raise DegenerateSlice("curve is constant in w")
    steps = loop.steps_per_turn
    while True:
        try:
            perm, start = _track_once(
                F, LoopSpec(loop.center, loop.radius, loop.turns, steps)
            )
            return MonodromyResult(perm, start, steps)
        except PathJump:
            if steps * 2 > max_steps:
                raise
            steps *= 2
            log.debug("path jump; retrying with %d steps per turn", steps)


def branch_count(F: BivarPoly, base: Disk, steps_per_turn=STEPS_PER_TURN):
    """Cycle sizes of the monodromy once around ``base``, largest first."""
    return track(F, LoopSpec(base.center, base.radius, 1, steps_per_turn)).cycles


def locate_nnc(F: BivarPoly, base: Disk, candidates: DiscriminantReport | None = None):
    """Locations of the non-normal-crossing discriminant points inside ``base``."""
    if candidates is None:
        candidates = discriminant(F, base)
    return [p.location for p in candidates.points
            if p.crossing.value == "non_normal_crossing"
            and abs(p.location - base.center) < base.radius]


__all__ = [
    "LoopSpec",
    "MonodromyResult",
    "track",
    "branch_count",
    "locate_nnc",
    "cycle_lengths",
]
