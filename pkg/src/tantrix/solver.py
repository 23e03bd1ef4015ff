"""Exact solving and counting of rotation puzzles.

Every placed cell is a variable whose domain is a 6-bit mask of rotations.
Joint edges are binary constraints (equal colours on both sides) and clamps
are unary ones.  Counting runs arc consistency, splits the still-undecided
cells into independent components, and backtracks inside each component on
the cell with the smallest domain (ties broken by ``(u, w)``).
Enumeration uses a static cell order instead so that solutions come out in
lexicographic order of their rotation vectors.
"""

import sys
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional

import numpy as np

from .errors import TooLarge
from .hexgrid import neighbor, opposite
from .instance import Instance, Solution
from .tiles import COLORS

FULL = 0b111111
_COLOR_BIT = {c: 1 << i for i, c in enumerate(COLORS)}
_POPCOUNT = [bin(m).count("1") for m in range(64)]
_LOWEST = [(m & -m).bit_length() - 1 for m in range(64)]


@lru_cache(maxsize=None)
def _tables(code: str):
    """Per-edge lookup tables for one tile word.

    ``shown[d][mask]``   colour bits visible at edge d over the rotations in mask
    ``allowed[d][bits]`` rotations that put one of the colours in bits at edge d
    ``exact[d][color]``  rotations that put ``color`` at edge d
    """
    shown, allowed, exact = [], [], []
    for d in range(6):
        by_color = {c: 0 for c in COLORS}
        for r in range(6):
            by_color[code[(d - r) % 6]] |= 1 << r
        exact.append(by_color)
        s = [0] * 64
        for mask in range(64):
            bits = 0
            for r in range(6):
                if mask >> r & 1:
                    bits |= _COLOR_BIT[code[(d - r) % 6]]
            s[mask] = bits
        shown.append(tuple(s))
        a = [0] * 16
        for bits in range(16):
            m = 0
            for c in COLORS:
                if bits & _COLOR_BIT[c]:
                    m |= by_color[c]
            a[bits] = m
        allowed.append(tuple(a))
    return tuple(shown), tuple(allowed), tuple(exact)


@dataclass
class SolveReport:
    count: int
    solutions: Optional[List[Solution]] = None
    nodes: int = 0
    prunings: int = 0


class _Search:
    def __init__(self, instance: Instance):
        self.cells = instance.cells()
        index = {c: i for i, c in enumerate(self.cells)}
        self.codes = [instance.placements[c] for c in self.cells]
        self.tables = [_tables(code) for code in self.codes]
        # arcs[i]: (d, j) with neighbor(cells[i], d) == cells[j]
        self.arcs = []
        for c in self.cells:
            row = []
            for d in range(6):
                j = index.get(neighbor(c, d))
                if j is not None:
                    row.append((d, j))
            self.arcs.append(tuple(row))
        self.initial = [FULL] * len(self.cells)
        for (c, d), color in instance.clamps.items():
            i = index[c]
            self.initial[i] &= self.tables[i][2][d][color]
        self.nodes = 0
        self.prunings = 0

    def propagate(self, dom, queue) -> bool:
        """Arc consistency from the cells in ``queue``; False on a wipe-out."""
        arcs, tables = self.arcs, self.tables
        pending = deque(queue)
        queued = set(queue)
        while pending:
            j = pending.popleft()
            queued.discard(j)
            dj = dom[j]
            shown_j = tables[j][0]
            for d, i in arcs[j]:
                di = dom[i]
                bits = shown_j[d][dj]
                new = di & tables[i][1][opposite(d)][bits]
                if new != di:
                    self.prunings += 1
                    if not new:
                        return False
                    dom[i] = new
                    if i not in queued:
                        queued.add(i)
                        pending.append(i)
        return True

    def start(self):
        dom = list(self.initial)
        if any(m == 0 for m in dom):
            return None
        if not self.propagate(dom, range(len(dom))):
            return None
        return dom

    # -- counting -----------------------------------------------------------

    def components(self, dom, cells):
        open_cells = [i for i in cells if _POPCOUNT[dom[i]] > 1]
        seen = set()
        out = []
        for s in open_cells:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            stack = [s]
            while stack:
                i = stack.pop()
                for _, j in self.arcs[i]:
                    if j not in seen and _POPCOUNT[dom[j]] > 1:
                        seen.add(j)
                        comp.append(j)
                        stack.append(j)
            comp.sort()
            out.append(comp)
        return out

    def count(self, dom, cells, cap=None):
        total = 1
        for comp in self.components(dom, cells):
            n = self.count_component(dom, comp, cap)
            total *= n
            if total == 0:
                return 0
            if cap is not None and total >= cap:
                return total
        return total

    def count_component(self, dom, comp, cap):
        self.nodes += 1
        var = min(comp, key=lambda i: _POPCOUNT[dom[i]])
        total = 0
        mask = dom[var]
        while mask:
            r = _LOWEST[mask]
            mask &= mask - 1
            trial = list(dom)
            trial[var] = 1 << r
            if not self.propagate(trial, [var]):
                continue
            total += self.count(trial, comp, cap)
            if cap is not None and total >= cap:
                break
        return total

    # -- enumeration --------------------------------------------------------

    def enumerate(self, dom, cap, out):
        self.nodes += 1
        for i, m in enumerate(dom):
            if _POPCOUNT[m] > 1:
                var = i
                break
        else:
            out.append(Solution({c: _LOWEST[m] for c, m in zip(self.cells, dom)}))
            return
        mask = dom[var]
        while mask and len(out) < cap:
            r = _LOWEST[mask]
            mask &= mask - 1
            trial = list(dom)
            trial[var] = 1 << r
            if self.propagate(trial, [var]):
                self.enumerate(trial, cap, out)


def _recursion_headroom(instance):
    need = 2 * len(instance) + 1000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def solve(instance: Instance, enumerate_cap: Optional[int] = None, count_cap=None) -> SolveReport:
    """Count solutions exactly; optionally enumerate up to ``enumerate_cap`` of them.

    With ``count_cap`` the count stops growing once it reaches the cap, which
    is all :func:`is_unique` needs.
    """
    _recursion_headroom(instance)
    search = _Search(instance)
    dom = search.start()
    if dom is None:
        count = 0
    else:
        count = search.count(dom, range(len(dom)), count_cap)
        if count_cap is not None:
            count = min(count, count_cap)
    solutions = None
    if enumerate_cap is not None:
        solutions = []
        if dom is not None and count:
            search.enumerate(dom, enumerate_cap, solutions)
    return SolveReport(count, solutions, search.nodes, search.prunings)


def count_solutions(instance: Instance) -> int:
    return solve(instance).count


def enumerate_solutions(instance: Instance, cap: int) -> List[Solution]:
    if cap < 1:
        raise ValueError("cap must be positive")
    _recursion_headroom(instance)
    search = _Search(instance)
    dom = search.start()
    out = []
    if dom is not None:
        search.enumerate(dom, cap, out)
    return out


def decide(instance: Instance) -> bool:
    return bool(enumerate_solutions(instance, 1))


def is_unique(instance: Instance) -> bool:
    return solve(instance, count_cap=2).count == 1


def brute_force_count(instance: Instance, limit: int = 10) -> int:
    """Count solutions by testing every one of the ``6**n`` rotation vectors.

    The full grid of vectors is materialised as an n-dimensional boolean
    array; each joint edge and clamp masks out the vectors it forbids.
    """
    cells = instance.cells()
    n = len(cells)
    if n > limit:
        raise TooLarge(f"{n} tiles exceed the brute-force limit of {limit}")
    if n == 0:
        return 1
    axis = {c: k for k, c in enumerate(cells)}

    def edge_colors(c, d):
        shape = [1] * n
        shape[axis[c]] = 6
        word = instance.placements[c]
        return np.array([word[(d - r) % 6] for r in range(6)]).reshape(shape)

    ok = np.ones((6,) * n, dtype=bool)
    for a, d, b in instance.joint_edges():
        ok &= edge_colors(a, d) == edge_colors(b, opposite(d))
    for (c, d), color in instance.clamps.items():
        ok &= edge_colors(c, d) == color
    return int(np.count_nonzero(ok))
