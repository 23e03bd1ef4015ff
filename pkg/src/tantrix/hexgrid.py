"""Hexagonal coordinates.

Two cells ``(u, w)`` and ``(v, x)`` are adjacent when ``u == v`` and
``|w - x| == 1``, when ``|u - v| == 1`` and ``w == x``, or when
``u - v == w - x == ±1``.  That gives six neighbours per cell, reached through
the direction offsets below.  Consecutive direction indices are consecutive
around the hexagon, so turning a tile by one step shifts every edge index by
one.
"""

from typing import NamedTuple, Optional


class Coord(NamedTuple):
    u: int
    w: int

    def __add__(self, other):
        return Coord(self.u + other[0], self.w + other[1])

    def __sub__(self, other):
        return Coord(self.u - other[0], self.w - other[1])

    def __neg__(self):
        return Coord(-self.u, -self.w)


OFFSETS = (
    Coord(1, 0),
    Coord(1, 1),
    Coord(0, 1),
    Coord(-1, 0),
    Coord(-1, -1),
    Coord(0, -1),
)

DIRECTIONS = range(6)

_OFFSET_TO_DIRECTION = {off: d for d, off in enumerate(OFFSETS)}


def opposite(d: int) -> int:
    return (d + 3) % 6


def neighbor(c, d: int) -> Coord:
    du, dw = OFFSETS[d]
    return Coord(c[0] + du, c[1] + dw)


def neighbors(c):
    """The six neighbours of ``c`` in direction order."""
    return [neighbor(c, d) for d in DIRECTIONS]


def adjacency(a, b) -> Optional[int]:
    """Direction ``d`` with ``neighbor(a, d) == b``, or None if not adjacent."""
    return _OFFSET_TO_DIRECTION.get((b[0] - a[0], b[1] - a[1]))


def is_adjacent(a, b) -> bool:
    return adjacency(a, b) is not None
