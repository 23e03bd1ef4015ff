"""Rotation-puzzle instances, solutions and their text formats.

Instance file::

    # comment
    u w WORD        placement of a tile at (u, w)
    ! u w d c       clamp: edge d of the tile at (u, w) must show colour c

Solution file: one ``u w r`` line per placed cell, ``r`` in 0..5.
Serializers sort cells by ``(u, w)`` and write canonical tile words.
"""

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import (
    DanglingClamp,
    DomainMismatch,
    DuplicateCell,
    InvalidTile,
    ParseError,
)
from .hexgrid import Coord, neighbor, opposite
from .tiles import COLORS, OrientedTile, canonicalize, color_at


@dataclass(frozen=True)
class Instance:
    """A finite partial map from cells to tiles plus optional boundary clamps.

    Tile words are stored canonically; the orientation of the word given at
    construction carries no meaning.
    """

    placements: Mapping = field(default_factory=dict)
    clamps: Mapping = field(default_factory=dict)

    def __post_init__(self):
        cells = {}
        for c, word in self.placements.items():
            c = Coord(*c)
            try:
                cells[c] = canonicalize(word)[0]
            except ValueError as exc:
                raise InvalidTile(f"bad tile at {tuple(c)}: {exc}") from None
        clamps = {}
        for (c, d), color in self.clamps.items():
            c = Coord(*c)
            if c not in cells:
                raise DanglingClamp(f"clamp on empty cell {tuple(c)}")
            if not 0 <= d < 6:
                raise DanglingClamp(f"clamp direction {d} out of range")
            if neighbor(c, d) in cells:
                raise DanglingClamp(f"clamp on joint edge {tuple(c)}/{d}")
            if color not in COLORS:
                raise DanglingClamp(f"unknown clamp colour {color!r}")
            clamps[(c, d)] = color
        object.__setattr__(self, "placements", MappingProxyType(cells))
        object.__setattr__(self, "clamps", MappingProxyType(clamps))

    def __len__(self):
        return len(self.placements)

    def cells(self):
        return sorted(self.placements)

    def tile(self, c) -> str:
        return self.placements[c]

    def joint_edges(self):
        """Each adjacent pair once, as ``(a, d, b)`` with ``neighbor(a, d) == b`` and ``a < b``."""
        out = []
        for a in self.cells():
            for d in range(3):
                b = neighbor(a, d)
                if b in self.placements:
                    out.append((a, d, b))
        return out

    def with_clamps(self, extra) -> "Instance":
        clamps = dict(self.clamps)
        clamps.update(extra)
        return Instance(dict(self.placements), clamps)

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return dict(self.placements) == dict(other.placements) and dict(
            self.clamps
        ) == dict(other.clamps)

    def __hash__(self):
        return hash((frozenset(self.placements.items()), frozenset(self.clamps.items())))


@dataclass(frozen=True)
class Solution:
    """A full rotation assignment, one rotation in 0..5 per placed cell."""

    rotations: Mapping = field(default_factory=dict)

    def __post_init__(self):
        rot = {Coord(*c): int(r) for c, r in self.rotations.items()}
        object.__setattr__(self, "rotations", MappingProxyType(rot))

    def __getitem__(self, c):
        return self.rotations[c]

    def __len__(self):
        return len(self.rotations)

    def key(self):
        return tuple(self.rotations[c] for c in sorted(self.rotations))

    def __eq__(self, other):
        if not isinstance(other, Solution):
            return NotImplemented
        return dict(self.rotations) == dict(other.rotations)

    def __hash__(self):
        return hash(frozenset(self.rotations.items()))


def _check_domain(instance: Instance, solution: Solution):
    if set(solution.rotations) != set(instance.placements):
        extra = set(solution.rotations) - set(instance.placements)
        missing = set(instance.placements) - set(solution.rotations)
        raise DomainMismatch(
            f"solution domain differs from instance: "
            f"{len(extra)} extra, {len(missing)} missing cells"
        )


def edge_color(instance: Instance, solution: Solution, c, d) -> str:
    return color_at(OrientedTile(instance.placements[c], solution[c]), d)


def check_solution(instance: Instance, solution: Solution) -> bool:
    _check_domain(instance, solution)
    for a, d, b in instance.joint_edges():
        if edge_color(instance, solution, a, d) != edge_color(
            instance, solution, b, opposite(d)
        ):
            return False
    for (c, d), color in instance.clamps.items():
        if edge_color(instance, solution, c, d) != color:
            return False
    return True


# -- text formats -----------------------------------------------------------


def _ints(fields, lineno):
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", lineno) from None


def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def parse_instance(text: str) -> Instance:
    placements = {}
    raw_clamps = []
    for lineno, fields in _content_lines(text):
        if fields[0] == "!":
            if len(fields) != 5:
                raise ParseError("clamp line needs '! u w d c'", lineno)
            u, w, d = _ints(fields[1:4], lineno)
            color = fields[4]
            if not 0 <= d < 6:
                raise ParseError(f"direction {d} out of range 0..5", lineno)
            if color not in COLORS:
                raise ParseError(f"unknown colour {color!r}", lineno)
            raw_clamps.append((lineno, Coord(u, w), d, color))
            continue
        if len(fields) != 3:
            raise ParseError("placement line needs 'u w WORD'", lineno)
        u, w = _ints(fields[:2], lineno)
        c = Coord(u, w)
        if c in placements:
            raise DuplicateCell(f"cell {u} {w} placed twice", lineno)
        try:
            placements[c] = canonicalize(fields[2])[0]
        except ValueError as exc:
            raise InvalidTile(str(exc), lineno) from None
    clamps = {}
    for lineno, c, d, color in raw_clamps:
        if c not in placements:
            raise DanglingClamp(f"clamp on empty cell {c.u} {c.w}", lineno)
        if neighbor(c, d) in placements:
            raise DanglingClamp(f"clamp on joint edge {c.u} {c.w} {d}", lineno)
        if (c, d) in clamps:
            raise ParseError(f"edge {c.u} {c.w} {d} clamped twice", lineno)
        clamps[(c, d)] = color
    return Instance(placements, clamps)


def serialize_instance(instance: Instance) -> str:
    lines = [f"{c.u} {c.w} {instance.placements[c]}" for c in instance.cells()]
    for c, d in sorted(instance.clamps):
        lines.append(f"! {c.u} {c.w} {d} {instance.clamps[(c, d)]}")
    return "".join(line + "\n" for line in lines)


def parse_solution(text: str, instance: Instance) -> Solution:
    rotations = {}
    for lineno, fields in _content_lines(text):
        if len(fields) != 3:
            raise ParseError("solution line needs 'u w r'", lineno)
        u, w, r = _ints(fields, lineno)
        if not 0 <= r < 6:
            raise ParseError(f"rotation {r} out of range 0..5", lineno)
        c = Coord(u, w)
        if c in rotations:
            raise DuplicateCell(f"cell {u} {w} listed twice", lineno)
        rotations[c] = r
    solution = Solution(rotations)
    _check_domain(instance, solution)
    return solution


def serialize_solution(solution: Solution) -> str:
    return "".join(
        f"{c.u} {c.w} {solution[c]}\n" for c in sorted(solution.rotations)
    )


def translate(instance: Instance, offset) -> Instance:
    du, dw = offset
    return Instance(
        {Coord(c.u + du, c.w + dw): t for c, t in instance.placements.items()},
        {(Coord(c.u + du, c.w + dw), d): col for (c, d), col in instance.clamps.items()},
    )


__all__ = [
    "Instance",
    "Solution",
    "check_solution",
    "edge_color",
    "parse_instance",
    "parse_solution",
    "serialize_instance",
    "serialize_solution",
    "translate",
]
