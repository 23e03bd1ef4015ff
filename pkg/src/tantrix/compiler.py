"""Circuit to rotation-puzzle compiler.

The layout is a stack of row bands.  Each band holds one active primitive
and a PASS (a stack of WIRE gadgets) on every other live track, so every
band is as tall as its tallest gadget.  Gadgets sit at anchors
``(track * 6, w0)`` where ``w0`` is the top row of the band; the layout
conventions in :mod:`tantrix.gadgets` make neighbouring gadgets touch only
where an output meets the input below it.

Routing, gate by gate:

* an operand that is needed again later is copied first; the copy goes to
  the right neighbour track if free, else the wire steps left (MOVE_L) when
  that track is free, else the wires to its right shift one track right;
* the left operand then walks right until it sits next to the right one,
  crossing occupied tracks (CROSS) and moving through free ones (MOVE_R);
* AND leaves its result on the left track, NOT in place;
* a wire whose value has no uses left is dropped, its last output edge
  facing a hole.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .circuit import CNF, And, Circuit, Not, cnf_to_circuit
from .errors import InvalidSolution, LibraryUnverified, ParseError, StructuralError
from .gadgets import TRACK_PITCH, GadgetSpec, instantiate, load_library, stock_library_text, verify_gadget
from .hexgrid import Coord, neighbor
from .instance import Instance, Solution, check_solution, edge_color

BOOL_EDGE = 5  # every gadget output leaves through edge 5


@dataclass(frozen=True)
class Op:
    """One primitive.  ``anchor`` is the track of the gadget's (0, 0) cell."""

    name: str
    anchor: int
    tracks: Tuple[int, ...]
    value: Optional[int] = None  # circuit index produced (BOOL, AND, NOT)

    def __str__(self):
        if len(self.tracks) == 2:
            return f"{self.name}({self.tracks[0]},{self.tracks[1]})"
        return self.name


@dataclass
class RoutingProgram:
    tracks: List[int]
    rows: List[Tuple[Op, ...]]

    def active(self):
        """The non-PASS primitives, row by row."""
        return [[op for op in row if op.name != "PASS"] for row in self.rows]


@dataclass
class CompiledPuzzle:
    instance: Instance
    port_map: Dict[int, Coord]
    provenance: Dict[Coord, Tuple[str, int]] = field(default_factory=dict)
    program: Optional[RoutingProgram] = None

    @property
    def num_tracks(self):
        return len(self.program.tracks) if self.program else 0


# -- scheduling ---------------------------------------------------------------


class _Router:
    def __init__(self, c: Circuit):
        self.c = c
        self.rows = []
        self.at = {}  # track -> wire id
        self.value = {}  # wire id -> circuit index
        self.next_wire = 0
        self.used_tracks = set()
        self.uses = {i: 0 for i in range(1, len(c) + 1)}
        for i, _ in c.gates():
            for j in c.operands(i):
                self.uses[j] += 1
        self.uses[c.output] += 1

    def new_wire(self, value):
        w = self.next_wire
        self.next_wire += 1
        self.value[w] = value
        return w

    def track_of(self, wire):
        for t, w in self.at.items():
            if w == wire:
                return t
        raise KeyError(wire)

    def emit(self, op: Op):
        busy = set(op.tracks)
        row = [op]
        for t in sorted(self.at):
            if t not in busy:
                row.append(Op("PASS", t, (t,)))
        row.sort(key=lambda o: o.tracks[0])
        self.rows.append(tuple(row))
        self.used_tracks.update(op.tracks)

    def drop_dead(self):
        for t in sorted(self.at):
            if self.uses[self.value[self.at[t]]] == 0:
                del self.at[t]

    # primitive moves, each one band
    def move_right(self, t):
        self.emit(Op("MOVE_R", t, (t, t + 1)))
        self.at[t + 1] = self.at.pop(t)

    def move_left(self, t):
        self.emit(Op("MOVE_L", t, (t - 1, t)))
        self.at[t - 1] = self.at.pop(t)

    def cross(self, t):
        self.emit(Op("CROSS", t, (t, t + 1)))
        self.at[t], self.at[t + 1] = self.at[t + 1], self.at[t]

    def copy(self, wire):
        """Split ``wire``; returns the wire id of the fresh copy."""
        t = self.track_of(wire)
        if t + 1 in self.at:
            if t >= 1 and t - 1 not in self.at:
                self.move_left(t)
                t -= 1
            else:
                for s in sorted((s for s in self.at if s > t), reverse=True):
                    self.move_right(s)
        self.emit(Op("COPY", t, (t, t + 1)))
        fresh = self.new_wire(self.value[wire])
        self.at[t + 1] = fresh
        return fresh

    def take(self, j):
        """A wire carrying value ``j`` to be consumed by the current gate."""
        wire = next(w for t, w in sorted(self.at.items()) if self.value[w] == j)
        if self.uses[j] > 1:
            wire = self.copy(wire)
        self.uses[j] -= 1
        return wire

    def run(self):
        c = self.c
        bools = []
        for i in range(1, c.n + 1):
            self.at[i - 1] = self.new_wire(i)
            bools.append(Op("BOOL", i - 1, (i - 1,), value=i))
        self.rows.append(tuple(bools))
        self.used_tracks.update(range(c.n))
        self.drop_dead()
        for i, g in c.gates():
            if isinstance(g, Not):
                wire = self.take(g.j)
                t = self.track_of(wire)
                self.emit(Op("NOT", t, (t,), value=i))
            else:
                a = self.take(g.j)
                b = self.take(g.k)
                ta, tb = sorted((self.track_of(a), self.track_of(b)))
                left = self.at[ta]
                while ta + 1 < tb:
                    if ta + 1 in self.at:
                        self.cross(ta)
                    else:
                        self.move_right(ta)
                    ta += 1
                self.emit(Op("AND", ta, (ta, tb), value=i))
                del self.at[tb]
                t = ta
                assert self.at[t] == left
            wire = self.new_wire(i)
            self.at[t] = wire
            self.drop_dead()
        t = self.track_of(next(w for w in self.at.values() if self.value[w] == c.output))
        self.rows.append((Op("TEST", t, (t,)),))
        return RoutingProgram(sorted(self.used_tracks), self.rows)


def schedule(c: Circuit) -> RoutingProgram:
    return _Router(c).run()


# -- layout ------------------------------------------------------------------


@lru_cache(maxsize=8)
def _verified(text: str) -> Tuple[str, ...]:
    """Names of gadgets in ``text`` failing verification (cached per library text)."""
    library = load_library(text)
    return tuple(g.name for g in library.values() if not verify_gadget(g).passed)


def _library(library_text: Optional[str]):
    text = stock_library_text() if library_text is None else library_text
    failing = _verified(text)
    if failing:
        raise LibraryUnverified("gadgets failing verification: " + ", ".join(failing))
    return load_library(text)


def _op_height(op: Op, lib) -> int:
    return 2 if op.name == "PASS" else lib[op.name].height


def compile(c: Circuit, library_text: Optional[str] = None) -> CompiledPuzzle:  # noqa: A001
    lib = _library(library_text)
    program = schedule(c)
    placements = {}
    owner = {}
    provenance = {}
    ports = []  # (cell, edge, role, instantiation id)
    port_map = {}
    top = 0
    serial = 0
    for r, row in enumerate(program.rows):
        height = max(_op_height(op, lib) for op in row)
        for op in row:
            if op.name == "PASS":
                stack = [(lib["WIRE"], top - 2 * k) for k in range(height // 2)]
            else:
                stack = [(lib[op.name], top)]
                if lib[op.name].height < height:
                    raise StructuralError(f"{op.name} shorter than its band")  # single active op
            for g, w0 in stack:
                cells, gports = instantiate(g, Coord(op.anchor * TRACK_PITCH, w0))
                for cell, code in cells.items():
                    if cell in placements:
                        raise StructuralError(f"cell {tuple(cell)} placed twice")
                    placements[cell] = code
                    owner[cell] = serial
                    provenance[cell] = (g.name, r)
                ports += [(p.cell, p.edge, serial) for p in gports]
                if op.name == "BOOL":
                    port_map[op.value] = gports[0].cell
                serial += 1
        top -= height
    _check_contacts(placements, owner, ports)
    return CompiledPuzzle(Instance(placements), port_map, provenance, program)


def _check_contacts(placements, owner, ports):
    """Different instantiations may only meet across a pair of port edges."""
    port_edges = {(cell, edge) for cell, edge, _ in ports}
    for a in placements:
        for d in range(3):
            b = neighbor(a, d)
            if b in placements and owner[a] != owner[b]:
                if (a, d) not in port_edges or (b, (d + 3) % 6) not in port_edges:
                    raise StructuralError(f"gadgets touch away from ports at {tuple(a)}/{d}")


def reduce_sat(f: CNF, library_text: Optional[str] = None) -> CompiledPuzzle:
    return compile(cnf_to_circuit(f), library_text)


def extract_assignment(p: CompiledPuzzle, s: Solution) -> Tuple[bool, ...]:
    if set(s.rotations) != set(p.instance.placements) or not check_solution(p.instance, s):
        raise InvalidSolution("not a solution of the compiled instance")
    out = []
    for i in sorted(p.port_map):
        color = edge_color(p.instance, s, p.port_map[i], BOOL_EDGE)
        if color not in "br":
            raise InvalidSolution(f"input {i} shows colour {color!r}")
        out.append(color == "b")
    return tuple(out)


# -- port-map sidecar ----------------------------------------------------------


def serialize_port_map(port_map: Dict[int, Coord]) -> str:
    return "".join(f"input {i} {port_map[i].u} {port_map[i].w}\n" for i in sorted(port_map))


def parse_port_map(text: str) -> Dict[int, Coord]:
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields or fields[0].startswith("#"):
            continue
        if len(fields) != 4 or fields[0] != "input":
            raise ParseError("expected 'input i u w'", lineno)
        try:
            i, u, w = (int(x) for x in fields[1:])
        except ValueError:
            raise ParseError("expected integers", lineno) from None
        if i in out:
            raise ParseError(f"input {i} listed twice", lineno)
        out[i] = Coord(u, w)
    return out


__all__ = [
    "CompiledPuzzle",
    "Op",
    "RoutingProgram",
    "compile",
    "extract_assignment",
    "parse_port_map",
    "reduce_sat",
    "schedule",
    "serialize_port_map",
]
