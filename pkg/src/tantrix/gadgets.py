"""Subpuzzle library: wires, gates, input and output gadgets.

A gadget is a small tile arrangement with typed ports.  Truth values travel
as edge colours, blue for true and red for false.  Each gadget carries a
behaviour table; :func:`verify_gadget` clamps the inputs of every row, counts
the solutions with the solver and checks the produced output colours.

Layout conventions shared with the compiler (coordinates relative to the
gadget anchor):

* rows run from ``w = 0`` down to ``w = 1 - height``;
* the input of track ``k`` enters cell ``(6k, 0)`` through edge 2 and the
  output of track ``k`` leaves cell ``(6k, 1 - height)`` through edge 5;
* other cells of the top row sit at ``u % 6`` in {1, 2}, other cells of the
  bottom row at ``u % 6`` in {4, 5}, and every cell lies within two columns
  of a track the gadget spans.  Stacked or side-by-side gadgets therefore
  touch only at their ports.

Gadget file::

    gadget NAME
    height H
    cell u w WORD [fix]
    in LABEL u w d
    out LABEL u w d
    row in A=b,B=r out C=b count 1
    row in - out C=b count 1

``fix`` marks a tile inserted only to make solutions unique.  ``-`` stands
for an empty port list.
"""

from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Optional, Tuple

from .errors import MissingGadget, ParseError, StructuralError
from .hexgrid import Coord, neighbor
from .instance import Instance, edge_color
from .solver import enumerate_solutions, solve
from .tiles import COLORS, canonicalize

TRACK_PITCH = 6
STOCK_NAMES = ("WIRE", "MOVE_R", "MOVE_L", "COPY", "CROSS", "NOT", "AND", "BOOL", "TEST")
TOP_ROW_OFFSETS = (1, 2)
BOTTOM_ROW_OFFSETS = (4, 5)
TRACK_HALF_WIDTH = 2


@dataclass(frozen=True)
class Port:
    label: str
    cell: Coord
    edge: int
    role: str  # "in" or "out"


@dataclass(frozen=True)
class BehaviorRow:
    inputs: Tuple[Tuple[str, str], ...]
    outputs: Tuple[Tuple[str, str], ...]
    expected_count: int

    def input_map(self):
        return dict(self.inputs)

    def output_map(self):
        return dict(self.outputs)


@dataclass
class GadgetSpec:
    name: str
    cells: Dict[Coord, str]
    ports: List[Port]
    behavior: List[BehaviorRow]
    height: int
    fixers: frozenset = field(default_factory=frozenset)

    @property
    def inputs(self):
        return [p for p in self.ports if p.role == "in"]

    @property
    def outputs(self):
        return [p for p in self.ports if p.role == "out"]

    def port(self, label):
        for p in self.ports:
            if p.label == label:
                return p
        raise KeyError(label)

    def instance(self, clamps=None) -> Instance:
        return Instance(dict(self.cells), dict(clamps or {}))

    def without(self, cell) -> "GadgetSpec":
        """Copy of the gadget with one tile removed (for negative controls)."""
        cells = {c: t for c, t in self.cells.items() if c != cell}
        return GadgetSpec(
            self.name, cells, list(self.ports), list(self.behavior), self.height,
            frozenset(self.fixers - {cell}),
        )

    def tracks(self):
        """Track offsets (relative to the anchor track) touched by any port."""
        return sorted({p.cell.u // TRACK_PITCH for p in self.ports})


# -- file format ------------------------------------------------------------


def _parse_assignments(text, lineno):
    if text == "-":
        return ()
    out = []
    for item in text.split(","):
        label, sep, color = item.partition("=")
        if not sep or not label or color not in COLORS:
            raise ParseError(f"bad port colour {item!r}", lineno)
        out.append((label, color))
    return tuple(out)


def _int(text, lineno):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", lineno) from None


def parse_library(text: str) -> List[GadgetSpec]:
    """Parse one or more gadgets from text (no structural checks)."""
    gadgets = []
    current = None

    def finish():
        if current is None:
            return
        name, cells, ports, rows, height, fixers, lineno = current
        if height is None:
            if not cells:
                raise ParseError(f"gadget {name} has no cells", lineno)
            ws = [c.w for c in cells]
            height = max(ws) - min(ws) + 1
        gadgets.append(GadgetSpec(name, cells, ports, rows, height, frozenset(fixers)))

    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields or fields[0].startswith("#"):
            continue
        key = fields[0]
        if key == "gadget":
            if len(fields) != 2:
                raise ParseError("expected 'gadget NAME'", lineno)
            finish()
            current = [fields[1], {}, [], [], None, set(), lineno]
            continue
        if current is None:
            raise ParseError(f"{key!r} line before any 'gadget' line", lineno)
        name, cells, ports, rows, _, fixers, _ = current
        if key == "height":
            if len(fields) != 2:
                raise ParseError("expected 'height H'", lineno)
            current[4] = _int(fields[1], lineno)
        elif key == "cell":
            if len(fields) not in (4, 5) or (len(fields) == 5 and fields[4] != "fix"):
                raise ParseError("expected 'cell u w WORD [fix]'", lineno)
            c = Coord(_int(fields[1], lineno), _int(fields[2], lineno))
            if c in cells:
                raise ParseError(f"cell {c.u} {c.w} listed twice in {name}", lineno)
            try:
                cells[c] = canonicalize(fields[3])[0]
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            if len(fields) == 5:
                fixers.add(c)
        elif key in ("in", "out"):
            if len(fields) != 5:
                raise ParseError(f"expected '{key} LABEL u w d'", lineno)
            d = _int(fields[4], lineno)
            if not 0 <= d < 6:
                raise ParseError(f"direction {d} out of range", lineno)
            c = Coord(_int(fields[2], lineno), _int(fields[3], lineno))
            ports.append(Port(fields[1], c, d, key))
        elif key == "row":
            if len(fields) != 7 or fields[1] != "in" or fields[3] != "out" or fields[5] != "count":
                raise ParseError("expected 'row in ... out ... count N'", lineno)
            count = _int(fields[6], lineno)
            if count < 0:
                raise ParseError("negative count", lineno)
            rows.append(
                BehaviorRow(
                    _parse_assignments(fields[2], lineno),
                    _parse_assignments(fields[4], lineno),
                    count,
                )
            )
        else:
            raise ParseError(f"unknown keyword {key!r}", lineno)
    finish()
    return gadgets


def _assignments(pairs):
    return ",".join(f"{k}={v}" for k, v in pairs) if pairs else "-"


def serialize_gadget(g: GadgetSpec) -> str:
    lines = [f"gadget {g.name}", f"height {g.height}"]
    for c in sorted(g.cells):
        lines.append(f"cell {c.u} {c.w} {g.cells[c]}" + (" fix" if c in g.fixers else ""))
    for p in g.ports:
        lines.append(f"{p.role} {p.label} {p.cell.u} {p.cell.w} {p.edge}")
    for row in g.behavior:
        lines.append(
            f"row in {_assignments(row.inputs)} out {_assignments(row.outputs)} count {row.expected_count}"
        )
    return "\n".join(lines) + "\n"


def serialize_library(gadgets) -> str:
    return "\n".join(serialize_gadget(g) for g in gadgets)


# -- structure --------------------------------------------------------------


def structural_problems(g: GadgetSpec) -> List[str]:
    problems = []
    if g.height < 2 or g.height % 2:
        problems.append(f"height {g.height} is not a positive even number")
    labels = Counter(p.label for p in g.ports)
    problems += [f"duplicate port label {k}" for k, n in labels.items() if n > 1]
    bottom = 1 - g.height
    for p in g.ports:
        if p.cell not in g.cells:
            problems.append(f"port {p.label} on empty cell {tuple(p.cell)}")
        elif neighbor(p.cell, p.edge) in g.cells:
            problems.append(f"port {p.label} is not a boundary edge")
        if p.role == "in" and (p.cell.w != 0 or p.cell.u % TRACK_PITCH or p.edge != 2):
            problems.append(f"input {p.label} must enter (6k, 0) through edge 2")
        if p.role == "out" and (p.cell.w != bottom or p.cell.u % TRACK_PITCH or p.edge != 5):
            problems.append(f"output {p.label} must leave (6k, {bottom}) through edge 5")
    port_cells = {p.cell for p in g.ports}
    tracks = sorted({p.cell.u // TRACK_PITCH for p in g.ports}) or [0]
    lo = min(tracks) * TRACK_PITCH - TRACK_HALF_WIDTH
    hi = max(tracks) * TRACK_PITCH + TRACK_HALF_WIDTH
    for c in g.cells:
        if not bottom <= c.w <= 0:
            problems.append(f"cell {tuple(c)} outside rows {bottom}..0")
        if not lo <= c.u <= hi:
            problems.append(f"cell {tuple(c)} outside columns {lo}..{hi}")
        if c in port_cells:
            continue
        if c.w == 0 and c.u % TRACK_PITCH not in TOP_ROW_OFFSETS:
            problems.append(f"top-row cell {tuple(c)} could touch the gadget above")
        if c.w == bottom and c.u % TRACK_PITCH not in BOTTOM_ROW_OFFSETS:
            problems.append(f"bottom-row cell {tuple(c)} could touch the gadget below")
    in_labels = {p.label for p in g.inputs}
    out_labels = {p.label for p in g.outputs}
    for row in g.behavior:
        if set(row.input_map()) != in_labels:
            problems.append(f"row {row} does not colour exactly the input ports")
        if row.outputs and set(row.output_map()) != out_labels:
            problems.append(f"row {row} does not colour exactly the output ports")
    seen = {tuple(sorted(r.inputs)) for r in g.behavior}
    for combo in _binary_colorings(sorted(in_labels)):
        if tuple(sorted(combo)) not in seen:
            problems.append(f"no behaviour row for inputs {combo}")
    return problems


def _binary_colorings(labels):
    if not labels:
        return [()]
    rest = _binary_colorings(labels[1:])
    return [((labels[0], c),) + r for c in "br" for r in rest]


def check_structure(g: GadgetSpec) -> None:
    problems = structural_problems(g)
    if problems:
        raise StructuralError(f"gadget {g.name}: " + "; ".join(problems))


# -- loading ----------------------------------------------------------------


def stock_library_text() -> str:
    return resources.files("tantrix").joinpath("data/gadgets.txt").read_text()


def load_library(source: Optional[str] = None, require=STOCK_NAMES) -> Dict[str, GadgetSpec]:
    """Load gadgets from library text (the stock library when ``source`` is None).

    Returns gadgets keyed by name in file order.
    """
    text = stock_library_text() if source is None else source
    gadgets = parse_library(text)
    library = {}
    for g in gadgets:
        if g.name in library:
            raise StructuralError(f"gadget {g.name} defined twice")
        check_structure(g)
        library[g.name] = g
    missing = [name for name in require if name not in library]
    if missing:
        raise MissingGadget("library lacks " + ", ".join(missing))
    return library


# -- verification -----------------------------------------------------------


@dataclass
class RowResult:
    """``count`` solutions show the row's outputs, out of ``total`` for its inputs."""

    row: BehaviorRow
    count: int
    output_counts: Dict[Tuple[Tuple[str, str], ...], int]
    passed: bool
    total: int = 0


@dataclass
class GadgetReport:
    name: str
    rows: List[RowResult]

    @property
    def passed(self):
        return all(r.passed for r in self.rows)


def output_census(g: GadgetSpec, inputs: dict, cap=64):
    """Solutions with the given input colours, grouped by output colouring."""
    clamps = {(g.port(k).cell, g.port(k).edge): v for k, v in inputs.items()}
    inst = g.instance(clamps)
    census = Counter()
    for s in enumerate_solutions(inst, cap):
        key = tuple((p.label, edge_color(inst, s, p.cell, p.edge)) for p in g.outputs)
        census[key] += 1
    return census


def verify_gadget(g: GadgetSpec) -> GadgetReport:
    """Check every behaviour row against exact solution counts.

    A row ``in I out O count n`` holds when exactly ``n`` solutions with the
    inputs clamped to ``I`` show ``O`` at the output ports.  Rows sharing the
    same inputs together must account for every solution; a row without
    outputs constrains the total count only.
    """
    results = []
    groups = {}
    for row in g.behavior:
        groups.setdefault(tuple(sorted(row.inputs)), []).append(row)
    for key, rows in groups.items():
        inputs = dict(key)
        clamps = {(g.port(k).cell, g.port(k).edge): v for k, v in inputs.items()}
        total = solve(g.instance(clamps)).count
        census = None
        listed = 0
        for row in rows:
            if not row.outputs:
                results.append(RowResult(row, total, {}, total == row.expected_count, total))
                continue
            if census is None:
                census = output_census(g, inputs, cap=total or 1)
            want = tuple((p.label, row.output_map()[p.label]) for p in g.outputs)
            got = census.get(want, 0)
            listed += got
            results.append(RowResult(row, got, dict(census), got == row.expected_count, total))
        if census is not None and listed != total:
            # some solution shows an output colouring no row accounts for
            for r in results[-len(rows):]:
                r.passed = False
    return GadgetReport(g.name, results)


def verify_library(library) -> List[GadgetReport]:
    return [verify_gadget(g) for g in library.values()]


# -- placement --------------------------------------------------------------


def mirror_gadget(g: GadgetSpec, name: str) -> GadgetSpec:
    """Reflect a gadget in the vertical axis through its anchor.

    The reflection ``(u, w) -> (-u, w - u)`` keeps direction 2 (up) and 5
    (down) and swaps the others as ``d -> 4 - d``; it shears rows, so a gadget
    reaching ``u = 6`` comes back ``6`` rows taller.  Tile words are mirrored
    edge by edge, so solutions map one to one onto solutions.
    """

    def cell(c):
        return Coord(-c.u, c.w - c.u)

    cells = {}
    for c, code in g.cells.items():
        cells[cell(c)] = canonicalize("".join(code[(4 - e) % 6] for e in range(6)))[0]
    ports = [Port(p.label, cell(p.cell), (4 - p.edge) % 6, p.role) for p in g.ports]
    ws = [c.w for c in cells]
    height = max(ws) - min(ws) + 1
    return GadgetSpec(
        name, cells, ports, list(g.behavior), height, frozenset(cell(c) for c in g.fixers)
    )


def instantiate(g: GadgetSpec, offset):
    """Translate a gadget: ``(placements, ports)`` in absolute coordinates."""
    off = Coord(*offset)
    cells = {c + off: t for c, t in g.cells.items()}
    ports = [Port(p.label, p.cell + off, p.edge, p.role) for p in g.ports]
    return cells, ports
