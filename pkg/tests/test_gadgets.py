import pytest

from tantrix.errors import MissingGadget, ParseError, StructuralError
from tantrix.gadgets import (
    STOCK_NAMES,
    BehaviorRow,
    GadgetSpec,
    Port,
    check_structure,
    instantiate,
    load_library,
    mirror_gadget,
    parse_library,
    serialize_gadget,
    serialize_library,
    stock_library_text,
    verify_gadget,
)
from tantrix.hexgrid import Coord, neighbor
from tantrix.instance import Instance
from tantrix.solver import count_solutions, enumerate_solutions


@pytest.fixture(scope="module")
def lib():
    return load_library()


def test_stock_names(lib):
    assert tuple(lib) == STOCK_NAMES


@pytest.mark.parametrize("name", STOCK_NAMES)
def test_stock_gadget_verifies(lib, name):
    report = verify_gadget(lib[name])
    assert report.passed, [(r.row, r.count, r.total) for r in report.rows]
    assert lib[name].height % 2 == 0


def test_wire_rows(lib):
    rows = lib["WIRE"].behavior
    assert sorted((r.inputs, r.expected_count) for r in rows) == [((("i", "b"),), 1), ((("i", "r"),), 1)]
    assert lib["WIRE"].height == 2


def test_bool_has_two_solutions(lib):
    g = lib["BOOL"]
    assert not g.inputs
    assert count_solutions(g.instance()) == 2


def test_test_gadget(lib):
    g = lib["TEST"]
    p = g.inputs[0]
    assert count_solutions(g.instance({(p.cell, p.edge): "b"})) == 1
    assert count_solutions(g.instance({(p.cell, p.edge): "r"})) == 0


def _outputs(g, inputs):
    clamps = {(g.port(k).cell, g.port(k).edge): v for k, v in inputs.items()}
    inst = g.instance(clamps)
    (sol,) = enumerate_solutions(inst, 2)
    return {p.label: inst.placements[p.cell][(p.edge - sol[p.cell]) % 6] for p in g.outputs}


def test_truth_tables(lib):
    assert _outputs(lib["CROSS"], {"a": "b", "b": "r"}) == {"l": "r", "r": "b"}
    assert _outputs(lib["NOT"], {"i": "b"}) == {"o": "r"}
    assert _outputs(lib["NOT"], {"i": "r"}) == {"o": "b"}
    for x in "br":
        for y in "br":
            want = "b" if x == y == "b" else "r"
            assert _outputs(lib["AND"], {"a": x, "b": y}) == {"o": want}
        assert _outputs(lib["COPY"], {"i": x}) == {"l": x, "r": x}


@pytest.mark.parametrize("name", ["WIRE", "MOVE_R", "MOVE_L", "COPY", "NOT"])
def test_removing_a_fixer_breaks_uniqueness(lib, name):
    g = lib[name]
    assert g.fixers, f"{name} documents no fixing tile"
    for cell in g.fixers:
        report = verify_gadget(g.without(cell))
        assert any(r.total >= 2 for r in report.rows)


def test_wire_without_its_rond(lib):
    g = lib["WIRE"]
    (x,) = g.fixers
    report = verify_gadget(g.without(x))
    assert [r.total for r in report.rows] == [2, 2]
    assert not report.passed


def test_move_left_is_mirrored_move_right(lib):
    m = mirror_gadget(lib["MOVE_R"], "MOVE_L")
    assert m.cells == lib["MOVE_L"].cells
    assert m.ports == lib["MOVE_L"].ports
    assert m.height == lib["MOVE_L"].height


def test_port_edges_face_holes(lib):
    for g in lib.values():
        for p in g.ports:
            assert neighbor(p.cell, p.edge) not in g.cells


def test_serializer_round_trip(lib):
    text = serialize_library(lib.values())
    again = serialize_library(parse_library(text))
    assert again == text
    body = "".join(line + "\n" for line in stock_library_text().splitlines() if not line.startswith("#"))
    assert body.strip("\n") == text.strip("\n")


def test_missing_gadget():
    text = stock_library_text()
    parts = text.split("gadget TEST")
    with pytest.raises(MissingGadget):
        load_library(parts[0])


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_library("cell 0 0 ggrryy\n")
    with pytest.raises(ParseError):
        parse_library("gadget X\ncell 0 0 ggrr\n")
    with pytest.raises(ParseError):
        parse_library("gadget X\nrow in i=q out - count 1\n")


def _tiny(height=2, port_edge=2):
    cells = {Coord(0, 0): "ggrryy", Coord(1, 0): "ggrryy"}
    ports = [Port("i", Coord(0, 0), port_edge, "in")]
    rows = [BehaviorRow((("i", c),), (), 1) for c in "br"]
    return GadgetSpec("X", cells, ports, rows, height)


def test_structural_errors():
    check_structure(_tiny())
    with pytest.raises(StructuralError, match="even"):
        check_structure(_tiny(height=3))
    with pytest.raises(StructuralError, match="boundary"):
        check_structure(_tiny(port_edge=0))


def test_instantiate(lib):
    g = lib["AND"]
    cells, ports = instantiate(g, (0, 0))
    assert cells == g.cells and ports == g.ports
    moved, _ = instantiate(g, (3, 5))
    back = {c - (3, 5): t for c, t in moved.items()}
    assert back == g.cells
    other, _ = instantiate(g, (100, 0))
    assert not set(moved) & set(other)


def test_gadget_instances_are_plain_instances(lib):
    assert isinstance(lib["WIRE"].instance(), Instance)
    assert serialize_gadget(lib["WIRE"]).startswith("gadget WIRE\nheight 2\n")
