import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_check, random_puzzle
from tantrix.errors import DanglingClamp, DomainMismatch, DuplicateCell, InvalidTile, ParseError
from tantrix.hexgrid import Coord
from tantrix.instance import (
    Instance,
    Solution,
    check_solution,
    parse_instance,
    parse_solution,
    serialize_instance,
    serialize_solution,
    translate,
)
from tantrix.tiles import CATALOGUE


def test_check_solution_examples():
    assert check_solution(Instance(), Solution())
    inst = Instance({(0, 0): "ggrryy", (1, 0): "ggrryy"})
    assert check_solution(inst, Solution({(0, 0): 0, (1, 0): 3}))
    assert not check_solution(inst, Solution({(0, 0): 0, (1, 0): 0}))
    with pytest.raises(DomainMismatch):
        check_solution(inst, Solution({(0, 0): 0}))


def test_words_are_stored_canonically():
    inst = Instance({(0, 0): "yggrry"})
    assert inst.tile((0, 0)) == "ggrryy"
    with pytest.raises(InvalidTile):
        Instance({(0, 0): "gggggg"})


def test_parse_examples():
    inst = parse_instance("0 0 ggrryy")
    assert dict(inst.placements) == {(0, 0): "ggrryy"}
    with pytest.raises(DuplicateCell):
        parse_instance("0 0 ggrryy\n0 0 bbrryy\n")
    with pytest.raises(DanglingClamp):
        parse_instance("! 0 0 2 b\n")
    with pytest.raises(DanglingClamp):
        parse_instance("0 0 ggrryy\n0 1 ggrryy\n! 0 0 2 b\n")


def test_parse_reports_line_numbers():
    with pytest.raises(ParseError, match="line 3"):
        parse_instance("# header\n0 0 ggrryy\n1 x ggrryy\n")
    with pytest.raises(InvalidTile, match="line 2"):
        parse_instance("0 0 ggrryy\n1 0 brybry\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_instance("! 0 0 7 b\n")


def test_parse_solution_examples():
    inst = parse_instance("0 0 ggrryy\n")
    assert parse_solution("0 0 0", inst) == Solution({(0, 0): 0})
    with pytest.raises(ParseError):
        parse_solution("0 0 6", inst)
    with pytest.raises(DomainMismatch):
        parse_solution("", inst)


def test_clamp_format():
    text = "0 0 ggrryy\n1 0 bbrryy\n! 0 0 2 g\n! 1 0 0 r\n"
    inst = parse_instance(text)
    assert serialize_instance(inst) == text
    assert inst.clamps[(Coord(0, 0), 2)] == "g"


def test_translate():
    inst = Instance({(0, 0): "ggrryy"}, {((0, 0), 1): "g"})
    moved = translate(inst, (3, 5))
    assert translate(moved, (-3, -5)) == inst
    assert (3, 5) in moved.placements


puzzles = st.integers(0, 10**9).map(lambda s: random_puzzle(random.Random(s), CATALOGUE))


@given(puzzles)
def test_serialize_round_trip(p):
    inst = Instance(*p)
    text = serialize_instance(inst)
    assert parse_instance(text) == inst
    assert serialize_instance(parse_instance(text)) == text


@settings(max_examples=200)
@given(puzzles, st.integers(0, 10**9))
def test_check_solution_agrees_with_naive_loop(p, seed):
    rng = random.Random(seed)
    inst = Instance(*p)
    rot = {c: rng.randrange(6) for c in inst.placements}
    placements = {tuple(c): t for c, t in inst.placements.items()}
    clamps = {(tuple(c), d): col for (c, d), col in inst.clamps.items()}
    assert check_solution(inst, Solution(rot)) == naive_check(placements, clamps, {tuple(c): r for c, r in rot.items()})
    assert parse_solution(serialize_solution(Solution(rot)), inst) == Solution(rot)
