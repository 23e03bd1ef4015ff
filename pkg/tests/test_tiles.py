import pytest
from hypothesis import given, strategies as st

from oracles import catalogue_by_shape
from tantrix.errors import BadColorMultiplicity, BadLength, IllegalShape
from tantrix.tiles import (
    CATALOGUE,
    OrientedTile,
    Shape,
    canonicalize,
    chord_lengths,
    color_at,
    enumerate_catalogue,
    is_valid_tile,
    rotate,
    rotate_word,
    shape_of,
    validate_tile,
)

codes = st.sampled_from(CATALOGUE)
steps = st.integers(-20, 20)


def test_color_at_examples():
    assert color_at(OrientedTile("ggrryy", 0), 0) == "g"
    assert color_at(OrientedTile("ggrryy", 1), 1) == "g"


def test_canonicalize_examples():
    assert canonicalize("yggrry") == ("ggrryy", 1)
    assert canonicalize("ggrryy") == ("ggrryy", 0)


def test_validate_examples():
    validate_tile("ggrryy")
    with pytest.raises(IllegalShape):
        validate_tile("brybry")
    with pytest.raises(BadColorMultiplicity):
        validate_tile("gggryy")
    with pytest.raises(BadLength):
        validate_tile("ggrr")
    with pytest.raises(BadColorMultiplicity):
        validate_tile("ggrrxx")
    assert not is_valid_tile("brybry")


def test_shape_examples():
    assert shape_of("ggrryy") is Shape.ROND
    assert shape_of("bggbrr") is Shape.BRID
    assert shape_of("bbgrgr") is Shape.SINT
    assert chord_lengths("bbgrgr") == (1, 2, 2)


def test_catalogue_matches_brute_force():
    cat = enumerate_catalogue()
    assert len(cat) == 56 == len(set(cat))
    counts = {}
    for code in cat:
        counts[chord_lengths(code)] = counts.get(chord_lengths(code), 0) + 1
    assert counts == catalogue_by_shape()
    assert {shape_of(c) for c in cat} == set(Shape)


def test_rotate_identity_examples():
    t = OrientedTile("ggrryy", 2)
    assert rotate(t, 0) == t
    assert rotate(t, 6) == t


@given(codes)
def test_rotations_are_distinct(code):
    assert len({rotate_word(code, r) for r in range(6)}) == 6


@given(codes, st.integers(0, 5))
def test_canonicalize_inverts_rotation(code, r):
    word = rotate_word(code, r)
    assert canonicalize(word) == (code, r)


@given(codes, st.integers(0, 5), steps, st.integers(0, 5))
def test_rotate_shifts_edges(code, r, k, edge):
    t = OrientedTile(code, r)
    assert color_at(rotate(t, k), (edge + k) % 6) == color_at(t, edge)


@given(st.text(alphabet="bgry", min_size=6, max_size=6))
def test_validity_is_rotation_invariant(word):
    assert is_valid_tile(word) == is_valid_tile(rotate_word(word, 1))
