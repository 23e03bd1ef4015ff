from hypothesis import given, strategies as st

from oracles import adjacent
from tantrix.hexgrid import Coord, OFFSETS, adjacency, is_adjacent, neighbor, neighbors, opposite

coords = st.builds(Coord, st.integers(-50, 50), st.integers(-50, 50))
dirs = st.integers(0, 5)


def test_neighbor_examples():
    assert neighbor((0, 0), 0) == (1, 0)
    assert neighbor((0, 0), 1) == (1, 1)


def test_adjacency_examples():
    assert OFFSETS[adjacency((0, 0), (0, 1))] == (0, 1)
    assert adjacency((0, 0), (1, -1)) is None
    assert OFFSETS[adjacency((2, 3), (3, 4))] == (1, 1)


def test_opposite_examples():
    assert [opposite(d) for d in (0, 3, 5)] == [3, 0, 2]


def test_coord_arithmetic():
    a = Coord(2, -1)
    assert a + (1, 1) == (3, 0)
    assert a - a == (0, 0)
    assert -a == (-2, 1)


@given(coords, dirs)
def test_neighbor_round_trip(c, d):
    assert neighbor(neighbor(c, d), opposite(d)) == c
    assert adjacency(c, neighbor(c, d)) == d


@given(coords, coords)
def test_adjacency_matches_coordinate_conditions(a, b):
    assert is_adjacent(a, b) == adjacent(a, b)
    assert is_adjacent(a, b) == is_adjacent(b, a)


@given(coords)
def test_six_distinct_neighbors_in_cyclic_order(c):
    ring = neighbors(c)
    assert len(set(ring)) == 6
    # consecutive directions are neighbours of each other
    for d in range(6):
        assert is_adjacent(ring[d], ring[(d + 1) % 6])
