"""The Tantrix tile catalogue.

A tile is written as a six-letter word over ``b g r y``: letter ``k`` is the
colour of the line that touches edge ``k`` when the tile sits in its base
orientation.  Each of the three colours on a tile appears exactly twice (the
two ends of one line).  The canonical word of a tile is the lexicographically
least of its six cyclic rotations, and that word is the tile's identity.
"""

import enum
import itertools
from collections import Counter
from typing import NamedTuple

from .errors import BadColorMultiplicity, BadLength, IllegalShape

COLORS = "bgry"
COLOR_NAMES = {"b": "blue", "g": "green", "r": "red", "y": "yellow"}


class Shape(enum.Enum):
    ROND = "Rond"
    BRID = "Brid"
    SINT = "Sint"
    CHIN = "Chin"


# Sorted chord lengths of the three lines -> shape.
SHAPE_BY_CHORDS = {
    (1, 1, 1): Shape.ROND,
    (1, 1, 3): Shape.BRID,
    (1, 2, 2): Shape.SINT,
    (2, 2, 3): Shape.CHIN,
}


class OrientedTile(NamedTuple):
    code: str
    rotation: int = 0


def chord_lengths(word: str):
    """Sorted chord lengths of the lines of ``word`` (assumed well formed)."""
    ends = {}
    for k, c in enumerate(word):
        ends.setdefault(c, []).append(k)
    lengths = []
    for i, j in ends.values():
        span = abs(i - j)
        lengths.append(min(span, 6 - span))
    return tuple(sorted(lengths))


def validate_tile(word: str) -> None:
    """Raise a :class:`~tantrix.errors.TileError` subclass unless ``word`` is a legal tile."""
    if not isinstance(word, str) or len(word) != 6:
        raise BadLength(f"tile word must have 6 letters: {word!r}")
    counts = Counter(word)
    if set(counts) - set(COLORS):
        raise BadColorMultiplicity(f"unknown colour letter in {word!r}")
    if len(counts) != 3 or any(n != 2 for n in counts.values()):
        raise BadColorMultiplicity(f"need three colours, each twice: {word!r}")
    chords = chord_lengths(word)
    if chords not in SHAPE_BY_CHORDS:
        raise IllegalShape(f"chord lengths {chords} are not a Tantrix shape: {word!r}")


def is_valid_tile(word: str) -> bool:
    try:
        validate_tile(word)
    except ValueError:
        return False
    return True


def rotate_word(word: str, steps: int) -> str:
    """The word read off after turning the tile ``steps`` edges clockwise."""
    steps %= 6
    return word[-steps:] + word[:-steps] if steps else word


def canonicalize(word: str):
    """Return ``(code, rotation)`` with ``rotate_word(code, rotation) == word``."""
    validate_tile(word)
    code = min(rotate_word(word, s) for s in range(6))
    for r in range(6):
        if rotate_word(code, r) == word:
            return code, r
    raise AssertionError("unreachable")


def canonical(word: str) -> str:
    return canonicalize(word)[0]


def shape_of(code: str) -> Shape:
    return SHAPE_BY_CHORDS[chord_lengths(code)]


def color_at(tile: OrientedTile, edge: int) -> str:
    return tile.code[(edge - tile.rotation) % 6]


def rotate(tile: OrientedTile, steps: int) -> OrientedTile:
    return OrientedTile(tile.code, (tile.rotation + steps) % 6)


def oriented_word(code: str, rotation: int) -> str:
    """Colours at edges 0..5 of ``code`` turned by ``rotation``."""
    return rotate_word(code, rotation)


def enumerate_catalogue():
    """All canonical tile words, sorted."""
    codes = set()
    for letters in itertools.product(COLORS, repeat=6):
        word = "".join(letters)
        if is_valid_tile(word):
            codes.add(canonical(word))
    return sorted(codes)


CATALOGUE = tuple(enumerate_catalogue())
