"""The three poles R, G, B and the six symmetric Latin squares over them."""

from __future__ import annotations

import cmath
import enum
import functools
import itertools
import math
from dataclasses import dataclass

import numpy as np

_S3 = math.sqrt(3.0) / 2.0


class Pole(enum.IntEnum):
    R = 0
    G = 1
    B = 2

    def __str__(self):
        return self.name


POLES = (Pole.R, Pole.G, Pole.B)

_POINTS = {
    Pole.R: complex(1.0, 0.0),
    Pole.G: complex(-0.5, _S3),
    Pole.B: complex(-0.5, -_S3),
}

# C = -R, M = -G, Y = -B
_INVERSE_POINTS = {
    Pole.R: complex(-1.0, 0.0),
    Pole.G: complex(0.5, -_S3),
    Pole.B: complex(0.5, _S3),
}

INVERSE_NAMES = {Pole.R: "C", Pole.G: "M", Pole.B: "Y"}

OMEGA = cmath.exp(2j * math.pi / 3)


def value(p: Pole) -> complex:
    """Point of the pole in the complex plane (unit circle, 120 degrees apart)."""
    return _POINTS[Pole(p)]


def inverse_pole_points() -> dict[Pole, complex]:
    """Points of the inverse poles C, M, Y keyed by the pole they invert."""
    return dict(_INVERSE_POINTS)


@dataclass(frozen=True)
class LatinSquare:
    index: int
    table: tuple[tuple[Pole, Pole, Pole], ...]

    def compose(self, x: Pole, y: Pole) -> Pole:
        return self.table[x][y]

    def identity_pole(self) -> Pole | None:
        for y in POLES:
            if all(self.table[y][x] == x for x in POLES):
                return y
        return None

    def is_latin(self) -> bool:
        rows = all(sorted(row) == list(POLES) for row in self.table)
        cols = all(sorted(self.table[i][j] for i in POLES) == list(POLES) for j in POLES)
        return rows and cols

    def is_symmetric(self) -> bool:
        return all(self.table[x][y] == self.table[y][x] for x in POLES for y in POLES)

    def is_associative(self) -> bool:
        c = self.compose
        return all(
            c(c(x, y), z) == c(x, c(y, z)) for x, y, z in itertools.product(POLES, repeat=3)
        )

    def is_group(self) -> bool:
        return self.identity_pole() is not None and self.is_associative()

    def index_table(self) -> np.ndarray:
        """The table as a read-only 3x3 int array, for the numeric kernels."""
        return _index_table(self.table)

    def character(self) -> dict[Pole, complex]:
        """Map poles to cube roots of unity so that ``compose`` becomes multiplication.

        Only defined for the three group squares: the identity pole goes to 1,
        the first other pole (in R, G, B order) to omega, its square to omega**2.
        """
        return dict(_character(self))

    def format(self) -> str:
        lines = [f"(x){self.index} | R G B", "------+------"]
        for x in POLES:
            lines.append(f"    {x} | " + " ".join(str(v) for v in self.table[x]))
        return "\n".join(lines)

    def __str__(self):
        return f"square {self.index}"


@functools.lru_cache(maxsize=None)
def _index_table(table) -> np.ndarray:
    out = np.array([[int(v) for v in row] for row in table], dtype=np.intp)
    out.setflags(write=False)
    return out


@functools.lru_cache(maxsize=None)
def _character(sq: LatinSquare) -> tuple:
    e = sq.identity_pole()
    if e is None or not sq.is_associative():
        raise ValueError(f"square {sq.index} is not a group; it has no character")
    gen = next(p for p in POLES if p != e)
    return ((e, 1.0 + 0j), (gen, OMEGA), (sq.compose(gen, gen), OMEGA * OMEGA))


def _square(index, rows):
    table = tuple(tuple(Pole[c] for c in row.split()) for row in rows)
    return LatinSquare(index, table)


# rows indexed R, G, B; columns R, G, B
SQUARES = {
    1: _square(1, ["R G B", "G B R", "B R G"]),
    2: _square(2, ["G B R", "B R G", "R G B"]),
    3: _square(3, ["B R G", "R G B", "G B R"]),
    4: _square(4, ["R B G", "B G R", "G R B"]),
    5: _square(5, ["B G R", "G R B", "R B G"]),
    6: _square(6, ["G R B", "R B G", "B G R"]),
}

# squares usable for colour multiplication (those with an identity pole)
GROUP_SQUARES = (1, 2, 3)


def square(index) -> LatinSquare:
    if isinstance(index, LatinSquare):
        return index
    try:
        return SQUARES[int(index)]
    except (KeyError, ValueError):
        raise ValueError(f"no Latin square with index {index!r}") from None
