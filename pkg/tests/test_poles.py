import itertools

import pytest

from tripolar import poles
from tripolar.poles import GROUP_SQUARES, OMEGA, POLES, SQUARES, Pole

from oracles import SQUARE1, W


def test_poles_sum_to_white_point():
    assert abs(sum(poles.value(p) for p in POLES)) <= 1e-12


def test_poles_lie_on_unit_circle_120_degrees_apart():
    for p in POLES:
        assert abs(abs(poles.value(p)) - 1.0) <= 1e-15
    assert abs(poles.value(Pole.G) - W) <= 1e-15
    assert abs(poles.value(Pole.B) - W * W) <= 1e-15


def test_inverse_poles_are_negatives():
    inv = poles.inverse_pole_points()
    for p in POLES:
        assert inv[p] == -poles.value(p)
    assert poles.INVERSE_NAMES == {Pole.R: "C", Pole.G: "M", Pole.B: "Y"}


def test_all_six_are_symmetric_latin_squares():
    assert sorted(SQUARES) == [1, 2, 3, 4, 5, 6]
    for sq in SQUARES.values():
        assert sq.is_latin() and sq.is_symmetric()
    tables = {sq.table for sq in SQUARES.values()}
    assert len(tables) == 6


def test_exhaustive_enumeration_finds_exactly_six():
    found = []
    for rows in itertools.product(itertools.permutations(POLES), repeat=3):
        sq = poles.LatinSquare(0, rows)
        if sq.is_latin() and sq.is_symmetric():
            found.append(rows)
    assert sorted(found) == sorted(sq.table for sq in SQUARES.values())


def test_only_first_three_have_identity_pole():
    ids = {i: SQUARES[i].identity_pole() for i in SQUARES}
    assert ids == {1: Pole.R, 2: Pole.B, 3: Pole.G, 4: None, 5: None, 6: None}
    assert GROUP_SQUARES == (1, 2, 3)
    assert all(SQUARES[i].is_group() for i in GROUP_SQUARES)


def test_square_one_matches_reference_table():
    sq = SQUARES[1]
    for (a, b), c in SQUARE1.items():
        assert sq.compose(Pole[a], Pole[b]) == Pole[c]


@pytest.mark.parametrize("index", GROUP_SQUARES)
def test_character_is_a_homomorphism(index):
    sq = SQUARES[index]
    char = sq.character()
    assert char[sq.identity_pole()] == 1
    for x, y in itertools.product(POLES, repeat=2):
        assert abs(char[sq.compose(x, y)] - char[x] * char[y]) <= 1e-12


def test_square_one_character_is_omega_powers():
    char = SQUARES[1].character()
    assert all(abs(char[p] - OMEGA ** int(p)) <= 1e-15 for p in POLES)


def test_character_undefined_without_identity():
    with pytest.raises(ValueError):
        SQUARES[4].character()


def test_square_lookup():
    assert poles.square(2) is SQUARES[2]
    assert poles.square(SQUARES[3]) is SQUARES[3]
    with pytest.raises(ValueError):
        poles.square(7)


def test_format():
    assert SQUARES[1].format().splitlines() == [
        "(x)1 | R G B", "------+------", "    R | R G B", "    G | G B R", "    B | B R G",
    ]
