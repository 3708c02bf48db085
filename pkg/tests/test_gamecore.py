"""Rules layer: colors, legality, move generation, canonical positions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bwnim.coloring import BeattyIrrational, Explicit, Modular
from bwnim.exactnum import QuadraticIrrational
from bwnim.gamecore import (
    Bichromatic,
    BichromaticMode,
    GameSpec,
    Interpretation,
    Move,
    Player,
    Spectrum,
    black_white_spec,
    canonical,
    color_of_heap,
    format_position,
    heap_is_black,
    is_legal,
    legal_moves,
    parse_game_spec,
    parse_position,
    partizan_legal_moves,
    spectrum_legal,
    bichromatic_legal,
)

S2 = Explicit((2,))
EVENS = Modular(2)


def targets(moves):
    return {m.target for m in moves}


# -- positions -------------------------------------------------------------------

def test_canonical_sorts_and_validates():
    assert canonical([3, 0, 2]) == (0, 2, 3)
    with pytest.raises(ValueError):
        canonical([1, -1])


def test_parse_position_round_trip():
    assert parse_position("4,3", 2) == (3, 4)
    assert format_position((3, 4)) == "3,4"
    with pytest.raises(ValueError):
        parse_position("1,2,3", 2)


def test_move_must_lower():
    with pytest.raises(ValueError):
        Move((1, 2), (2, 2), 1, 2)


# -- heap colors --------------------------------------------------------------------

def test_worked_example_heap_colors():
    # heaps 0, 2, 3 with black tokens only at height 2: black, black, white
    assert heap_is_black(S2, 0)
    assert heap_is_black(S2, 2)
    assert not heap_is_black(S2, 3)


def test_color_of_heap():
    assert color_of_heap(3, 7) == 1
    assert color_of_heap(3, 0) is None
    assert color_of_heap(2, 4) == 0


# -- black & white legality ------------------------------------------------------------

def test_worked_example_legality():
    spec = black_white_spec(S2, 3)
    assert is_legal(spec, (0, 2, 3))
    spec2 = black_white_spec(EVENS, 2)
    assert not is_legal(spec2, (1, 1))
    assert is_legal(spec2, (0, 0))


def test_worked_example_moves():
    spec = black_white_spec(S2, 2)
    moves = legal_moves(spec, (1, 2))
    assert targets(moves) == {(0, 2), (0, 1)}


def test_moves_deduplicate_symmetric_heaps():
    spec = black_white_spec(EVENS, 2)
    moves = legal_moves(spec, (2, 2))
    assert targets(moves) == {(0, 2), (1, 2)}


def test_moves_from_terminal_empty():
    spec = black_white_spec(S2, 2)
    assert legal_moves(spec, (0, 0)) == []


def test_moves_reject_illegal_position():
    spec = black_white_spec(EVENS, 2)
    with pytest.raises(ValueError, match="color rule"):
        legal_moves(spec, (1, 1))


def test_option_legality_closure_and_strict_decrease():
    spec = black_white_spec(BeattyIrrational(QuadraticIrrational(1, 1, 2, 1)), 3)
    for pos in [(0, 1, 5), (2, 2, 3), (4, 7, 9), (1, 2, 2)]:
        for m in legal_moves(spec, pos):
            assert is_legal(spec, m.target)
            assert sum(m.target) < sum(pos)
            assert m.heap_to < m.heap_from


def test_empty_heap_positions_are_fully_open():
    # with an empty heap on board every lowering is legal
    spec = black_white_spec(S2, 3)
    for pos in [(0, 1, 1), (0, 3, 5), (0, 0, 4)]:
        assert len(legal_moves(spec, pos)) == sum(set(pos))


def test_heap_size_invariance_under_unused_members():
    # enlarging S above the box must not change anything below it
    small = black_white_spec(Explicit((2,)), 2)
    large = black_white_spec(Explicit((2, 50)), 2)
    for x in range(10):
        for y in range(x, 10):
            assert is_legal(small, (x, y)) == is_legal(large, (x, y))
            if is_legal(small, (x, y)):
                assert targets(legal_moves(small, (x, y))) == targets(
                    legal_moves(large, (x, y)))


@settings(max_examples=150)
@given(st.lists(st.integers(0, 12), min_size=2, max_size=4),
       st.randoms(use_true_random=False))
def test_legal_moves_invariant_under_permutation(sizes, rng):
    spec = black_white_spec(EVENS, len(sizes))
    shuffled = sizes[:]
    rng.shuffle(shuffled)
    a = canonical(sizes)
    b = canonical(shuffled)
    assert a == b
    if is_legal(spec, a):
        assert targets(legal_moves(spec, a)) == targets(legal_moves(spec, b))


# -- spectrum and bichromatic -----------------------------------------------------------

def test_spectrum_feasible_branch():
    assert spectrum_legal(2, Interpretation.ALL_COLORS_WHEN_FEASIBLE, (1, 2, 5))
    assert not spectrum_legal(2, Interpretation.ALL_COLORS_WHEN_FEASIBLE, (1, 1, 3))


def test_spectrum_distinct_branch():
    assert spectrum_legal(3, Interpretation.ALL_COLORS_WHEN_FEASIBLE, (1, 2))
    assert not spectrum_legal(3, Interpretation.ALL_COLORS_WHEN_FEASIBLE, (1, 4))
    assert not spectrum_legal(2, Interpretation.DISTINCT_COLORS, (1, 3))


def test_spectrum_all_empty_is_vacuously_legal():
    for interp in Interpretation:
        assert spectrum_legal(2, interp, (0, 0, 0))


def test_bichromatic_modes():
    assert bichromatic_legal(3, BichromaticMode.AT_MOST, (1, 2, 4))
    assert bichromatic_legal(3, BichromaticMode.EXACTLY, (1, 2, 4))
    assert bichromatic_legal(3, BichromaticMode.AT_LEAST, (1, 2, 4))
    assert bichromatic_legal(3, BichromaticMode.AT_MOST, (3, 6))
    assert not bichromatic_legal(3, BichromaticMode.EXACTLY, (3, 6))
    assert not bichromatic_legal(3, BichromaticMode.AT_LEAST, (3, 6))
    assert bichromatic_legal(3, BichromaticMode.AT_MOST, (0, 0))
    assert not bichromatic_legal(3, BichromaticMode.EXACTLY, (0, 0))
    assert not bichromatic_legal(3, BichromaticMode.AT_LEAST, (0, 0))


def test_variant_constructors_validate_colors():
    with pytest.raises(ValueError):
        Spectrum(1)
    with pytest.raises(ValueError):
        Bichromatic(1, BichromaticMode.AT_MOST)
    with pytest.raises(ValueError):
        GameSpec(k=0, rules=Spectrum(2))


# -- partizan ---------------------------------------------------------------------------

def test_partizan_moves_worked_example():
    assert partizan_legal_moves(EVENS, (0, 0), Player.LEFT) == []
    left = targets(partizan_legal_moves(EVENS, (1, 2), Player.LEFT))
    right = targets(partizan_legal_moves(EVENS, (1, 2), Player.RIGHT))
    assert left == {(1, 1), (0, 1)}
    assert right == {(0, 1), (0, 2)}


def test_parse_game_spec():
    spec = parse_game_spec("modular:2", 2)
    assert spec.k == 2 and spec.describe() == "modular:2"
