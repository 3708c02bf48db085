"""Exhaustive solver against the naive reference and its own fast path."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bwnim.coloring import BeattyIrrational, Explicit, Modular, RationalBeatty
from bwnim.exactnum import QuadraticIrrational
from bwnim.gamecore import (
    Bichromatic,
    BichromaticMode,
    GameSpec,
    Interpretation,
    Spectrum,
    black_white_spec,
    heap_is_black,
    is_legal,
)
from bwnim.solver import (
    OUTCOME_ILLEGAL,
    OUTCOME_P,
    _outcome_dense_two_heaps,
    _outcome_generic,
    grundy_table,
    mex,
    nim_xor_check,
    outcome_table,
    partizan_outcomes,
    partizan_to_csv,
    tables_to_csv,
    winning_moves,
)

from reference import naive_grundy, naive_mex, naive_outcomes, naive_partizan

ONE_PLUS_RT2 = QuadraticIrrational(1, 1, 2, 1)

COLORINGS = [
    Modular(2),
    Modular(3),
    BeattyIrrational(ONE_PLUS_RT2),
    RationalBeatty(5, 2),
    Explicit((2, 5, 9)),
]


def bw(coloring, k=2):
    return black_white_spec(coloring, k)


# -- mex -------------------------------------------------------------------------

def test_mex_examples():
    assert mex(set()) == 0
    assert mex({0, 1, 3}) == 2
    assert mex({1, 2}) == 0


@given(st.sets(st.integers(0, 60)))
def test_mex_matches_naive_scan(values):
    assert mex(values) == naive_mex(values)


# -- outcome tables ---------------------------------------------------------------

def test_modular_two_pset():
    table = outcome_table(bw(Modular(2)), 10)
    assert table.p_positions() == [(0, 0), (1, 2), (3, 4), (5, 6), (7, 8), (9, 10)]


def test_beatty_pset():
    table = outcome_table(bw(BeattyIrrational(ONE_PLUS_RT2)), 7)
    assert table.p_positions() == [(0, 0), (1, 2), (3, 4), (5, 7)]


def test_all_zero_is_p_for_every_blackwhite_spec():
    for coloring in COLORINGS:
        assert outcome_table(bw(coloring), 3).entries[(0, 0)] == OUTCOME_P


@pytest.mark.parametrize("coloring", COLORINGS, ids=lambda c: c.spec_string())
def test_outcomes_match_naive_reference_k2(coloring):
    spec = bw(coloring)
    table = outcome_table(spec, 16)
    ref = naive_outcomes(lambda pos: is_legal(spec, pos), 2, 16)
    assert table.entries == ref


@pytest.mark.parametrize("coloring", COLORINGS[:3], ids=lambda c: c.spec_string())
def test_outcomes_match_naive_reference_k3(coloring):
    spec = bw(coloring, 3)
    table = outcome_table(spec, 8)
    ref = naive_outcomes(lambda pos: is_legal(spec, pos), 3, 8)
    assert table.entries == ref


def test_dense_sweep_equals_generic_induction():
    specs = [bw(c) for c in COLORINGS]
    specs.append(GameSpec(k=2, rules=Spectrum(3, Interpretation.DISTINCT_COLORS)))
    specs.append(GameSpec(k=2, rules=Bichromatic(2, BichromaticMode.EXACTLY)))
    for spec in specs:
        assert _outcome_dense_two_heaps(spec, 25) == _outcome_generic(spec, 25)


def test_determinism_two_runs_identical():
    spec = bw(BeattyIrrational(ONE_PLUS_RT2))
    a = outcome_table(spec, 40)
    b = outcome_table(spec, 40)
    assert a.entries == b.entries
    assert list(a.entries) == list(b.entries)


def test_resource_guard():
    with pytest.raises(ValueError, match="entries"):
        outcome_table(bw(Modular(2)), 100, max_entries=1000)


def test_resource_guard_env_override(monkeypatch):
    monkeypatch.setenv("BWNIM_MAX_TABLE_ENTRIES", "10")
    with pytest.raises(ValueError, match="entries"):
        outcome_table(bw(Modular(2)), 100)
    monkeypatch.setenv("BWNIM_MAX_TABLE_ENTRIES", "100000")
    outcome_table(bw(Modular(2)), 100)


# -- grundy -------------------------------------------------------------------------

def test_grundy_one_empty_heap_is_plain_nim():
    for coloring in COLORINGS:
        g = grundy_table(bw(coloring), 30)
        for x in range(31):
            assert g.entries[(0, x)] == x


def test_grundy_examples():
    g = grundy_table(bw(Modular(2)), 12)
    assert g.entries[(0, 0)] == 0
    assert g.entries[(1, 2)] == 0


@pytest.mark.parametrize("coloring", COLORINGS, ids=lambda c: c.spec_string())
def test_grundy_matches_naive_reference(coloring):
    spec = bw(coloring)
    g = grundy_table(spec, 14)
    ref = naive_grundy(lambda pos: is_legal(spec, pos), 2, 14)
    assert g.entries == ref


@pytest.mark.parametrize("coloring", COLORINGS, ids=lambda c: c.spec_string())
def test_grundy_zero_iff_p(coloring):
    spec = bw(coloring)
    table = outcome_table(spec, 40)
    g = grundy_table(spec, 40)
    for pos, verdict in table.entries.items():
        if verdict == OUTCOME_ILLEGAL:
            assert pos not in g.entries
        else:
            assert (g.entries[pos] == 0) == (verdict == OUTCOME_P)


def test_grundy_zero_iff_p_spectrum_variants():
    for rules in (Spectrum(2), Spectrum(3, Interpretation.DISTINCT_COLORS),
                  Bichromatic(3, BichromaticMode.AT_MOST),
                  Bichromatic(3, BichromaticMode.EXACTLY)):
        spec = GameSpec(k=3, rules=rules)
        table = outcome_table(spec, 12)
        g = grundy_table(spec, 12)
        for pos, verdict in table.entries.items():
            if verdict != OUTCOME_ILLEGAL:
                assert (g.entries[pos] == 0) == (verdict == OUTCOME_P)


# -- winning moves and the nim law -----------------------------------------------------

def test_winning_moves_examples():
    spec = bw(Modular(2))
    assert {m.target for m in winning_moves(spec, (2, 2))} == {(1, 2)}
    assert winning_moves(spec, (1, 2)) == []  # P position
    spec_b = bw(BeattyIrrational(ONE_PLUS_RT2))
    assert {m.target for m in winning_moves(spec_b, (2, 3))} == {(1, 2)}


def test_winning_moves_rejects_illegal():
    with pytest.raises(ValueError, match="color rule"):
        winning_moves(bw(Modular(2)), (1, 1))


def test_nim_xor_check():
    assert nim_xor_check((0, 5, 5))
    assert not nim_xor_check((0, 3))
    assert nim_xor_check((0, 1, 2, 3))
    with pytest.raises(ValueError, match="empty heap"):
        nim_xor_check((1, 2))


@pytest.mark.parametrize("coloring", COLORINGS, ids=lambda c: c.spec_string())
def test_empty_heap_nim_law_small_boxes(coloring):
    # acceptance runs the full-size boxes; this is the fast regression
    for k, bound in ((2, 60), (3, 20)):
        table = outcome_table(bw(coloring, k), bound)
        for pos, verdict in table.entries.items():
            if 0 in pos and verdict != OUTCOME_ILLEGAL:
                assert (verdict == OUTCOME_P) == nim_xor_check(pos)


# -- partizan ----------------------------------------------------------------------------

def test_partizan_terminal_and_forced_examples():
    classes = partizan_outcomes(Modular(2), 2, 4)
    assert classes[(0, 0)] == "P"
    assert classes[(0, 1)] == "R"
    assert classes[(0, 2)] == "R"


def test_partizan_matches_naive_reference():
    for coloring in (Modular(2), Explicit((2,)), Modular(3)):
        got = partizan_outcomes(coloring, 2, 10)
        ref = naive_partizan(lambda s, c=coloring: heap_is_black(c, s), 2, 10)
        assert got == ref


# -- exports -----------------------------------------------------------------------------

def test_csv_shape_and_stability():
    spec = bw(BeattyIrrational(ONE_PLUS_RT2))
    first = tables_to_csv(outcome_table(spec, 7), grundy_table(spec, 7))
    second = tables_to_csv(outcome_table(spec, 7), grundy_table(spec, 7))
    assert first == second
    lines = first.splitlines()
    assert lines[0] == "x1,x2,outcome,grundy"
    assert "1,1,Illegal," in lines  # blank grundy on illegal rows
    assert lines[1] == "0,0,P,0"


def test_csv_rejects_mismatched_tables():
    spec = bw(Modular(2))
    with pytest.raises(ValueError):
        tables_to_csv(outcome_table(spec, 5), grundy_table(spec, 6))


def test_partizan_csv_carries_convention():
    classes = partizan_outcomes(Modular(2), 2, 3)
    text = partizan_to_csv(classes, 2)
    assert text.splitlines()[0].startswith("# convention: normal play")
    assert "x1,x2,class" in text
