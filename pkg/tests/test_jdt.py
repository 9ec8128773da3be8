import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_words
from shpl.core import (
    ShiftedTableau,
    SkewStandardShiftedTableau,
    StandardShiftedTableau,
    contains,
    content,
    skew_shifted_tableaux,
    skew_standard_shifted_tableaux,
    standard_shifted_tableaux,
    strict_partitions_upto,
    letter,
)
from shpl.errors import EmptyError
from shpl.insertion import mread, p_mix, q_mix, rsk_insertion
from shpl.jdt import (
    SCHEDULES,
    all_rectifications,
    canonical_negative_filling,
    delta,
    diagonal_word,
    random_negative_filling,
    rectify_cells,
    rsk_to_mixed_recording,
    shifted_jdt_rectify,
    skew_mread,
    skew_rect,
    stan_ssdt,
    stan_tableau,
    stan_word,
)
from shpl.ssdt import DecompositionTableau, is_hook_word, p_sk, q_sk, read

words = st.lists(st.integers(1, 5), max_size=10).map(tuple)

SKEW_EXAMPLE = "_ _ _ 1 4 / _ 2 3 5 / 6 7"


def _skew_pairs(max_size):
    for outer in strict_partitions_upto(max_size):
        for inner in strict_partitions_upto(sum(outer) - 1):
            if inner and contains(outer, inner):
                yield outer, inner


class TestRectification:
    @pytest.mark.parametrize("schedule", SCHEDULES)
    def test_worked_example(self, schedule):
        t = SkewStandardShiftedTableau.parse(SKEW_EXAMPLE)
        assert str(shifted_jdt_rectify(t, schedule)) == "1 2 3 4 / 5 6 7"
        assert diagonal_word(t) == (2, 1, 4, 5, 3, 2, 4)

    def test_straight_shape_is_fixed(self):
        for u in standard_shifted_tableaux((4, 2, 1)):
            t = SkewStandardShiftedTableau.from_cells((4, 2, 1), (), u.as_dict())
            assert shifted_jdt_rectify(t) == u

    def test_every_corner_order_agrees(self):
        for outer, inner in _skew_pairs(7):
            for t in skew_standard_shifted_tableaux(outer, inner):
                results = all_rectifications(t.as_dict(), inner)
                assert len(results) == 1
                (only,) = results
                for schedule in SCHEDULES:
                    assert tuple(sorted(rectify_cells(t.as_dict(), inner, schedule).items())) == only

    def test_small_case_by_hand(self):
        # the two standard fillings of (3,2)/(2) rectify to the two standard tableaux of size 3
        got = sorted(str(shifted_jdt_rectify(t)) for t in skew_standard_shifted_tableaux((3, 2), (2,)))
        assert got == ["1 2 / 3", "1 2 3"]

    def test_unknown_schedule(self):
        with pytest.raises(ValueError):
            rectify_cells({(1, 2): 1}, (1,), "sideways")


class TestRSKRecording:
    def test_worked_word(self):
        q = rsk_insertion((3, 4, 1, 5, 9, 6, 1, 2, 5, 4)).q
        assert str(rsk_to_mixed_recording(q)) == "1 2 4 5 9 / 3 6 8 / 7 10"

    def test_single_row(self):
        assert rsk_to_mixed_recording(((1, 2, 3),)) == StandardShiftedTableau(((1, 2, 3),))

    @given(st.lists(st.integers(1, 4), max_size=12).map(tuple))
    def test_rectified_recording_is_mixed_recording(self, w):
        assert rsk_to_mixed_recording(rsk_insertion(w).q) == q_mix(w)


class TestDelta:
    def test_strips_first_letter(self):
        w = (3, 4, 1, 5, 9, 6, 1, 2, 5, 4)
        for k in range(len(w)):
            assert delta(q_sk(w[k:])) == q_sk(w[k + 1 :])

    @given(words)
    def test_repeated_delta_empties(self, w):
        u = q_sk(w)
        for k in range(len(w)):
            assert u == q_mix(w[k:])
            u = delta(u)
        assert u.size == 0

    def test_empty(self):
        with pytest.raises(EmptyError):
            delta(StandardShiftedTableau(()))
        assert delta(StandardShiftedTableau(((1,),))).size == 0


class TestStandardization:
    def test_word_example(self):
        assert stan_word((2, 3, 3, 1, 4, 2, 1, 1)) == (4, 6, 7, 1, 8, 5, 2, 3)
        assert stan_word((3, 1, 2)) == (3, 1, 2)

    def test_tableau_example(self):
        t = ShiftedTableau.parse("1 1 1 2' / 2 3' 4 / 3")
        assert str(stan_tableau(t)) == "1 2 3 4' / 5 6' 8 / 7"

    def test_ssdt_example(self):
        r = DecompositionTableau.parse("4211 / 313 / 2")
        assert str(stan_ssdt(r)) == "8523 / 617 / 4"
        assert read(stan_ssdt(r)) == stan_word(read(r))

    def test_standard_inputs_are_fixed(self):
        for u in standard_shifted_tableaux((4, 2)):
            t = ShiftedTableau.from_values(u.rows)
            assert stan_tableau(t) == t

    @given(words)
    def test_stan_is_a_permutation(self, w):
        s = stan_word(w)
        assert sorted(s) == list(range(1, len(w) + 1))
        assert all((w[a] < w[b]) <= (s[a] < s[b]) for a in range(len(w)) for b in range(len(w)))

    def test_commutes_with_insertions_exhaustively(self):
        for w in all_words(5, 3):
            s = stan_word(w)
            assert is_hook_word(w) == is_hook_word(s)
            assert p_mix(s) == stan_tableau(p_mix(w))
            assert p_sk(s) == stan_ssdt(p_sk(w))
            assert q_mix(s) == q_mix(w)
            assert q_sk(s) == q_sk(w)

    def test_equivalence_transfers(self):
        words_ = list(all_words(5, 3, min_len=5))
        for u in words_[::7]:
            for v in words_[::11]:
                same = p_mix(u) == p_mix(v)
                assert same == (content(u) == content(v) and p_mix(stan_word(u)) == p_mix(stan_word(v)))


class TestSkewReading:
    def test_straight_shape(self):
        t = ShiftedTableau.parse("1 1 2 3' 4 / 4 5 5 / 6 9'")
        assert skew_mread(t.shape, (), dict(t.items())) == mread(t)

    def test_worked_example_rectifies(self):
        t = SkewStandardShiftedTableau.parse(SKEW_EXAMPLE)
        filling = {c: 2 * e for c, e in t.as_dict().items()}
        # mixed insertion of a permutation keeps primes, so only the shape matches the jdt result
        assert skew_rect(t.outer, t.inner, filling).shape == (4, 3)

    def test_canonical_filling_is_a_tableau(self):
        neg = canonical_negative_filling((3, 1))
        assert neg == {(1, 1): letter(-4), (1, 2): letter(-3), (1, 3): letter(-2), (2, 2): letter(-1)}

    def test_independent_of_negative_filling(self):
        rng = random.Random(7)
        checked = 0
        for outer, inner in [((4, 2), (1,)), ((4, 2, 1), (2,)), ((5, 3, 1), (3, 1)), ((4, 3), (2, 1))]:
            fillings = list(skew_shifted_tableaux(outer, inner, 3))
            for f in rng.sample(fillings, min(25, len(fillings))):
                a = skew_mread(outer, inner, f)
                b = skew_mread(outer, inner, f, random_negative_filling(inner, rng))
                c = skew_mread(outer, inner, f, random_negative_filling(inner, rng))
                assert a == b == c
                checked += 1
        assert checked >= 100
