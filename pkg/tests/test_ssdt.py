from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_words
from shpl.core import ShiftedTableau, strict_partitions
from shpl.errors import HookError, MaximalityError, ShapeError, SplitError
from shpl.insertion import mixed_insertion, mread, p_mix, special_recording_tableau
from shpl.ssdt import (
    DecompositionTableau,
    hook_split,
    is_hook_word,
    is_ssdt,
    longest_hook_subword_length,
    p_sk,
    phi,
    psi,
    q_sk,
    read,
    sk_insert_into_row,
    sk_insert_word,
    sk_insertion,
    validate_ssdt,
)

words = st.lists(st.integers(1, 6), max_size=12).map(tuple)


def _longest_hook_bruteforce(w):
    from itertools import combinations

    for k in range(len(w), 0, -1):
        if any(is_hook_word(sub) for sub in combinations(w, k)):
            return k
    return 0


def _ssdt_bruteforce(n, m):
    """Every filling of every strict shape of size n by hook rows over 1..m that validates."""
    out = set()
    for shape in strict_partitions(n):
        rows = [[w for w in product(range(1, m + 1), repeat=p) if is_hook_word(w)] for p in shape]
        for choice in product(*rows):
            if is_ssdt(choice):
                out.add(DecompositionTableau._trusted(choice))
    return out


class TestHookWords:
    def test_examples(self):
        assert is_hook_word((9, 6, 5, 2, 4))
        assert is_hook_word((3, 4))
        assert not is_hook_word((1, 2, 1, 2))

    def test_split_takes_the_longest_decreasing_prefix(self):
        assert hook_split((9, 6, 5, 2, 4)) == ((9, 6, 5, 2), (4,))
        assert hook_split((3, 4)) == ((3,), (4,))
        assert hook_split((6, 5, 4, 2, 1, 1, 4)) == ((6, 5, 4, 2, 1), (1, 4))

    def test_split_errors(self):
        with pytest.raises(SplitError):
            hook_split(())
        with pytest.raises(SplitError):
            hook_split((1, 2, 1, 2))

    def test_hook_iff_single_row(self):
        for w in all_words(6, 4):
            assert is_hook_word(w) == (len(p_mix(w).shape) <= 1)

    @given(st.lists(st.integers(1, 5), max_size=9).map(tuple))
    def test_longest_hook_subword(self, w):
        assert longest_hook_subword_length(w) == _longest_hook_bruteforce(w)

    def test_longest_hook_examples(self):
        assert longest_hook_subword_length((3, 4, 1, 5, 9, 6, 1, 2, 5, 4)) == 5
        assert longest_hook_subword_length((7, 5, 3, 2)) == 4


class TestValidation:
    def test_examples(self):
        r = validate_ssdt("96524 / 511 / 34")
        assert r.shape == (5, 3, 2) and str(r) == "96524 / 511 / 34"
        assert validate_ssdt("8523 / 617 / 4").shape == (4, 3, 1)
        assert validate_ssdt("") == DecompositionTableau(())

    def test_shape_error(self):
        with pytest.raises(ShapeError):
            validate_ssdt("12 / 12")

    def test_hook_error_names_row(self):
        with pytest.raises(HookError) as err:
            validate_ssdt("1212 / 3")
        assert err.value.row == 1

    def test_maximality_error(self):
        # reading 2 then 34 gives the hook word 234, longer than the top row
        with pytest.raises(MaximalityError):
            DecompositionTableau(((3, 4), (2,)))
        assert not is_ssdt(((3,), (1,)))

    def test_read(self):
        r = DecompositionTableau.parse("96524 / 511 / 34")
        assert read(r) == (3, 4, 5, 1, 1, 9, 6, 5, 2, 4)
        assert read(DecompositionTableau(((3, 1, 2),))) == (3, 1, 2)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_sk_image_is_every_ssdt(self, n):
        image = {p_sk(w) for w in product(range(1, 5), repeat=n)}
        assert image == _ssdt_bruteforce(n, 4)


class TestSKInsertion:
    @pytest.mark.parametrize(
        "row, x, new, bumped",
        [
            ((6, 5, 4, 2, 1, 1, 4), 3, (6, 5, 4, 2, 1, 1, 3), 4),
            ((6, 3, 2, 1, 5), 4, (6, 5, 2, 1, 4), 3),
            ((5, 2, 2), 3, (5, 2, 2, 3), None),
        ],
    )
    def test_row_examples(self, row, x, new, bumped):
        assert sk_insert_into_row(row, x) == (new, bumped)

    def test_full_example(self):
        r = DecompositionTableau.parse("6542114 / 63215 / 522")
        s, rec = sk_insert_word(r, (3,))
        assert str(s) == "6542113 / 65214 / 5223"
        assert rec == {(3, 6): 1}

    def test_worked_word(self):
        p, q = sk_insertion((3, 4, 1, 5, 9, 6, 1, 2, 5, 4))
        assert str(p) == "96524 / 511 / 34"
        assert str(q) == "1 2 4 5 9 / 3 6 8 / 7 10"

    def test_single_letter(self):
        p, q = sk_insertion((4,))
        assert p.rows == ((4,),) and q.rows == ((1,),)

    def test_word_insertion_records_new_cells(self):
        r = DecompositionTableau.parse("4211 / 313 / 2")
        s, rec = sk_insert_word(r, (5, 3, 1, 2, 2))
        assert str(s) == "5311122 / 3124 / 23"
        assert rec == {(1, 5): 1, (2, 5): 2, (3, 4): 3, (1, 6): 4, (1, 7): 5}

    @given(words)
    def test_insertion_tableau_is_valid(self, w):
        p = p_sk(w)
        assert is_ssdt(p.rows)
        assert sorted(read(p)) == sorted(w)

    @given(words)
    def test_same_recording_as_mixed(self, w):
        assert q_sk(w) == mixed_insertion(w).q

    @given(words)
    def test_first_row_is_longest_hook(self, w):
        p = p_sk(w)
        assert (p.shape[0] if p.shape else 0) == longest_hook_subword_length(w)

    @given(words)
    def test_reading_word_records_special_tableau(self, w):
        p = p_sk(w)
        assert q_sk(read(p)) == special_recording_tableau(p.shape)

    def test_bijective_on_small_words(self):
        pairs = {}
        for w in all_words(6, 3):
            pair = sk_insertion(w)
            assert pair not in pairs
            pairs[pair] = w

    def test_same_class_iff_same_sk_tableau(self):
        by_sk, by_mix = {}, {}
        for w in all_words(5, 4):
            by_sk.setdefault(p_sk(w), set()).add(w)
            by_mix.setdefault(p_mix(w), set()).add(w)
        assert sorted(map(sorted, by_sk.values())) == sorted(map(sorted, by_mix.values()))


class TestPhiPsi:
    def test_worked_example(self):
        r = DecompositionTableau.parse("96524 / 511 / 34")
        assert str(phi(r)) == "1 1 2 3' 4 / 4 5 5 / 6 9'"
        assert psi(phi(r)) == r

    def test_one_row(self):
        r = DecompositionTableau(((6, 3, 2, 1, 2, 2, 4, 5),))
        t = ShiftedTableau.parse("1 2' 2 2 3' 4 5 6'")
        assert phi(r) == t and psi(t) == r
        assert mread(t) == read(r)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_round_trips(self, n):
        for r in _ssdt_bruteforce(n, 3):
            t = phi(r)
            assert psi(t) == r
            assert mread(t) == read(r)
