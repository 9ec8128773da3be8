from itertools import product

import pytest

from shpl.core import (
    ShiftedTableau,
    content,
    partitions,
    shifted_tableaux,
    standard_shifted_tableaux,
    strict_partitions,
    strict_partitions_upto,
)
from shpl.errors import BudgetError, ShapeError
from shpl.insertion import mixed_uninsert, mread, p_mix, standard_young_tableaux
from shpl.ssdt import DecompositionTableau, sk_insert_word
from shpl.symfunc.coefficients import (
    LR_METHODS,
    boxadd_witnesses,
    diagonal_content,
    g_coeff_plactic,
    g_coeff_rectify,
    g_expansion,
    lr_coeff_boxadd,
    lr_coeff_plactic,
    lr_coeff_rectify,
    p_product_expansion,
    pieri_expand,
    plactic_class_words,
    shifted_tableaux_with_content,
    skew_pschur_expand,
    standard_tableau_of,
)
from shpl.symfunc.operators import apply_word


def _triples(max_size):
    for lam in strict_partitions_upto(max_size):
        for mu in strict_partitions_upto(sum(lam)):
            for nu in strict_partitions(sum(lam) - sum(mu)):
                yield lam, mu, nu


class TestContentGeneration:
    @pytest.mark.parametrize("shape", [(2,), (2, 1), (3, 1), (3, 2), (4, 2), (3, 2, 1)])
    def test_matches_filtering(self, shape):
        n = sum(shape)
        for vec in product(range(n + 1), repeat=3):
            if sum(vec) != n:
                continue
            fast = set(shifted_tableaux_with_content(shape, vec))
            slow = {t for t in shifted_tableaux(shape, 3) if content(t) + (0,) * (3 - len(content(t))) == vec}
            assert fast == slow

    def test_diagonal_content(self):
        assert diagonal_content((5, 4, 2), (3, 1)) == (1, 2, 1, 2, 1)
        assert diagonal_content((3,), (3,)) == ()


class TestLittlewoodRichardson:
    def test_small_examples(self):
        for fn in LR_METHODS.values():
            assert fn((2, 1), (2,), (1,)) == 1
            assert fn((3, 1), (), (3, 1)) == 1
            assert fn((3, 1), (3, 1), ()) == 1

    def test_class_factorization_example(self):
        # 132 inserts to the standard tableau of shape (2,1) and splits as 13 . 2
        assert p_mix((1, 3)).shape == (2,) and p_mix((2,)).shape == (1,)
        assert p_mix((1, 3, 2)).shape == (2, 1)

    def test_worked_triple(self):
        lam, mu, nu = (5, 4, 2), (3, 1), (4, 3)
        assert lr_coeff_plactic(lam, mu, nu) == lr_coeff_rectify(lam, mu, nu) == lr_coeff_boxadd(lam, mu, nu) == 2
        witnesses = boxadd_witnesses(lam, mu, nu)
        assert ShiftedTableau.parse("1 2' 2 4 / 3 4' 5") in witnesses
        assert all(apply_word(mread(t), mu) == lam for t in witnesses)

    def test_witness_word_grows_to_the_larger_shape(self):
        w = mread(ShiftedTableau.parse("1 2' 2 4 / 3 4' 5"))
        assert w == (2, 1, 4, 5, 3, 2, 4)
        assert apply_word(w, (3, 1)) == (5, 4, 2)

    def test_mismatched_sizes_give_zero(self):
        for fn in LR_METHODS.values():
            assert fn((3, 1), (2,), (1,)) == 0
            assert fn((3, 1), (4,), ()) == 0

    def test_methods_agree_up_to_six(self):
        for lam, mu, nu in _triples(6):
            a = lr_coeff_plactic(lam, mu, nu)
            assert a == lr_coeff_rectify(lam, mu, nu) == lr_coeff_boxadd(lam, mu, nu)
            assert a == lr_coeff_plactic(lam, nu, mu)

    def test_fixed_class_choice_does_not_matter(self):
        # factor a second standard tableau of the same shape and compare
        for lam in [(3, 1), (4, 2), (3, 2, 1)]:
            t0 = standard_tableau_of(lam)
            for other in list(standard_shifted_tableaux(lam))[:3]:
                t = ShiftedTableau._trusted(tuple(tuple(2 * e for e in row) for row in other.rows))
                for k in range(sum(lam) + 1):
                    counts = {}
                    for tab in (t0, t):
                        pairs = set()
                        for q in standard_shifted_tableaux(lam):
                            w = mixed_uninsert(tab, q)
                            pairs.add((p_mix(w[:k]), p_mix(w[k:])))
                        shapes = {}
                        for a, b in pairs:
                            shapes[(a.shape, b.shape)] = shapes.get((a.shape, b.shape), 0) + 1
                        counts[tab] = shapes
                    assert counts[t0] == counts[t]

    def test_product_expansion(self):
        assert p_product_expansion((2,), (1,)) == {(3,): 1, (2, 1): 1}
        assert p_product_expansion((1,), (1,), "boxadd") == {(2,): 1}


class TestGCoefficients:
    def test_example(self):
        assert g_coeff_plactic((3, 1), (3, 1)) == 1
        assert g_coeff_plactic((3, 1), (3, 1), class_word=(2, 1, 3, 4)) == 1
        assert g_coeff_rectify((3, 1), (3, 1)) == 1
        words = set(plactic_class_words(((1, 3, 4), (2,))))
        assert words == {(2, 1, 3, 4), (2, 3, 1, 4), (2, 3, 4, 1)}
        assert {p_mix(w).shape for w in words} == {(3, 1), (4,)}

    def test_one_row(self):
        for n in range(1, 6):
            assert g_coeff_plactic((n,), (n,)) == g_coeff_rectify((n,), (n,)) == 1

    def test_wrong_class_word(self):
        with pytest.raises(ShapeError):
            g_coeff_plactic((3, 1), (3, 1), class_word=(1, 2, 3, 4))

    def test_methods_agree_up_to_six(self):
        for n in range(1, 7):
            for lam in strict_partitions(n):
                assert g_expansion(lam, "plactic") == g_expansion(lam, "rectify")

    def test_independent_of_class_choice(self):
        for n in range(1, 6):
            for lam in strict_partitions(n):
                for mu in partitions(n):
                    expected = g_coeff_plactic(lam, mu)
                    for q in standard_young_tableaux(mu):
                        # the reading word of any standard Young tableau of shape mu picks another class
                        word = tuple(e for row in reversed(q) for e in row)
                        assert g_coeff_plactic(lam, mu, class_word=word) == expected


class TestPieri:
    def test_example(self):
        assert pieri_expand((2,), 2) == {(4,): 1, (3, 1): 2}
        assert pieri_expand((), 3) == {(3,): 1}

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            pieri_expand((2,), 0)

    def test_agrees_with_lr(self):
        for mu in strict_partitions_upto(5):
            for k in range(1, 4):
                expansion = pieri_expand(mu, k)
                for lam in strict_partitions(sum(mu) + k):
                    assert expansion.get(lam, 0) == lr_coeff_plactic(lam, mu, (k,))

    def test_sk_insertion_of_a_row_adds_a_vee(self):
        s, rec = sk_insert_word(DecompositionTableau.parse("4211 / 313 / 2"), (5, 3, 1, 2, 2))
        assert s.shape == (7, 4, 2)
        assert sorted(rec.values()) == [1, 2, 3, 4, 5]


class TestSkewClasses:
    def test_straight_shape(self):
        out = skew_pschur_expand((2, 1), (), 2)
        assert sum(out.values()) == sum(1 for _ in shifted_tableaux((2, 1), 2))
        assert set(out) == set(shifted_tableaux((2, 1), 2))

    def test_small_skew_is_stable(self):
        a = skew_pschur_expand((2, 1), (1,), 2)
        assert a == skew_pschur_expand((2, 1), (1,), 2)
        assert all(t.size == 2 for t in a)

    def test_budget(self):
        with pytest.raises(BudgetError):
            skew_pschur_expand((5, 4, 3), (), 2, max_cells=8)
