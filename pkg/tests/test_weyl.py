import itertools
from fractions import Fraction

import pytest

from ctilde import weyl
from ctilde.weyl import (
    DExtElement,
    SignedPermutation,
    affine_reflection,
    ball,
    base_point,
    d_ball_sigma_fixed,
    d_generator,
    d_identity,
    descents,
    element_from_json,
    element_from_text,
    element_to_json,
    element_to_text,
    evaluate_word,
    fold,
    generator,
    identity,
    in_affine_subgroup,
    is_sigma_fixed,
    length,
    parabolic_factorize,
    parabolic_subgroup,
    reduced_word,
    sigma,
    sigma_fixed_generators,
    simple_functionals,
    translation,
    weighted_length,
)


def all_words(n, max_len):
    """Brute-force word enumeration, the oracle for length/descent claims."""
    for k in range(max_len + 1):
        yield from itertools.product(range(n + 1), repeat=k)


def words_by_element(n, max_len):
    table = {}
    for word in all_words(n, max_len):
        table.setdefault(evaluate_word(n, word), []).append(word)
    return table


# -- group law ----------------------------------------------------------------


def test_compose_identity():
    for n in (1, 2, 3):
        g = evaluate_word(n, (0, 1))
        assert identity(n) * g == g
        assert g * identity(n) == g


def test_compose_s0_s1_is_translation_n1():
    assert generator(1, 0) * generator(1, 1) == translation((1,))


def test_compose_matches_action():
    pts = [(Fraction(1, 7), Fraction(2, 7)), (Fraction(-3, 5), Fraction(1, 5))]
    for a in ball(2, 3):
        for b in ball(2, 2):
            c = a * b
            for p in pts:
                assert c.act(p) == a.act(b.act(p))


def test_compose_rank_mismatch():
    with pytest.raises(ValueError):
        generator(1, 0) * generator(2, 0)


def test_inverse():
    for g in ball(2, 4):
        assert g * g.inverse() == identity(2)
        assert g.inverse() * g == identity(2)


def test_s0_prime_identity_up_to_rank_4():
    for n in (2, 3, 4):
        refl = affine_reflection(n, (1, 1) + (0,) * (n - 2), 1)
        assert evaluate_word(n, (0, 1, 0)) == refl


# -- affine action --------------------------------------------------------------


def test_act_examples():
    assert generator(2, 1).act((Fraction(1, 3), Fraction(1, 6))) == (Fraction(1, 6), Fraction(1, 3))
    assert generator(1, 0).act((Fraction(1, 4),)) == (Fraction(3, 4),)
    assert translation((1, 0)).act((Fraction(1, 3), Fraction(1, 6))) == (
        Fraction(4, 3), Fraction(1, 6))


def test_base_point_is_interior():
    for n in (1, 2, 3, 4):
        x = base_point(n)
        for f in simple_functionals(n):
            assert f(x) > 0


def test_descents_match_functional_signs():
    for n in (1, 2, 3):
        funcs = simple_functionals(n)
        x = base_point(n)
        for g in ball(n, 4):
            image = g.act(x)
            expected = {i for i, f in enumerate(funcs) if f(image) < 0}
            assert set(descents(g)) == expected


# -- descents, lengths, reduced words -------------------------------------------


def test_descent_examples():
    assert descents(identity(2)) == frozenset()
    assert descents(translation((1,))) == frozenset({0})
    assert descents(evaluate_word(2, (0, 1, 0))) == frozenset({0})


def test_reduced_word_examples():
    assert reduced_word(identity(3)) == ()
    assert reduced_word(translation((1,))) == (0, 1)
    assert reduced_word(evaluate_word(2, (0, 1, 0))) == (0, 1, 0)


def test_no_shorter_word_exists():
    # brute force over all words confirms minimality of the canonical ones
    table1 = words_by_element(1, 4)
    t1 = translation((1,))
    assert min(len(w) for w in table1[t1]) == 2
    table2 = words_by_element(2, 3)
    s0p = evaluate_word(2, (0, 1, 0))
    assert min(len(w) for w in table2[s0p]) == 3


def test_round_trip_on_balls():
    for n in (1, 2, 3):
        for g in ball(n, 6):
            word = reduced_word(g)
            assert evaluate_word(n, word) == g
            assert len(word) == length(g)


def test_exchange_condition():
    for n in (1, 2, 3):
        for g in ball(n, 5):
            for i in range(n + 1):
                assert abs(length(generator(n, i) * g) - length(g)) == 1


def test_weighted_length_examples():
    assert weighted_length(generator(1, 0)) == 0
    assert weighted_length(generator(1, 1)) == 1
    assert weighted_length(translation((1,))) == 1


def test_weighted_length_word_independent():
    # all reduced words of g carry the same number of nonzero letters
    for n in (1, 2):
        table = words_by_element(n, 5)
        for g, words in table.items():
            L = length(g)
            reduced = [w for w in words if len(w) == L]
            counts = {sum(1 for i in w if i != 0) for w in reduced}
            assert counts == {weighted_length(g)}


def test_braid_relations_in_group():
    for n in (2, 3, 4):
        e = identity(n)
        assert evaluate_word(n, (0, 1) * 4) == e
        for i in range(1, n - 1):
            assert evaluate_word(n, (i, i + 1) * 3) == e
        assert evaluate_word(n, (n - 1, n) * 4) == e
        for i in range(n + 1):
            for j in range(i + 2, n + 1):
                assert evaluate_word(n, (i, j) * 2) == e
    # rank one: infinite dihedral, no bounded relation
    for k in range(1, 9):
        assert evaluate_word(1, (0, 1) * k) != identity(1)


def test_affine_subgroup_parity():
    for n in (1, 2):
        for g in ball(n, 6):
            s0_count = sum(1 for i in reduced_word(g) if i == 0)
            assert in_affine_subgroup(g) == (s0_count % 2 == 0)
        for g in ball(n, 3):
            for h in ball(n, 3):
                assert in_affine_subgroup(g * h) == (
                    in_affine_subgroup(g) == in_affine_subgroup(h))


def test_translation_examples():
    assert translation((0, 0)) == identity(2)
    assert in_affine_subgroup(translation((1, 1)))
    assert not in_affine_subgroup(translation((1, 0)))


# -- parabolic factorization ----------------------------------------------------


def test_parabolic_factorize_examples():
    s1 = generator(1, 1)
    rep, tail = parabolic_factorize(s1, {1})
    assert rep == identity(1) and tail == s1
    g = generator(1, 0) * generator(1, 1)
    rep, tail = parabolic_factorize(g, {1})
    assert rep == generator(1, 0) and tail == s1


def test_parabolic_factorize_properties():
    for n in (1, 2):
        for J in (frozenset(range(1, n + 1)), frozenset(range(n))):
            members = set(parabolic_subgroup(n, J))
            for g in ball(n, 5):
                rep, tail = parabolic_factorize(g, J)
                assert rep * tail == g
                assert tail in members
                assert length(rep) + length(tail) == length(g)
                if g in members:
                    assert rep == identity(n)


def test_parabolic_subgroup_orders():
    assert len(parabolic_subgroup(2, frozenset({1, 2}))) == 8
    assert len(parabolic_subgroup(2, frozenset({0, 1}))) == 8
    assert len(parabolic_subgroup(3, frozenset({1, 2, 3}))) == 48


def test_parabolic_infinite_error():
    with pytest.raises(ValueError):
        parabolic_subgroup(2, frozenset({0, 1, 2}))


# -- balls ----------------------------------------------------------------------


def test_ball_sizes():
    assert ball(1, 0) == [identity(1)]
    assert len(ball(1, 3)) == 7
    # independent word-enumeration count at n=2, L=2
    assert len(words_by_element(2, 2)) == 9
    assert len(ball(2, 2)) == 9


def test_ball_matches_word_enumeration():
    for n in (1, 2):
        table = words_by_element(n, 4)
        short = {g for g in table if min(len(w) for w in table[g]) <= 4}
        assert set(ball(n, 4)) == short


def test_ball_deterministic_order():
    b = ball(2, 4)
    assert b == ball(2, 4)
    lengths = [length(g) for g in b]
    assert lengths == sorted(lengths)


# -- serialization ---------------------------------------------------------------


def test_text_round_trip():
    for g in ball(2, 4):
        assert element_from_text(element_to_text(g)) == g
    assert element_to_text(generator(2, 0)) == "perm=[-1,2];trans=[1,0]"


def test_json_round_trip():
    for g in ball(2, 3):
        assert element_from_json(element_to_json(g)) == g


def test_text_parse_errors():
    with pytest.raises(ValueError):
        element_from_text("perm=[1,2]")
    with pytest.raises(ValueError):
        element_from_text("perm=[1,1];trans=[0,0]")


# -- the type-D extension and folding --------------------------------------------


def test_sigma_examples():
    n = 2
    assert sigma(d_identity(n)) == d_identity(n)
    lam = (0,) * n + (1,)
    t = DExtElement(SignedPermutation.identity(n + 1), lam)
    assert sigma(t) == DExtElement(SignedPermutation.identity(n + 1), (0,) * n + (-1,))
    assert sigma(d_generator(n, n)) == d_generator(n, n + 1)


def test_fold_examples():
    n = 2
    assert fold(d_identity(n)) == identity(n)
    for i in range(n):
        assert fold(d_generator(n, i)) == generator(n, i)
    assert fold(d_generator(n, n) * d_generator(n, n + 1)) == generator(n, n)


def test_fold_requires_sigma_fixed():
    with pytest.raises(ValueError):
        fold(d_generator(2, 2))


def test_fold_matches_action_on_grid():
    # folded action agrees with the ambient action on E x {0}
    n = 2
    pts = [(Fraction(1, 5), Fraction(1, 7)), (Fraction(-2, 3), Fraction(3, 4))]
    for g in d_ball_sigma_fixed(n, 3):
        f = fold(g)
        for p in pts:
            ambient = g.act(p + (Fraction(0),))
            assert ambient[:n] == f.act(p)
            assert ambient[n] == 0


def test_folding_is_injective_homomorphism():
    n = 2
    b4 = d_ball_sigma_fixed(n, 4)
    assert all(is_sigma_fixed(g) for g in b4)
    images = {fold(g) for g in b4}
    assert len(images) == len(b4)
    b2 = d_ball_sigma_fixed(n, 2)
    for g in b2:
        for h in b2:
            assert fold(g * h) == fold(g) * fold(h)
    for i in range(n + 1):
        assert generator(n, i) in images


def test_d_weyl_membership():
    n = 2
    assert d_generator(n, 0).in_d_weyl_extension()
    assert all(g.in_d_weyl_extension() for g in d_ball_sigma_fixed(n, 3))
