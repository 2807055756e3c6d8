import random
from fractions import Fraction

import pytest

from ctilde.laurent import ONE, Q, LaurentMatrix, LaurentPoly, _rational_rank


def test_basic_identities():
    q_minus_1 = Q + LaurentPoly.from_int(-1)
    assert q_minus_1 + ONE == Q
    assert q_minus_1 * (Q + ONE) == LaurentPoly({2: 1, 0: -1})
    assert LaurentPoly.q_power(-1) * Q == ONE


def test_zero_handling():
    assert LaurentPoly({3: 0}).is_zero()
    assert (Q - Q).is_zero()
    assert not Q.is_zero()
    assert LaurentPoly.zero() + Q == Q


def _random_poly(rng):
    return LaurentPoly({rng.randint(-4, 4): rng.randint(-5, 5) for _ in range(rng.randint(0, 4))})


def test_ring_axioms_randomized():
    rng = random.Random(12345)
    for _ in range(10_000):
        a, b, c = _random_poly(rng), _random_poly(rng), _random_poly(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a * ONE == a and a + LaurentPoly.zero() == a


def test_eval_int():
    assert LaurentPoly({2: 1, 0: -1}).eval_int(3) == 8
    assert LaurentPoly.q_power(-1).eval_int(2) == Fraction(1, 2)
    assert LaurentPoly.zero().eval_int(5) == 0
    with pytest.raises(ZeroDivisionError):
        LaurentPoly.q_power(-1).eval_int(0)


def test_pretty_and_json_round_trip():
    p = LaurentPoly({2: 1, 0: -1, -1: 3})
    assert p.pretty() == "q^2 - 1 + 3*q^-1"
    assert LaurentPoly.zero().pretty() == "0"
    assert LaurentPoly({1: -1}).pretty() == "-q"
    assert LaurentPoly.from_json(p.to_json()) == p


def test_as_signed_q_power():
    assert Q.as_signed_q_power() == (1, 1)
    assert LaurentPoly({-3: -1}).as_signed_q_power() == (-1, -3)
    assert LaurentPoly({0: 2}).as_signed_q_power() is None
    assert (Q + ONE).as_signed_q_power() is None


def test_rank_examples():
    assert LaurentMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).rank() == 3
    assert LaurentMatrix([[Q, Q * Q], [ONE, Q]]).rank() == 1
    assert LaurentMatrix([[LaurentPoly.from_int(-1), Q], [ONE, ONE]]).rank() == 2


def _random_matrix(rng, rows, cols):
    return [[_random_poly(rng) for _ in range(cols)] for _ in range(rows)]


def test_rank_invariances():
    rng = random.Random(999)
    for _ in range(25):
        rows = _random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        r = LaurentMatrix(rows).rank()
        swapped = list(rows)
        if len(swapped) > 1:
            swapped[0], swapped[-1] = swapped[-1], swapped[0]
        assert LaurentMatrix(swapped).rank() == r
        scaled = [[x.shift(3) for x in rows[0]]] + rows[1:]
        assert LaurentMatrix(scaled).rank() == r


def test_rank_dominates_evaluation():
    rng = random.Random(4242)
    for _ in range(25):
        rows = _random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        r = LaurentMatrix(rows).rank()
        numeric = [[x.eval_int(7) for x in row] for row in rows]
        assert r >= _rational_rank(numeric)
