import random
from math import gcd

import pytest

from tduality.abelian import FgAbGroup, IntMatrix
from tduality.rep_ring_k import (
    RepRingElement,
    borel_k_of_dual,
    borel_k_via_mv,
    char_multiplication_matrix,
    k_untwisted_free_quotient,
    rep_multiply,
)

Z = FgAbGroup.free(1)


def test_multiply_unit():
    rng = random.Random(7)
    for n in (1, 2, 5):
        one = RepRingElement.one(n)
        b = RepRingElement(n, tuple(rng.randint(-5, 5) for _ in range(n)))
        assert rep_multiply(one, b) == b


def test_multiply_involution_order_two():
    t = RepRingElement.line_class(2, 1)
    assert rep_multiply(t, t) == RepRingElement.one(2)


def test_multiply_worked_cubic():
    a = RepRingElement(3, (1, 1, 0))
    b = RepRingElement(3, (1, 0, 1))
    assert rep_multiply(a, b) == RepRingElement(3, (2, 1, 1))


def test_multiply_rejects_mismatched_orders():
    with pytest.raises(ValueError):
        rep_multiply(RepRingElement.one(2), RepRingElement.one(3))


def test_ring_laws_randomized():
    rng = random.Random(20260811)
    for _ in range(60):
        n = rng.randint(1, 8)
        a, b, c = (
            RepRingElement(n, tuple(rng.randint(-5, 5) for _ in range(n))) for _ in range(3)
        )
        assert rep_multiply(a, b) == rep_multiply(b, a)
        assert rep_multiply(rep_multiply(a, b), c) == rep_multiply(a, rep_multiply(b, c))
        assert rep_multiply(RepRingElement.one(n), a) == a


def matrix_power(m: IntMatrix, k: int) -> IntMatrix:
    out = IntMatrix.identity(m.rows)
    for _ in range(k):
        out = out.mul(m)
    return out


def test_char_matrix_identity_shift():
    assert char_multiplication_matrix(5, 0).entries == IntMatrix.identity(5).entries


def test_char_matrix_single_shift():
    assert char_multiplication_matrix(3, 1).entries == ((0, 0, 1), (1, 0, 0), (0, 1, 0))


def test_char_matrix_double_shift_squares_to_identity():
    m = char_multiplication_matrix(4, 2)
    assert m.mul(m).entries == IntMatrix.identity(4).entries


def test_char_matrix_is_permutation_of_expected_order():
    for n in range(1, 9):
        for q in range(n):
            m = char_multiplication_matrix(n, q)
            assert all(sum(row) == 1 for row in m.entries)
            assert all(sum(col) == 1 for col in zip(*m.entries))
            order = n // gcd(n, q)
            assert matrix_power(m, order).entries == IntMatrix.identity(n).entries
            for k in range(1, order):
                assert matrix_power(m, k).entries != IntMatrix.identity(n).entries


@pytest.mark.parametrize(
    "n,q,expected",
    [
        (2, 1, (Z, Z)),
        (12, 5, (Z, Z)),
        (4, 2, (FgAbGroup.free(2), FgAbGroup.free(2))),
        (1, 0, (Z, Z)),
    ],
)
def test_borel_k_worked_values(n, q, expected):
    assert borel_k_of_dual(n, q) == expected


def test_borel_k_counts_orbits():
    # one copy of Z in each degree per orbit of the shift
    for n in range(1, 13):
        for q in range(n):
            g = gcd(n, q)
            assert borel_k_of_dual(n, q) == (FgAbGroup.free(g), FgAbGroup.free(g))


@pytest.mark.parametrize("n,q", [(2, 1), (3, 1), (4, 2)])
def test_mv_route_worked_values(n, q):
    assert borel_k_via_mv(n, q) == borel_k_of_dual(n, q)


def test_mv_route_matches_operator_route():
    for n in range(1, 13):
        for q in range(n):
            assert borel_k_via_mv(n, q) == borel_k_of_dual(n, q)


def test_untwisted_free_quotient():
    assert k_untwisted_free_quotient() == (Z, Z)
    for n in range(1, 21):
        for q in range(n):
            if gcd(q, n) == 1:
                assert borel_k_of_dual(n, q) == k_untwisted_free_quotient()
