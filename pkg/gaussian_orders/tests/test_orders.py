import math

import pytest

from arith_core.primes import primes_in_range
from cubicspin.exceptions import BadInput, NonSplit
from gaussian_orders.orders import (
    OrderElement, conjugate, cornacchia, split_prime, trace_set, unit_orbit,
)


def represented(p, D):
    for b in range(1, math.isqrt(p // D) + 1):
        a2 = p - D * b * b
        a = math.isqrt(a2)
        if a > 0 and a * a == a2:
            return True
    return False


@pytest.mark.parametrize('p, D, expected', [
    (13, 1, (3, 2)),
    (11, 1, None),
    (29, 7, (1, 2)),
    (97, 1, (9, 4)),
])
def test_cornacchia_examples(p, D, expected):
    assert cornacchia(p, D) == expected


def test_cornacchia_rejects_degenerate_input():
    with pytest.raises(BadInput):
        cornacchia(2, 1)
    with pytest.raises(BadInput):
        cornacchia(7, 14)


@pytest.mark.parametrize('D', [1, 2, 5, 7, 11, 20])
def test_cornacchia_agrees_with_exhaustive_search(D):
    for p in primes_in_range(3, 5000):
        if D % p == 0:
            continue
        solution = cornacchia(p, D)
        assert (solution is not None) == represented(p, D), (p, D)
        if solution is not None:
            a, b = solution
            assert a > 0 and b > 0 and a * a + D * b * b == p


def test_split_prime_examples():
    assert split_prime(13, 1, 1).kappa == OrderElement(3, 2, 1)
    assert split_prime(97, 1, 1).kappa == OrderElement(9, 4, 1)


def test_thirteen_is_not_principal_for_d_two():
    assert not represented(13, 2)
    with pytest.raises(NonSplit):
        split_prime(13, 2, 1)


def test_split_prime_rejects_excluded_input():
    with pytest.raises(BadInput):
        split_prime(13, 3, 1)
    with pytest.raises(BadInput):
        split_prime(7, 7, 1)
    with pytest.raises(BadInput):
        split_prime(13, 4, 1)


def test_gaussian_splitting_is_one_mod_four_below_100000():
    for p in primes_in_range(5, 100_000):
        try:
            result = split_prime(p, 1, 1)
        except NonSplit:
            assert p % 4 == 3
            continue
        assert p % 4 == 1
        kappa = result.kappa
        assert kappa.norm == p and kappa.a % 2 == 1 and kappa.b % 2 == 0


def test_conductor_scales_the_form():
    kappa = split_prime(41, 1, 2).kappa
    assert kappa.D == 4
    assert kappa.a ** 2 + 4 * kappa.b ** 2 == 41


def test_conjugation():
    k = OrderElement(3, 2, 1)
    assert conjugate(k) == OrderElement(3, -2, 1)
    assert conjugate(conjugate(k)) == k
    assert k * conjugate(k) == OrderElement(13, 0, 1)


def test_unit_orbits():
    k = OrderElement(3, 2, 1)
    assert unit_orbit(k) == {
        OrderElement(3, 2, 1), OrderElement(-3, -2, 1),
        OrderElement(-2, 3, 1), OrderElement(2, -3, 1),
    }
    k2 = OrderElement(3, 1, 2)
    assert unit_orbit(k2) == {OrderElement(3, 1, 2), OrderElement(-3, -1, 2)}
    assert {u.norm for u in unit_orbit(k)} == {13}
    assert {u.norm for u in unit_orbit(k2)} == {11}


def test_trace_sets():
    assert trace_set(OrderElement(3, 2, 1)) == {6, -6, 4, -4}
    assert trace_set(OrderElement(3, 1, 2)) == {6, -6}


def test_display():
    assert str(OrderElement(3, 2, 1)) == '3+2i'
    assert str(OrderElement(3, -1, 2)) == '3-1sqrt(-2)'
