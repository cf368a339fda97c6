import numpy as np
import pytest

from cubicspin.exceptions import BadInput, DivisionByZero, NotCoprimeToThree
from eisenstein.factorization import factor_eisenstein, is_eisenstein_prime, split_prime_above
from eisenstein.integers import (
    OMEGA, ONE, UNITS, EisensteinInt, are_congruent, canonical_associate, divides,
    e_divrem, e_gcd, primary_associate,
)


def test_omega_is_a_primitive_cube_root_of_one():
    assert OMEGA ** 3 == ONE
    assert OMEGA * OMEGA + OMEGA + ONE == EisensteinInt(0, 0)


def test_norm_examples():
    assert EisensteinInt(3, 1).norm == 7
    assert EisensteinInt(2, 1).norm == 3
    assert EisensteinInt(5, 0).norm == 25


def test_norm_is_multiplicative():
    rng = np.random.default_rng(3)
    for _ in range(2000):
        a, b, c, d = (int(v) for v in rng.integers(-50, 51, size=4))
        x, y = EisensteinInt(a, b), EisensteinInt(c, d)
        assert (x * y).norm == x.norm * y.norm


def test_units_are_the_norm_one_elements():
    assert len(set(UNITS)) == 6
    found = {EisensteinInt(a, b) for a in range(-2, 3) for b in range(-2, 3) if EisensteinInt(a, b).norm == 1}
    assert found == set(UNITS)


def test_divrem_remainder_is_smaller():
    rng = np.random.default_rng(5)
    for _ in range(2000):
        a, b, c, d = (int(v) for v in rng.integers(-200, 201, size=4))
        y = EisensteinInt(c, d)
        if y.is_zero:
            continue
        x = EisensteinInt(a, b)
        q, r = e_divrem(x, y)
        assert q * y + r == x
        assert r.norm < y.norm


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        e_divrem(ONE, EisensteinInt(0, 0))


def test_gcd_examples():
    assert e_gcd(EisensteinInt(7, 0), EisensteinInt(3, 1)).norm == 7
    assert e_gcd(EisensteinInt(5, 0), EisensteinInt(3, 1)).is_unit


def test_gcd_divides_both_arguments():
    rng = np.random.default_rng(11)
    for _ in range(500):
        a, b, c, d = (int(v) for v in rng.integers(-100, 101, size=4))
        x, y = EisensteinInt(a, b), EisensteinInt(c, d)
        if x.is_zero and y.is_zero:
            continue
        g = e_gcd(x, y)
        assert divides(g, x) and divides(g, y)


def test_primary_associate_is_unique_and_idempotent():
    for a in range(-20, 21):
        for b in range(-20, 21):
            x = EisensteinInt(a, b)
            if x.norm % 3 == 0:
                continue
            p = primary_associate(x)
            assert p.a % 3 == 1 and p.b % 3 == 0
            assert primary_associate(p) == p
            primaries = [u * x for u in UNITS if (u * x).a % 3 == 1 and (u * x).b % 3 == 0]
            assert primaries == [p]


def test_primary_associate_needs_coprimality_to_three():
    with pytest.raises(NotCoprimeToThree):
        primary_associate(EisensteinInt(3, 0))


def test_canonical_associate_picks_one_per_orbit():
    x = EisensteinInt(2, 7)
    c = canonical_associate(x)
    assert c.a > c.b >= 0
    assert all(canonical_associate(u * x) == c for u in UNITS)


def test_congruence():
    assert are_congruent(EisensteinInt(10, 4), EisensteinInt(1, 1), EisensteinInt(3, 0))
    assert not are_congruent(EisensteinInt(10, 4), EisensteinInt(1, 0), EisensteinInt(3, 0))
    assert are_congruent(ONE, ONE, EisensteinInt(0, 0))


def test_split_prime_above_has_prime_norm():
    for q in (7, 13, 19, 31, 37, 43, 97, 1009):
        pi = split_prime_above(q)
        assert pi.norm == q
        assert pi.a % 3 == 1 and pi.b % 3 == 0


def test_factorization_reconstructs():
    rng = np.random.default_rng(17)
    for _ in range(300):
        a, b = (int(v) for v in rng.integers(-400, 401, size=2))
        x = EisensteinInt(a, b)
        if x.is_zero:
            continue
        f = factor_eisenstein(x)
        assert f.reconstruct() == x
        assert f.unit.is_unit
        for prime, exponent in f.factors:
            assert exponent >= 1
            assert is_eisenstein_prime(prime)


def test_factorization_of_small_elements():
    f = factor_eisenstein(EisensteinInt(2, 0))
    assert f.factors == ((EisensteinInt(2, 0), 1),)
    f = factor_eisenstein(EisensteinInt(3, 0))
    assert f.factors == ((EisensteinInt(1, -1), 2),)
    assert not is_eisenstein_prime(EisensteinInt(7, 0))
    assert is_eisenstein_prime(EisensteinInt(3, 1))


def test_factor_zero():
    with pytest.raises(BadInput):
        factor_eisenstein(EisensteinInt(0, 0))
