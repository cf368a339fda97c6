import pytest

from arith_core.primes import (
    factor_integer, is_prime, is_squarefree, prime_segments, primes_in_range, simple_sieve,
)


def trial_division_is_prime(n):
    if n < 2:
        return False
    q = 2
    while q * q <= n:
        if n % q == 0:
            return False
        q += 1
    return True


@pytest.mark.parametrize('n, expected', [
    (13, True),
    (1, False),
    (2, True),
    (3215031751, False),
    (2 ** 61 - 1, True),
    (3825123056546413051, False),
])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division_below_5000():
    for n in range(1, 5000):
        assert is_prime(n) == trial_division_is_prime(n), n


def test_strong_pseudoprime_is_composite_by_oracle():
    assert not trial_division_is_prime(3215031751)
    assert factor_integer(3215031751) == {151: 1, 751: 1, 28351: 1}


def test_primes_in_range_examples():
    assert primes_in_range(1, 10) == [2, 3, 5, 7]
    assert primes_in_range(90, 100) == [97]
    assert primes_in_range(10, 10) == []


def test_prime_count_below_one_million():
    assert len(primes_in_range(1, 10 ** 6)) == 78498
    assert len(simple_sieve(10 ** 6 - 1)) == 78498


@pytest.mark.parametrize('segment_size', [7, 100, 1009])
def test_segmentation_does_not_change_the_primes(segment_size):
    expected = [n for n in range(3000, 9000) if trial_division_is_prime(n)]
    assert primes_in_range(3000, 9000, segment_size=segment_size) == expected


def test_segments_are_ascending_and_disjoint():
    seen = []
    for segment in prime_segments(2, 5000, 333):
        seen.extend(segment.tolist())
    assert seen == sorted(set(seen))
    assert seen == primes_in_range(2, 5000)


def test_primes_in_range_rejects_reversed_interval():
    with pytest.raises(ValueError):
        primes_in_range(10, 1)


@pytest.mark.parametrize('n, expected', [(1, True), (2, True), (7, True), (12, False), (30, True), (50, False)])
def test_is_squarefree(n, expected):
    assert is_squarefree(n) is expected


def test_factor_integer_falls_back_to_pollard_rho():
    n = 1000003 * 999983 * 999983
    assert factor_integer(n, trial_limit=10) == {999983: 2, 1000003: 1}


def test_factor_integer_of_one_is_empty():
    assert factor_integer(1) == {}
