import pytest

from arith_core.modular import CubeClass
from arith_core.primes import primes_in_range
from cubicspin.exceptions import PreconditionViolated
from eisenstein.integers import EisensteinInt
from gaussian_orders.orders import unit_orbit
from spin.embedding import embed, embed_from_kappa
from spin.symbols import (
    galois_orbit, kappa_cube_mod_conjugate, orbit_sum, spin_power_symbol, spin_symbol,
)


def embeddings(d, f, hi, lo=5):
    for p in primes_in_range(lo, hi):
        try:
            yield embed(p, d, f)
        except PreconditionViolated:
            continue


def test_spin_symbol_examples():
    assert spin_symbol(embed(13, 1, 1)) == CubeClass(2)
    assert spin_symbol(embed(97, 1, 1)) == CubeClass(0)


def test_spin_symbol_is_class_of_twice_a():
    for e in embeddings(2, 1, 5000):
        p = e.p
        assert spin_symbol(e).is_trivial == (pow(2 * e.kappa.a, (p - 1) // 3, p) == 1)


@pytest.mark.parametrize('d, f', [(1, 1), (2, 1), (7, 1), (1, 3)])
def test_spin_symbol_is_independent_of_the_generator(d, f):
    for e in embeddings(d, f, 5000):
        k = spin_symbol(e)
        for u_kappa in unit_orbit(e.kappa):
            assert spin_symbol(embed_from_kappa(e.p, d, f, u_kappa)) == k


def test_galois_orbit_example():
    orbit = galois_orbit(embed(13, 1, 1))
    assert sorted(c.k for c in orbit) == [1, 1, 2, 2]
    assert orbit_sum(orbit) == EisensteinInt(-2, 0)


@pytest.mark.parametrize('d', [1, 2, 5, 7, 11])
def test_galois_orbit_law(d):
    for e in embeddings(d, 1, 3000):
        orbit = galois_orbit(e)
        k = spin_symbol(e)
        assert orbit[0] == k
        assert orbit[1] == k
        assert orbit[2] == k ** 2
        assert orbit[3] == k ** 2
        expected = EisensteinInt(4, 0) if k.is_trivial else EisensteinInt(-2, 0)
        assert orbit_sum(orbit) == expected


def test_orbit_sum_counts_exponents():
    classes = [CubeClass(0), CubeClass(1), CubeClass(1), CubeClass(2)]
    assert orbit_sum(classes) == EisensteinInt(0, 1)
    assert orbit_sum([]) == EisensteinInt(0, 0)


def test_kappa_cube_mod_conjugate_examples():
    assert not kappa_cube_mod_conjugate(embed(13, 1, 1))
    assert kappa_cube_mod_conjugate(embed(97, 1, 1))


@pytest.mark.parametrize('d', [1, 2, 7])
def test_kappa_cube_mod_conjugate_matches_spin(d):
    for e in embeddings(d, 1, 20_000):
        assert kappa_cube_mod_conjugate(e) == spin_symbol(e).is_trivial


def test_swapping_the_root_keeps_the_density():
    trivial = swapped = 0
    for e in embeddings(2, 1, 20_000):
        trivial += spin_symbol(e).is_trivial
        conj = embed_from_kappa(e.p, 2, 1, e.kappa.conjugate())
        swapped += spin_symbol(conj).is_trivial
    assert trivial == swapped


@pytest.mark.parametrize('m', [5, 7])
def test_spin_power_symbol_trivial_iff_twice_a_is_a_power(m):
    seen = 0
    for e in embeddings(1, 1, 20_000):
        p = e.p
        if p % m != 1:
            continue
        value = spin_power_symbol(e, m)
        assert value.m == m
        assert value.is_trivial == (pow(2 * e.kappa.a, (p - 1) // m, p) == 1)
        seen += 1
    assert seen > 20


def test_spin_power_symbol_of_degree_three_is_the_spin_symbol():
    e = embed(97, 1, 1)
    assert spin_power_symbol(e, 3) == spin_symbol(e)
