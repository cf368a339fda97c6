import pytest

from arith_core.modular import (
    CubeClass, cube_class, least_nonresidue, legendre, mod_pow, power_class,
    primitive_cube_root, primitive_root_of_unity, sqrt_mod,
)
from arith_core.primes import primes_in_range
from cubicspin.exceptions import BadCongruence, NotOneModThree, PreconditionViolated


def test_mod_pow_examples():
    assert mod_pow(6, 4, 13) == 9
    assert mod_pow(2, 8, 5) == 1
    assert mod_pow(123, 0, 7) == 1


def test_mod_pow_rejects_bad_modulus():
    with pytest.raises(PreconditionViolated):
        mod_pow(2, 3, 1)


def test_sqrt_mod_examples():
    assert sqrt_mod(12, 13) == 5
    assert sqrt_mod(0, 13) == 0
    assert sqrt_mod(2, 5) is None


@pytest.mark.parametrize('p', [3, 5, 7, 13, 17, 41, 97, 113, 257, 65537])
def test_sqrt_mod_returns_least_root(p):
    for a in range(p):
        r = sqrt_mod(a, p)
        if r is None:
            assert legendre(a, p) == -1
            continue
        assert r * r % p == a
        assert r <= p - r


def test_least_nonresidue():
    assert least_nonresidue(5) == 2
    assert least_nonresidue(7) == 3
    assert least_nonresidue(17) == 3


def test_primitive_cube_root_examples():
    assert primitive_cube_root(13) == 3
    assert primitive_cube_root(7) == 2
    with pytest.raises(NotOneModThree):
        primitive_cube_root(5)


def test_primitive_root_of_unity_is_least_of_its_order():
    for p in (11, 31, 41, 61, 71):
        w = primitive_root_of_unity(p, 5)
        roots = [x for x in range(2, p) if pow(x, 5, p) == 1]
        assert w == min(roots)
    with pytest.raises(BadCongruence):
        primitive_root_of_unity(13, 5)


def test_cube_class_examples():
    assert cube_class(6, 13, 3) == CubeClass(2)
    assert cube_class(1, 97, primitive_cube_root(97)) == CubeClass(0)
    assert cube_class(8, 97, primitive_cube_root(97)) == CubeClass(0)
    assert cube_class(26, 13, 3).is_zero


@pytest.mark.parametrize('p', [13, 31])
def test_cube_class_is_multiplicative(p):
    w = primitive_cube_root(p)
    for x in range(1, p):
        for y in range(1, p):
            assert cube_class(x * y, p, w) == cube_class(x, p, w) * cube_class(y, p, w)


def test_trivial_class_iff_cube_up_to_1000():
    for p in primes_in_range(7, 1000):
        if p % 3 != 1:
            continue
        w = primitive_cube_root(p)
        cubes = {pow(x, 3, p) for x in range(1, p)}
        for x in range(1, p):
            assert cube_class(x, p, w).is_trivial == (x in cubes)


def test_power_class_degree_five_matches_fifth_powers():
    p = 31
    w = primitive_root_of_unity(p, 5)
    fifth_powers = {pow(x, 5, p) for x in range(1, p)}
    for x in range(1, p):
        assert power_class(x, p, 5, w).is_trivial == (x in fifth_powers)


def test_cube_class_with_fake_root_is_inconsistent():
    from cubicspin.exceptions import InternalInconsistency
    with pytest.raises(InternalInconsistency):
        cube_class(2, 13, 5)


def test_class_algebra():
    assert CubeClass(2) * CubeClass(2) == CubeClass(1)
    assert CubeClass(1) ** 3 == CubeClass(0)
    assert CubeClass(1).conjugate() == CubeClass(2)
    assert (CubeClass.zero() * CubeClass(1)).is_zero
    with pytest.raises(ValueError):
        CubeClass(3)
