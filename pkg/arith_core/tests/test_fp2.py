import numpy as np
import pytest

from arith_core.fp2 import Fp2Element, fp2_pow
from arith_core.modular import least_nonresidue


def poly_mul_mod(u, v, n, p):
    """Multiply coefficient lists (low degree first) and reduce by s^2 - n."""
    prod = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            prod[i + j] += a * b
    while len(prod) > 2:
        top = prod.pop()
        prod[len(prod) - 2] += top * n
    return [c % p for c in prod]


def test_nonresidue_is_verified():
    for p in (5, 7, 11, 13, 101):
        assert Fp2Element.make(1, 1, p).has_valid_nonresidue()


def test_s_squared_is_n():
    s = Fp2Element(0, 1, 2, 5)
    assert s * s == Fp2Element(2, 0, 2, 5)
    assert fp2_pow(s, 2) == Fp2Element(2, 0, 2, 5)


def test_multiplication_matches_polynomial_model():
    rng = np.random.default_rng(7)
    for _ in range(10_000):
        p = int(rng.choice([5, 7, 11, 13, 17, 19, 23, 101, 1009]))
        n = least_nonresidue(p)
        x1, y1, x2, y2 = (int(v) for v in rng.integers(0, p, size=4))
        got = Fp2Element(x1, y1, n, p) * Fp2Element(x2, y2, n, p)
        want = poly_mul_mod([x1, y1], [x2, y2], n, p)
        assert [got.x, got.y] == want


@pytest.mark.parametrize('p', [5, 7, 11, 13])
def test_group_order(p):
    for x in range(p):
        for y in range(p):
            e = Fp2Element.make(x, y, p)
            if e.is_zero:
                continue
            assert fp2_pow(e, p * p - 1) == Fp2Element.one(p)


def test_zero_exponent_gives_one():
    assert fp2_pow(Fp2Element.make(3, 4, 7), 0) == Fp2Element.one(7)


def test_base_field_elements_are_cubes_in_the_quadratic_extension():
    p = 5
    e = Fp2Element.make(2, 0, p)
    direct = Fp2Element.one(p)
    for _ in range((p * p - 1) // 3):
        direct = direct * e
    assert direct == Fp2Element.one(p)
    assert fp2_pow(e, (p * p - 1) // 3) == Fp2Element.one(p)
