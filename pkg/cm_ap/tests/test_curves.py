import pytest

from arith_core.primes import primes_in_range
from cm_ap.curves import CurveShort, ap_naive, cm_curve
from cubicspin.exceptions import BadInput, BadReduction, PreconditionViolated

E = CurveShort(-1, 0)


def count_points(curve, p):
    affine = sum(
        1 for x in range(p) for y in range(p)
        if (y * y - x ** 3 - curve.A * x - curve.B) % p == 0
    )
    return affine + 1


@pytest.mark.parametrize('p, expected', [(5, -2), (7, 0), (13, 6)])
def test_ap_naive_examples(p, expected):
    assert ap_naive(E, p) == expected


@pytest.mark.parametrize('curve', [E, CurveShort(2, 3), cm_curve(2), cm_curve(7)])
def test_ap_naive_matches_direct_count(curve):
    for p in primes_in_range(5, 200):
        if not curve.has_good_reduction(p):
            continue
        assert ap_naive(curve, p) == p + 1 - count_points(curve, p)


def test_hasse_bound():
    for p in primes_in_range(5, 5000):
        assert ap_naive(E, p) ** 2 <= 4 * p


def test_supersingular_primes_have_zero_trace():
    for p in primes_in_range(5, 2000):
        if p % 4 == 3:
            assert ap_naive(E, p) == 0


def test_bad_reduction():
    with pytest.raises(BadReduction):
        ap_naive(E, 3)
    with pytest.raises(BadReduction):
        ap_naive(CurveShort(1, 1), 31)


def test_point_count_cap():
    with pytest.raises(PreconditionViolated):
        ap_naive(E, 101, limit=100)


def test_from_j_invariant_has_that_invariant():
    for j in (8000, 255 ** 3, -3375, 54000):
        c = CurveShort.from_j_invariant(j)
        assert 1728 * 4 * c.A ** 3 == j * c.discriminant


def test_singular_and_special_models():
    with pytest.raises(BadInput):
        CurveShort(0, 0)
    with pytest.raises(BadInput):
        CurveShort.from_j_invariant(1728)
    with pytest.raises(BadInput):
        cm_curve(5)
