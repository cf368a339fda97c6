"""
The spin symbol [P] = (sigma(kappa) / P)_3 and its Galois orbit.
"""
import logging
from collections import Counter
from typing import Iterable, Tuple

from arith_core.modular import CubeClass, cube_class, power_class, primitive_root_of_unity
from cubicspin.exceptions import InternalInconsistency
from eisenstein.integers import EisensteinInt

from .embedding import SpinEmbedding

logger = logging.getLogger('cubicspin')

# A spin value is a nonzero cube class.
SpinValue = CubeClass


def spin_symbol(e: SpinEmbedding) -> SpinValue:
    """Cubic class of conj(kappa) at the prime above (kappa); a - b r = 2a mod p."""
    value = cube_class(e.conjugate_image(e.kappa), e.p, e.omega)
    if value.is_zero:
        raise InternalInconsistency(f"spin symbol vanished at p = {e.p}, kappa = {e.kappa}")
    return value


def spin_power_symbol(e: SpinEmbedding, m: int = 3) -> CubeClass:
    """Degree-m spin symbol, zeta_m -> least primitive m-th root of unity mod p."""
    if m == 3:
        return spin_symbol(e)
    zeta = primitive_root_of_unity(e.p, m)
    value = power_class(e.conjugate_image(e.kappa), e.p, m, zeta)
    if value.is_zero:
        raise InternalInconsistency(f"degree-{m} spin symbol vanished at p = {e.p}")
    return value


def _orbit_homomorphisms(e: SpinEmbedding) -> Tuple[Tuple[int, int], ...]:
    p, r, w = e.p, e.r, e.omega
    w2 = w * w % p
    # identity, sigma (sqrt(-D) -> -sqrt(-D)), tau (zeta_3 -> zeta_3^2), sigma tau
    return (r, w), (p - r, w), (r, w2), (p - r, w2)


def galois_orbit(e: SpinEmbedding) -> Tuple[SpinValue, ...]:
    """
    [rho P] for rho in (1, sigma, tau, sigma tau).

    Each conjugate prime is evaluated through its own homomorphism against its
    own generator: kappa when the homomorphism kills kappa, conj(kappa) otherwise.
    The symbol is the class of the conjugate of that generator.
    """
    p, kappa = e.p, e.kappa
    values = []
    for r, w in _orbit_homomorphisms(e):
        kills_kappa = (kappa.a + kappa.b * r) % p == 0
        sign = -1 if kills_kappa else 1
        values.append(cube_class(kappa.a + sign * kappa.b * r, p, w))
    ks = sorted(v.k for v in values)
    k = values[0].k
    if ks != sorted([k, k, -k % 3, -k % 3]):
        raise InternalInconsistency(f"Galois orbit {ks} at p = {p} is not {{k, k, -k, -k}}")
    return tuple(values)


def orbit_sum(classes: Iterable[CubeClass]) -> EisensteinInt:
    """Sum of zeta_3^k over the classes, as A + B zeta_3."""
    counts = Counter()
    for c in classes:
        if c.is_zero:
            raise InternalInconsistency("zero class in an orbit sum")
        counts[c.k] += 1
    # zeta^2 = -1 - zeta
    return EisensteinInt(counts[0] - counts[2], counts[1] - counts[2])


def kappa_cube_mod_conjugate(e: SpinEmbedding) -> bool:
    """Whether kappa is a cube modulo the prime above conj(kappa) (sqrt(-D) -> -r)."""
    p = e.p
    image = (e.kappa.a + e.kappa.b * (p - e.r)) % p
    return pow(image, (p - 1) // 3, p) == 1
