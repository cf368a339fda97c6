"""
Field-lowering identities: cubic symbols in M = K(zeta_3) at primes above a
prime of a quadratic subfield, against symbols computed in that subfield.

The M side is evaluated on explicit residue maps (image of zeta_3, image of
sqrt(-D)) and never goes through cubic_symbol.
"""
import logging
import math
from typing import List, Tuple

from arith_core.fp2 import Fp2Element, fp2_pow
from arith_core.modular import (
    CubeClass, cube_class, least_nonresidue, legendre, primitive_cube_root, sqrt_mod,
)
from arith_core.primes import is_prime
from cubicspin.exceptions import InternalInconsistency, PreconditionViolated
from eisenstein.factorization import split_prime_above
from eisenstein.integers import EisensteinInt
from eisenstein.symbols import cubic_symbol
from gaussian_orders.orders import OrderElement

logger = logging.getLogger('cubicspin')


def _check_prime(p: int, d: int, f: int) -> int:
    if p < 5 or not is_prime(p):
        raise PreconditionViolated(f"{p} is not a prime >= 5")
    if d < 1 or f < 1 or math.gcd(p, 6 * d * f) != 1:
        raise PreconditionViolated(f"{p} must be coprime to 6*d*f with d, f >= 1")
    return f * f * d


def _check_eisenstein_input(p: int, d: int, f: int, alpha: EisensteinInt, split: bool) -> int:
    D = _check_prime(p, d, f)
    if p % 3 != 1:
        raise PreconditionViolated(f"{p} is not 1 mod 3")
    if split and legendre(-D, p) != 1:
        raise PreconditionViolated(f"-{D} is not a square mod {p}")
    if not split and legendre(-D, p) != -1:
        raise PreconditionViolated(f"-{D} is a square mod {p}")
    if alpha.norm % p == 0:
        raise PreconditionViolated(f"{alpha} is not coprime to {p}")
    return D


def _zeta_image_killing(pi: EisensteinInt, p: int) -> int:
    """The cube root of unity w mod p with pi.a + pi.b * w = 0."""
    c = primitive_cube_root(p)
    roots = [w for w in (c, c * c % p) if (pi.a + pi.b * w) % p == 0]
    if len(roots) != 1:
        raise InternalInconsistency(f"{pi} does not lie above {p} through a unique cube root")
    return roots[0]


def split_residue_maps(p: int, D: int, pi: EisensteinInt) -> List[Tuple[int, int]]:
    """The two degree-1 primes of M above pi, as (image of zeta_3, image of sqrt(-D))."""
    w = _zeta_image_killing(pi, p)
    r = sqrt_mod(-D, p)
    if r is None:
        raise PreconditionViolated(f"-{D} is not a square mod {p}")
    return [(w, r), (w, -r % p)]


def inert_residue_map(p: int, D: int, pi: EisensteinInt) -> Tuple[Fp2Element, Fp2Element]:
    """The prime of M above pi with residue field F_p^2, as (image of zeta_3, image of sqrt(-D))."""
    w = _zeta_image_killing(pi, p)
    n = least_nonresidue(p)
    # -D and n are both nonresidues, so sqrt(-D) = t*s with t^2 = -D/n
    t = sqrt_mod(-D * pow(n, -1, p) % p, p)
    if t is None:
        raise PreconditionViolated(f"-{D} is a square mod {p}")
    root = Fp2Element(0, t, n, p)
    if root * root != Fp2Element.make(-D, 0, p):
        raise InternalInconsistency(f"{root} is not a square root of -{D} in F_{p}^2")
    return Fp2Element.make(w, 0, p), root


def _fp_class(t: int, w: int, p: int) -> CubeClass:
    """The k with t = w^k mod p."""
    for k in range(3):
        if t == pow(w, k, p):
            return CubeClass(k)
    raise InternalInconsistency(f"{t} is not a power of {w} mod {p}")


def _fp2_class(x: Fp2Element, w: Fp2Element) -> CubeClass:
    """The k with x = w^k in F_p^2."""
    power = Fp2Element.one(x.p)
    for k in range(3):
        if x == power:
            return CubeClass(k)
        power = power * w
    raise InternalInconsistency(f"{x} is not a power of {w}")


def lowering_split_check(p: int, d: int, alpha: EisensteinInt, f: int = 1) -> bool:
    """
    Product of the symbols of alpha at the two primes of M above pi against
    (alpha/pi)_3 squared.

    pi is the primary prime of Z[w] above p, split in M because -D is a square
    mod p. At each prime of M, alpha^((p-1)/3) is read against that prime's
    own image of zeta_3.
    """
    D = _check_eisenstein_input(p, d, f, alpha, split=True)
    pi = split_prime_above(p)
    total = CubeClass(0)
    for w, _ in split_residue_maps(p, D, pi):
        x = (alpha.a + alpha.b * w) % p
        total = total * _fp_class(pow(x, (p - 1) // 3, p), w, p)
    expected = cubic_symbol(alpha, pi) ** 2
    if total != expected:
        logger.warning(f"split lowering fails at p = {p}, D = {D}, alpha = {alpha}: {total} != {expected}")
    return total == expected


def lowering_inert_check(p: int, d: int, alpha: EisensteinInt, f: int = 1) -> bool:
    """
    alpha^((p^2-1)/3) in the residue field F_p^2 of the prime of M above pi
    against (alpha/pi)_3 squared, for pi of norm p inert in M.
    """
    D = _check_eisenstein_input(p, d, f, alpha, split=False)
    pi = split_prime_above(p)
    w, _ = inert_residue_map(p, D, pi)
    image = Fp2Element.make(alpha.a, 0, p) + w.scale(alpha.b % p)
    upstairs = _fp2_class(fp2_pow(image, (p * p - 1) // 3), w)
    expected = cubic_symbol(alpha, pi) ** 2
    if upstairs != expected:
        logger.warning(f"inert lowering fails at p = {p}, D = {D}, alpha = {alpha}: {upstairs} != {expected}")
    return upstairs == expected


def lowering_nonfixing_check(p: int, d: int, f: int, alpha: OrderElement) -> bool:
    """
    Over K = Q(sqrt(-D)) the generator of M/K moves zeta_3: the symbols of alpha
    at the two primes of M above a degree-1 prime q of K multiply to 1.
    """
    D = _check_prime(p, d, f)
    if alpha.D != D:
        raise PreconditionViolated(f"{alpha} is not in Z[sqrt(-{D})]")
    if p % 3 != 1:
        raise PreconditionViolated(f"{p} is not 1 mod 3")
    r = sqrt_mod(-D % p, p)
    if r is None:
        raise PreconditionViolated(f"{p} does not split in Q(sqrt(-{D}))")
    x = (alpha.a + alpha.b * r) % p
    if x == 0:
        raise PreconditionViolated(f"{alpha} lies in the prime of Q(sqrt(-{D})) above {p}")
    w = primitive_cube_root(p)
    product = cube_class(x, p, w) * cube_class(x, p, w * w % p)
    return product.is_trivial


def lowering_inert_trivial_check(p: int, d: int, f: int, alpha: OrderElement) -> bool:
    """
    For p = 2 mod 3 split in K the primes of K above p stay inert in M, and
    alpha^((p^2-1)/3) = 1 in their residue field F_p^2.
    """
    D = _check_prime(p, d, f)
    if alpha.D != D:
        raise PreconditionViolated(f"{alpha} is not in Z[sqrt(-{D})]")
    if p % 3 != 2:
        raise PreconditionViolated(f"{p} is not 2 mod 3")
    r = sqrt_mod(-D % p, p)
    if r is None:
        raise PreconditionViolated(f"{p} does not split in Q(sqrt(-{D}))")
    x = (alpha.a + alpha.b * r) % p
    if x == 0:
        raise PreconditionViolated(f"{alpha} lies in the prime of Q(sqrt(-{D})) above {p}")
    return fp2_pow(Fp2Element.make(x, 0, p), (p * p - 1) // 3) == Fp2Element.one(p)
