"""
Degree-1 primes of M = Q(sqrt(-D), zeta_3) realized as homomorphisms into F_p.

A homomorphism Z[sqrt(-D), zeta_3] -> F_p is fixed by the image r of sqrt(-D)
and the image omega of zeta_3. The prime it represents lies above (kappa)
exactly when it kills kappa.
"""
import logging
import math
from dataclasses import dataclass

from arith_core.modular import primitive_cube_root, sqrt_mod
from arith_core.primes import is_prime
from cubicspin.exceptions import (
    BadCongruence, BadInput, InternalInconsistency, NoRoot, NotOneModThree,
)
from gaussian_orders.orders import OrderElement, split_prime

logger = logging.getLogger('cubicspin')


@dataclass(frozen=True)
class SpinEmbedding:
    """A degree-1 prime of M above (kappa), as the homomorphism sqrt(-D) -> r, zeta_3 -> omega."""
    p: int
    d: int
    f: int
    kappa: OrderElement
    r: int
    omega: int

    @property
    def D(self) -> int:
        return self.f * self.f * self.d

    def image(self, x: OrderElement) -> int:
        """Image of an element of Z[sqrt(-D)] in F_p."""
        return (x.a + x.b * self.r) % self.p

    def conjugate_image(self, x: OrderElement) -> int:
        """Image of conj(x), i.e. of x under the homomorphism through the prime above conj(kappa)."""
        return (x.a - x.b * self.r) % self.p

    def check(self) -> None:
        p = self.p
        if (self.r * self.r + self.D) % p != 0:
            raise InternalInconsistency(f"{self.r}^2 != -{self.D} mod {p}")
        if self.image(self.kappa) != 0:
            raise InternalInconsistency(f"r = {self.r} does not kill {self.kappa} mod {p}")
        if (self.omega * self.omega + self.omega + 1) % p != 0:
            raise InternalInconsistency(f"{self.omega} is not a primitive cube root of unity mod {p}")


def _check_prime(p: int, d: int, f: int) -> None:
    if p < 5 or not is_prime(p):
        raise BadInput(f"{p} is not a prime >= 5")
    if math.gcd(p, 6 * d * f) != 1:
        raise BadInput(f"{p} divides 6*d*f = {6 * d * f}")


def _check_congruences(p: int, d: int) -> None:
    if p % 3 != 1:
        raise NotOneModThree(f"{p} is not 1 mod 3")
    if d == 1 and p % 12 != 1:
        raise BadCongruence(f"{p} is not 1 mod 12")


def embed_from_kappa(p: int, d: int, f: int, kappa: OrderElement) -> SpinEmbedding:
    """The embedding above (kappa) for any generator kappa of norm p."""
    _check_prime(p, d, f)
    D = f * f * d
    if kappa.D != D or kappa.norm != p:
        raise BadInput(f"{kappa} is not an element of norm {p} in Z[sqrt(-{D})]")
    _check_congruences(p, d)
    # a + b r = 0 forces r = -a/b, and a^2 + D b^2 = p makes it a root of x^2 + D
    r = -kappa.a * pow(kappa.b, -1, p) % p
    e = SpinEmbedding(p, d, f, kappa, r, primitive_cube_root(p))
    e.check()
    return e


def embed(p: int, d: int, f: int = 1) -> SpinEmbedding:
    """
    The canonical embedding of (p, d, f).

    Args:
        p: Prime, coprime to 6*d*f, 1 mod 3 (1 mod 12 when d = 1)
        d: Squarefree positive integer other than 3
        f: Conductor of the order Z[f sqrt(-d)]

    Returns:
        SpinEmbedding with kappa from Cornacchia, r the root of x^2 + D killing
        kappa and omega the least primitive cube root of unity

    Raises:
        NonSplit: p is not a^2 + D b^2
        NoRoot: -D is not a square mod p
    """
    _check_prime(p, d, f)
    kappa = split_prime(p, d, f).kappa
    _check_congruences(p, d)
    D = f * f * d
    root = sqrt_mod(-D % p, p)
    if root is None:
        raise NoRoot(f"-{D} is not a square mod {p}")
    for r in (root, p - root):
        if (kappa.a + kappa.b * r) % p == 0:
            e = SpinEmbedding(p, d, f, kappa, r, primitive_cube_root(p))
            e.check()
            return e
    raise InternalInconsistency(f"neither root of x^2 + {D} mod {p} kills {kappa}")
