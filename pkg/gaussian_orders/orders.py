"""
Elements of the orders Z[sqrt(-D)], D = f^2 d, and the splitting p = kappa * conj(kappa).
"""
import logging
import math
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from arith_core.modular import sqrt_mod
from arith_core.primes import is_prime, is_squarefree
from cubicspin.exceptions import BadInput, NonSplit, InternalInconsistency

logger = logging.getLogger('cubicspin')


@dataclass(frozen=True)
class OrderElement:
    """a + b*sqrt(-D)."""
    a: int
    b: int
    D: int

    @property
    def norm(self) -> int:
        return self.a * self.a + self.D * self.b * self.b

    @property
    def trace(self) -> int:
        return 2 * self.a

    def conjugate(self) -> 'OrderElement':
        return OrderElement(self.a, -self.b, self.D)

    def __neg__(self) -> 'OrderElement':
        return OrderElement(-self.a, -self.b, self.D)

    def __mul__(self, other: 'OrderElement') -> 'OrderElement':
        self._same_order(other)
        return OrderElement(
            self.a * other.a - self.D * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.D,
        )

    def times_i(self) -> 'OrderElement':
        """i * (a + b i) = -b + a i; only defined in Z[i]."""
        if self.D != 1:
            raise BadInput(f"sqrt(-{self.D}) is not a unit")
        return OrderElement(-self.b, self.a, 1)

    def _same_order(self, other: 'OrderElement') -> None:
        if self.D != other.D:
            raise BadInput(f"elements of Z[sqrt(-{self.D})] and Z[sqrt(-{other.D})]")

    def __str__(self):
        root = 'i' if self.D == 1 else f"sqrt(-{self.D})"
        sign = '-' if self.b < 0 else '+'
        return f"{self.a}{sign}{abs(self.b)}{root}"


@dataclass(frozen=True)
class SplitResult:
    """p = kappa * conj(kappa) with kappa in the canonical quadrant."""
    p: int
    kappa: OrderElement

    @property
    def D(self) -> int:
        return self.kappa.D


def cornacchia(p: int, D: int) -> Optional[Tuple[int, int]]:
    """
    Positive (a, b) with a^2 + D b^2 = p, or None if p is not represented.

    For D = 1 the solution is normalized to a odd, b even.

    Args:
        p: Odd prime
        D: Positive integer not divisible by p

    Returns:
        Tuple (a, b), or None
    """
    if p == 2 or p % 2 == 0:
        raise BadInput(f"cornacchia needs an odd prime, got {p}")
    if D < 1:
        raise BadInput(f"D = {D} must be positive")
    if D % p == 0:
        raise BadInput(f"{p} divides D = {D}")
    if D >= p:
        return None
    r0 = sqrt_mod(-D, p)
    if r0 is None:
        return None
    # Euclid on (p, r) with p/2 < r < p, stopped at the first remainder below sqrt(p)
    r = r0 if 2 * r0 > p else p - r0
    x, y = p, r
    while y * y >= p:
        x, y = y, x % y
    rest = p - y * y
    if rest % D != 0:
        return None
    b = math.isqrt(rest // D)
    if b * b * D != rest or b == 0:
        return None
    a = y
    if D == 1 and a % 2 == 0:
        a, b = b, a
    return a, b


def split_prime(p: int, d: int, f: int = 1) -> SplitResult:
    """
    Factor p = kappa * conj(kappa) in the order Z[f sqrt(-d)].

    Raises NonSplit when p is not represented by a^2 + f^2 d b^2.
    """
    if d < 1 or not is_squarefree(d):
        raise BadInput(f"d = {d} must be a positive squarefree integer")
    if d == 3:
        raise BadInput("the field Q(sqrt(-3)) is excluded")
    if f < 1:
        raise BadInput(f"conductor f = {f} must be positive")
    if p < 3 or not is_prime(p):
        raise BadInput(f"{p} is not an odd prime")
    if math.gcd(p, 3 * d * f) != 1:
        raise BadInput(f"{p} divides 3*d*f = {3 * d * f}")
    D = f * f * d
    solution = cornacchia(p, D)
    if solution is None:
        raise NonSplit(f"{p} is not of the form a^2 + {D} b^2")
    a, b = solution
    kappa = OrderElement(a, b, D)
    if kappa.norm != p:
        raise InternalInconsistency(f"norm of {kappa} is {kappa.norm}, expected {p}")
    return SplitResult(p, kappa)


def conjugate(k: OrderElement) -> OrderElement:
    return k.conjugate()


def unit_orbit(k: OrderElement) -> FrozenSet[OrderElement]:
    """Associates of k: {±k}, and also {±ik} in Z[i]."""
    orbit = {k, -k}
    if k.D == 1:
        ik = k.times_i()
        orbit |= {ik, -ik}
    return frozenset(orbit)


def trace_set(k: OrderElement) -> FrozenSet[int]:
    """{u k + conj(u k)} over the units u of the order."""
    return frozenset(u.trace for u in unit_orbit(k))
