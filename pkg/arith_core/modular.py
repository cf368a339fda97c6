"""
Exact arithmetic in F_p: powers, square roots, roots of unity and power classes.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import NewType, Optional

from cubicspin.exceptions import (
    BadCongruence, InternalInconsistency, NotOneModThree, PreconditionViolated,
)

from .primes import is_prime

# A residue is an integer in [0, p); the modulus travels with the caller.
Residue = NewType('Residue', int)


@dataclass(frozen=True)
class CubeClass:
    """
    Value of a power residue symbol: zeta^k, or Zero when k is None.

    m is the degree of the symbol; it is 3 everywhere except for the
    higher-degree spin symbols.
    """
    k: Optional[int]
    m: int = 3

    def __post_init__(self):
        if self.k is not None and not 0 <= self.k < self.m:
            raise ValueError(f"class exponent {self.k} outside [0, {self.m})")

    @classmethod
    def zero(cls, m: int = 3) -> 'CubeClass':
        return cls(None, m)

    @property
    def is_zero(self) -> bool:
        return self.k is None

    @property
    def is_trivial(self) -> bool:
        return self.k == 0

    def __mul__(self, other: 'CubeClass') -> 'CubeClass':
        if self.m != other.m:
            raise ValueError(f"cannot multiply classes of degree {self.m} and {other.m}")
        if self.is_zero or other.is_zero:
            return CubeClass.zero(self.m)
        return CubeClass((self.k + other.k) % self.m, self.m)

    def __pow__(self, e: int) -> 'CubeClass':
        if self.is_zero:
            return CubeClass(0, self.m) if e == 0 else self
        return CubeClass(self.k * e % self.m, self.m)

    def conjugate(self) -> 'CubeClass':
        if self.is_zero:
            return self
        return CubeClass(-self.k % self.m, self.m)

    def __str__(self):
        return '0' if self.is_zero else f"zeta{self.m}^{self.k}"


def mod_pow(base: int, exp: int, p: int) -> Residue:
    """base^exp mod p by square-and-multiply; exp = 0 gives 1."""
    if p < 2:
        raise PreconditionViolated(f"modulus {p} < 2")
    if exp < 0:
        raise PreconditionViolated(f"negative exponent {exp}")
    return Residue(pow(base % p, exp, p))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=4096)
def least_nonresidue(p: int) -> int:
    """Least quadratic nonresidue mod the odd prime p."""
    if p < 3 or p % 2 == 0:
        raise PreconditionViolated(f"{p} has no quadratic nonresidue")
    n = 2
    while legendre(n, p) != -1:
        n += 1
    return n


def sqrt_mod(a: int, p: int) -> Optional[Residue]:
    """
    Least square root of a mod the odd prime p (Tonelli-Shanks).

    Returns None when a is a nonresidue; absence is a value, not an error.
    """
    a %= p
    if a == 0:
        return Residue(0)
    if p == 2:
        return Residue(a)
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        m = s
        c = pow(least_nonresidue(p), q, p)
        t = pow(a, q, p)
        r = pow(a, (q + 1) // 2, p)
        while t != 1:
            # least i with t^(2^i) = 1
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t = t * c % p
            r = r * b % p
    return Residue(min(r, p - r))


def _check_degree(p: int, m: int) -> None:
    if (p - 1) % m != 0:
        if m == 3:
            raise NotOneModThree(f"{p} is not 1 mod 3")
        raise BadCongruence(f"{p} is not 1 mod {m}")


@lru_cache(maxsize=65536)
def primitive_root_of_unity(p: int, m: int) -> Residue:
    """Least primitive m-th root of unity mod p, for prime m | p - 1."""
    if not is_prime(m):
        raise PreconditionViolated(f"root of unity degree {m} is not prime")
    _check_degree(p, m)
    e = (p - 1) // m
    g = 2
    while True:
        w = pow(g, e, p)
        if w != 1:
            break
        g += 1
    powers = [w]
    for _ in range(m - 2):
        powers.append(powers[-1] * w % p)
    return Residue(min(powers))


def primitive_cube_root(p: int) -> Residue:
    """Least omega != 1 with omega^3 = 1 mod p."""
    return primitive_root_of_unity(p, 3)


def power_class(x: int, p: int, m: int, omega: int) -> CubeClass:
    """The k with x^((p-1)/m) = omega^k mod p, or Zero if p | x."""
    _check_degree(p, m)
    x %= p
    if x == 0:
        return CubeClass.zero(m)
    t = pow(x, (p - 1) // m, p)
    w = 1
    for k in range(m):
        if t == w:
            return CubeClass(k, m)
        w = w * omega % p
    raise InternalInconsistency(
        f"{x}^(({p}-1)/{m}) = {t} is no power of {omega}; omega is not a primitive root of unity"
    )


def cube_class(x: int, p: int, omega: int) -> CubeClass:
    """Cubic residue class of x mod p relative to the cube root omega."""
    return power_class(x, p, 3, omega)
