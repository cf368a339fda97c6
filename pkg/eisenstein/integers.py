"""
Arithmetic in Z[w], w = zeta_3, w^2 = -1 - w.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from cubicspin.exceptions import DivisionByZero, NotCoprimeToThree


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*w."""
    a: int
    b: int

    @property
    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def conjugate(self) -> 'EisensteinInt':
        return EisensteinInt(self.a - self.b, -self.b)

    def __add__(self, other: 'EisensteinInt') -> 'EisensteinInt':
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: 'EisensteinInt') -> 'EisensteinInt':
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> 'EisensteinInt':
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: 'EisensteinInt') -> 'EisensteinInt':
        return e_mul(self, other)

    def __pow__(self, e: int) -> 'EisensteinInt':
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> 'EisensteinInt':
        return EisensteinInt(self.a * c, self.b * c)

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_unit(self) -> bool:
        return self.norm == 1

    def __str__(self):
        sign = '-' if self.b < 0 else '+'
        return f"{self.a}{sign}{abs(self.b)}w"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
RAMIFIED_PRIME = EisensteinInt(1, -1)

# Consecutive entries differ by the factor 1 + w, a rotation by 60 degrees.
UNITS = (
    EisensteinInt(1, 0), EisensteinInt(1, 1), EisensteinInt(0, 1),
    EisensteinInt(-1, 0), EisensteinInt(-1, -1), EisensteinInt(0, -1),
)


def e_norm(x: EisensteinInt) -> int:
    return x.norm


def e_mul(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    return EisensteinInt(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b)


def _round_div(u: int, n: int) -> int:
    """Nearest integer to u / n for n > 0, halves rounded up."""
    return (2 * u + n) // (2 * n)


def e_divrem(x: EisensteinInt, y: EisensteinInt) -> Tuple[EisensteinInt, EisensteinInt]:
    """
    Euclidean division: x = q y + r with norm(r) < norm(y).

    q rounds each coordinate of x * conj(y) / norm(y); the rounding error
    e1 + e2 w has |e1|, |e2| <= 1/2, so its norm is at most 3/4.
    """
    if y.is_zero:
        raise DivisionByZero(f"division of {x} by zero")
    n = y.norm
    num = x * y.conjugate()
    q = EisensteinInt(_round_div(num.a, n), _round_div(num.b, n))
    return q, x - q * y


def e_divexact(x: EisensteinInt, y: EisensteinInt) -> Optional[EisensteinInt]:
    """x / y if y divides x, else None."""
    q, r = e_divrem(x, y)
    return q if r.is_zero else None


def divides(y: EisensteinInt, x: EisensteinInt) -> bool:
    return e_divexact(x, y) is not None


def is_coprime_to_three(x: EisensteinInt) -> bool:
    return x.norm % 3 != 0


def primary_associate(x: EisensteinInt) -> EisensteinInt:
    """
    The unique associate u*x = 1 mod 3.

    The six units stay distinct mod 3, and they are exactly the units of
    Z[w]/3, so x mod 3 names the unit to divide by.
    """
    if not is_coprime_to_three(x):
        raise NotCoprimeToThree(f"{x} is divisible by 1 - w")
    for u in UNITS:
        y = u * x
        if y.a % 3 == 1 and y.b % 3 == 0:
            return y
    raise AssertionError(f"no primary associate for {x}")


def canonical_associate(x: EisensteinInt) -> EisensteinInt:
    """The associate with a > b >= 0 (one per nonzero orbit)."""
    if x.is_zero:
        return x
    for u in UNITS:
        y = u * x
        if y.a > y.b >= 0:
            return y
    raise AssertionError(f"no canonical associate for {x}")


def normalize(x: EisensteinInt) -> EisensteinInt:
    if x.is_zero:
        return x
    return primary_associate(x) if is_coprime_to_three(x) else canonical_associate(x)


def e_gcd(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    """Greatest common divisor, primary when coprime to 3."""
    while not y.is_zero:
        x, y = y, e_divrem(x, y)[1]
    return normalize(x)


def are_congruent(x: EisensteinInt, y: EisensteinInt, modulus: EisensteinInt) -> bool:
    """x = y mod (modulus); modulus 0 means equality."""
    diff = x - y
    if modulus.is_zero:
        return diff.is_zero
    return divides(modulus, diff)
