"""
Arithmetic in F_{p^2} = F_p[s] / (s^2 - n) with n a quadratic nonresidue.
"""
from dataclasses import dataclass

from cubicspin.exceptions import PreconditionViolated

from .modular import least_nonresidue, legendre


@dataclass(frozen=True)
class Fp2Element:
    """x + y*s with s^2 = n."""
    x: int
    y: int
    n: int
    p: int

    def __post_init__(self):
        if not (0 <= self.x < self.p and 0 <= self.y < self.p):
            raise PreconditionViolated(f"coordinates ({self.x}, {self.y}) not reduced mod {self.p}")

    @classmethod
    def make(cls, x: int, y: int, p: int) -> 'Fp2Element':
        """Element of the canonical model, s^2 = least nonresidue mod p."""
        return cls(x % p, y % p, least_nonresidue(p), p)

    @classmethod
    def one(cls, p: int) -> 'Fp2Element':
        return cls.make(1, 0, p)

    def has_valid_nonresidue(self) -> bool:
        return legendre(self.n, self.p) == -1

    def _same_field(self, other: 'Fp2Element') -> None:
        if (self.n, self.p) != (other.n, other.p):
            raise PreconditionViolated("elements of different F_p^2 models")

    def __add__(self, other: 'Fp2Element') -> 'Fp2Element':
        self._same_field(other)
        p = self.p
        return Fp2Element((self.x + other.x) % p, (self.y + other.y) % p, self.n, p)

    def __mul__(self, other: 'Fp2Element') -> 'Fp2Element':
        self._same_field(other)
        p = self.p
        x = (self.x * other.x + self.n * self.y * other.y) % p
        y = (self.x * other.y + other.x * self.y) % p
        return Fp2Element(x, y, self.n, p)

    def scale(self, c: int) -> 'Fp2Element':
        return Fp2Element(self.x * c % self.p, self.y * c % self.p, self.n, self.p)

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __pow__(self, exp: int) -> 'Fp2Element':
        return fp2_pow(self, exp)


def fp2_pow(e: Fp2Element, exp: int) -> Fp2Element:
    """e^exp in F_{p^2}; exp = 0 gives 1."""
    if exp < 0:
        raise PreconditionViolated(f"negative exponent {exp}")
    result = Fp2Element(1 % e.p, 0, e.n, e.p)
    base = e
    while exp:
        if exp & 1:
            result = result * base
        base = base * base
        exp >>= 1
    return result
