"""
Short Weierstrass curves y^2 = x^3 + Ax + B and their traces of Frobenius by point counting.
"""
import logging
from dataclasses import dataclass

import numpy as np

from arith_core.primes import is_prime
from cubicspin.exceptions import BadInput, BadReduction, PreconditionViolated

logger = logging.getLogger('cubicspin')


@dataclass(frozen=True)
class CurveShort:
    A: int
    B: int

    def __post_init__(self):
        if self.discriminant == 0:
            raise BadInput(f"y^2 = x^3 + {self.A}x + {self.B} is singular")

    @property
    def discriminant(self) -> int:
        return 4 * self.A ** 3 + 27 * self.B ** 2

    def has_good_reduction(self, p: int) -> bool:
        return p > 3 and self.discriminant % p != 0

    @classmethod
    def from_j_invariant(cls, j: int) -> 'CurveShort':
        """y^2 = x^3 + 3c x + 2c(1728 - j) with c = j(1728 - j), which has invariant j."""
        if j in (0, 1728):
            raise BadInput(f"j = {j} needs its own model")
        c = j * (1728 - j)
        return cls(3 * c, 2 * c * (1728 - j))

    def __str__(self):
        return f"y^2 = x^3 + {self.A}x + {self.B}"


# Curves over Q with CM by Z[f sqrt(-d)]
CM_J_INVARIANTS = {
    (2, 1): 8000,
    (7, 1): 255 ** 3,
}


def cm_curve(d: int, f: int = 1) -> CurveShort:
    if (d, f) == (1, 1):
        return CurveShort(-1, 0)
    try:
        return CurveShort.from_j_invariant(CM_J_INVARIANTS[(d, f)])
    except KeyError:
        raise BadInput(f"no rational CM curve for Z[{f}sqrt(-{d})] in the table")


def ap_naive(curve: CurveShort, p: int, limit: int = 1_000_000) -> int:
    """
    a_p = p + 1 - #E(F_p) = -sum_x legendre(x^3 + Ax + B, p).

    Counts in O(p) with a numpy table of squares.
    """
    if not is_prime(p):
        raise BadInput(f"{p} is not prime")
    if not curve.has_good_reduction(p):
        raise BadReduction(f"{curve} has bad reduction at {p}")
    if p > limit:
        raise PreconditionViolated(f"point counting is capped at p <= {limit}, got {p}")
    xs = np.arange(p, dtype=np.int64)
    is_square = np.zeros(p, dtype=bool)
    is_square[xs * xs % p] = True
    rhs = (xs * xs % p * xs + (curve.A % p) * xs + curve.B % p) % p
    chi = np.where(rhs == 0, 0, np.where(is_square[rhs], 1, -1))
    return -int(chi.sum())
