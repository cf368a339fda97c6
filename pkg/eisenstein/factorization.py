"""
Factorization of Eisenstein integers through the factorization of their norm.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from arith_core.modular import primitive_cube_root
from arith_core.primes import factor_integer
from cubicspin.exceptions import BadInput, InternalInconsistency

from .integers import (
    RAMIFIED_PRIME, EisensteinInt, e_divexact, e_gcd, primary_associate,
)

logger = logging.getLogger('cubicspin')


@dataclass(frozen=True)
class EisensteinFactorization:
    """
    unit * prod(prime^exponent).

    Primes of prime norm q = 1 mod 3 are primary associates, inert rational
    primes q = 2 mod 3 appear as EisensteinInt(q, 0), the ramified prime as 1 - w.
    """
    unit: EisensteinInt
    factors: Tuple[Tuple[EisensteinInt, int], ...]

    def reconstruct(self) -> EisensteinInt:
        result = self.unit
        for prime, exponent in self.factors:
            result = result * prime ** exponent
        return result


def split_prime_above(q: int) -> EisensteinInt:
    """Primary prime of norm q for a rational prime q = 1 mod 3."""
    c = primitive_cube_root(q)
    pi = e_gcd(EisensteinInt(q, 0), EisensteinInt(-c, 1))
    if pi.norm != q:
        raise InternalInconsistency(f"gcd({q}, w - {c}) = {pi} has norm {pi.norm}")
    return pi


def _strip(beta: EisensteinInt, prime: EisensteinInt) -> Tuple[EisensteinInt, int]:
    e = 0
    while True:
        q = e_divexact(beta, prime)
        if q is None:
            return beta, e
        beta, e = q, e + 1


def factor_eisenstein(beta: EisensteinInt, trial_limit: int = 1_000_000) -> EisensteinFactorization:
    """
    Factor a nonzero Eisenstein integer.

    Args:
        beta: Element to factor
        trial_limit: Trial-division bound for the norm, Pollard rho beyond it

    Returns:
        EisensteinFactorization whose reconstruct() equals beta
    """
    if beta.is_zero:
        raise BadInput("cannot factor zero")
    factors = []
    rest = beta
    for q, e in factor_integer(beta.norm, trial_limit).items():
        if q == 3:
            rest, v = _strip(rest, RAMIFIED_PRIME)
            factors.append((RAMIFIED_PRIME, v))
        elif q % 3 == 2:
            rest, v = _strip(rest, EisensteinInt(q, 0))
            factors.append((EisensteinInt(q, 0), v))
        else:
            pi = split_prime_above(q)
            for prime in (pi, primary_associate(pi.conjugate())):
                rest, v = _strip(rest, prime)
                if v:
                    factors.append((prime, v))
    if not rest.is_unit:
        raise InternalInconsistency(f"cofactor {rest} of {beta} is not a unit")
    result = EisensteinFactorization(rest, tuple(factors))
    logger.debug(f"factored {beta} into {len(factors)} prime power(s)")
    return result


def is_eisenstein_prime(x: EisensteinInt) -> bool:
    f = factor_eisenstein(x)
    return len(f.factors) == 1 and f.factors[0][1] == 1
