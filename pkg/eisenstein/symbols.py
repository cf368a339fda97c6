"""
Cubic residue symbols (alpha / beta)_3 in Z[w] and the weak reciprocity checks.
"""
import logging
from functools import lru_cache

from arith_core.fp2 import Fp2Element, fp2_pow
from arith_core.modular import CubeClass, cube_class, least_nonresidue, primitive_cube_root, sqrt_mod
from cubicspin.exceptions import BadModulus, InternalInconsistency, PreconditionViolated

from .factorization import factor_eisenstein
from .integers import EisensteinInt, are_congruent, e_gcd, is_coprime_to_three

logger = logging.getLogger('cubicspin')

TWENTY_SEVEN = EisensteinInt(27, 0)


def residue_image_of_omega(pi: EisensteinInt) -> int:
    """The c in F_q, q = norm(pi) prime, with w -> c killing pi."""
    q = pi.norm
    c = primitive_cube_root(q)
    for root in (c, q - 1 - c):
        if (pi.a + pi.b * root) % q == 0:
            return root
    raise InternalInconsistency(f"{pi} is not a degree-1 prime")


@lru_cache(maxsize=4096)
def omega_in_fp2(q: int) -> Fp2Element:
    """Image of w = (-1 + sqrt(-3)) / 2 in F_q[s]/(s^2 - n), q = 2 mod 3 odd."""
    n = least_nonresidue(q)
    # -3 and n are both nonresidues, so -3/n has a square root t and sqrt(-3) = t*s
    t = sqrt_mod(-3 * pow(n, -1, q) % q, q)
    half = pow(2, -1, q)
    w = Fp2Element(-half % q, t * half % q, n, q)
    if fp2_pow(w, 3) != Fp2Element.one(q) or w == Fp2Element.one(q):
        raise InternalInconsistency(f"{w} is not a primitive cube root of unity in F_{q}^2")
    return w


def symbol_at_split_prime(alpha: EisensteinInt, pi: EisensteinInt) -> CubeClass:
    q = pi.norm
    c = residue_image_of_omega(pi)
    return cube_class(alpha.a + alpha.b * c, q, c)


def symbol_at_inert_prime(alpha: EisensteinInt, q: int) -> CubeClass:
    if q == 2:
        # Z[w]/2 = F_4 = {0, 1, w, 1 + w = w^2} and (4 - 1)/3 = 1
        return {
            (0, 0): CubeClass.zero(), (1, 0): CubeClass(0),
            (0, 1): CubeClass(1), (1, 1): CubeClass(2),
        }[(alpha.a % 2, alpha.b % 2)]
    w = omega_in_fp2(q)
    image = Fp2Element.make(alpha.a, 0, q) + w.scale(alpha.b % q)
    if image.is_zero:
        return CubeClass.zero()
    value = fp2_pow(image, (q * q - 1) // 3)
    power = Fp2Element.one(q)
    for k in range(3):
        if value == power:
            return CubeClass(k)
        power = power * w
    raise InternalInconsistency(f"{alpha}^(({q}^2-1)/3) is not a cube root of unity")


def cubic_symbol(alpha: EisensteinInt, beta: EisensteinInt, trial_limit: int = 1_000_000) -> CubeClass:
    """
    (alpha / beta)_3, multiplicative in beta over its prime factorization.

    Degree-1 primes are evaluated in F_q through w -> c, inert rational
    primes q = 2 mod 3 in F_q^2.
    """
    if not is_coprime_to_three(beta):
        raise BadModulus(f"norm of {beta} is divisible by 3")
    result = CubeClass(0)
    for prime, exponent in factor_eisenstein(beta, trial_limit).factors:
        if prime.b == 0:
            value = symbol_at_inert_prime(alpha, prime.a)
        else:
            value = symbol_at_split_prime(alpha, prime)
        result = result * value ** exponent
        if result.is_zero:
            break
    return result


def reciprocity_invariance_check(alpha: EisensteinInt, beta1: EisensteinInt, beta2: EisensteinInt,
                                 trial_limit: int = 1_000_000) -> bool:
    """True iff (alpha/beta1)_3 = (alpha/beta2)_3 for beta1 = beta2 mod 27 alpha."""
    if not are_congruent(beta1, beta2, TWENTY_SEVEN * alpha):
        raise PreconditionViolated(f"{beta1} and {beta2} are not congruent mod 27*({alpha})")
    s1 = cubic_symbol(alpha, beta1, trial_limit)
    s2 = cubic_symbol(alpha, beta2, trial_limit)
    if s1 != s2:
        logger.warning(f"({alpha}/{beta1})_3 = {s1} but ({alpha}/{beta2})_3 = {s2}")
    return s1 == s2


def reciprocity_unit_factor(alpha: EisensteinInt, beta: EisensteinInt,
                            trial_limit: int = 1_000_000) -> CubeClass:
    """mu = (alpha/beta)_3 * (beta/alpha)_3^-1 for coprime alpha, beta prime to 3."""
    if not (is_coprime_to_three(alpha) and is_coprime_to_three(beta)):
        raise PreconditionViolated(f"{alpha} and {beta} must both be prime to 3")
    if not e_gcd(alpha, beta).is_unit:
        raise PreconditionViolated(f"{alpha} and {beta} are not coprime")
    return cubic_symbol(alpha, beta, trial_limit) * cubic_symbol(beta, alpha, trial_limit).conjugate()


def reciprocity_unit_factor_check(alpha1: EisensteinInt, beta1: EisensteinInt,
                                  alpha2: EisensteinInt, beta2: EisensteinInt,
                                  trial_limit: int = 1_000_000) -> bool:
    """The unit factor only sees alpha and beta mod 27."""
    if not (are_congruent(alpha1, alpha2, TWENTY_SEVEN) and are_congruent(beta1, beta2, TWENTY_SEVEN)):
        raise PreconditionViolated("pairs are not congruent mod 27")
    return (reciprocity_unit_factor(alpha1, beta1, trial_limit)
            == reciprocity_unit_factor(alpha2, beta2, trial_limit))
