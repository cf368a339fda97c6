"""
Primality, prime iteration and integer factorization.
"""
import logging
import math
from functools import lru_cache
from typing import Dict, Iterator, List

import numpy as np

logger = logging.getLogger('cubicspin')

# Miller-Rabin with the first twelve primes as witnesses is exact below 3.3e24,
# which covers every norm the scans produce (< 2^63).
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_SEGMENT_SIZE = 1_000_000


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 3.3e24."""
    if n < 2:
        return False
    for q in _WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def simple_sieve(limit: int) -> np.ndarray:
    """Classic sieve up to limit (inclusive), primes as an int64 array."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if is_p[q]:
            is_p[q * q: limit + 1: q] = False
    return np.flatnonzero(is_p).astype(np.int64)


def prime_segments(lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> Iterator[np.ndarray]:
    """
    Yield the primes of [lo, hi) segment by segment, ascending.

    Memory stays O(sqrt(hi) + segment_size): only the base primes below
    sqrt(hi) and one boolean mask are alive at any time.
    """
    lo = max(lo, 2)
    if hi <= lo:
        return
    base = simple_sieve(math.isqrt(hi - 1))
    low = lo
    while low < hi:
        high = min(low + segment_size, hi)
        mask = np.ones(high - low, dtype=bool)
        for q in base:
            q = int(q)
            if q * q >= high:
                break
            start = max(q * q, ((low + q - 1) // q) * q)
            if start >= high:
                continue
            mask[start - low::q] = False
        yield low + np.flatnonzero(mask).astype(np.int64)
        low = high


def primes_in_range(lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> List[int]:
    """
    All primes in the half-open interval [lo, hi), ascending.

    Args:
        lo: Lower bound (inclusive)
        hi: Upper bound (exclusive)
        segment_size: Width of one sieve segment

    Returns:
        List of primes as Python integers
    """
    if lo > hi:
        raise ValueError(f"empty interval [{lo}, {hi})")
    primes: List[int] = []
    for segment in prime_segments(lo, hi, segment_size):
        primes.extend(segment.tolist())
    return primes


def is_squarefree(n: int) -> bool:
    """True iff no square of a prime divides n (n >= 1)."""
    if n < 1:
        return False
    q = 2
    while q * q <= n:
        if n % (q * q) == 0:
            return False
        if n % q == 0:
            n //= q
        q += 1
    return True


@lru_cache(maxsize=8)
def _trial_primes(limit: int) -> tuple:
    return tuple(simple_sieve(limit).tolist())


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of the odd composite n."""
    c = 1
    while True:
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def factor_integer(n: int, trial_limit: int = 1_000_000) -> Dict[int, int]:
    """
    Factor n >= 1 into {prime: exponent}, ascending.

    Trial division by the primes up to trial_limit runs first; a cofactor that
    is still composite is split with Pollard-Brent rho.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: Dict[int, int] = {}
    rest = n
    for q in _trial_primes(trial_limit):
        if q * q > rest:
            break
        if rest % q == 0:
            e = 0
            while rest % q == 0:
                rest //= q
                e += 1
            factors[q] = e
            if is_prime(rest):
                break
    stack = [rest] if rest > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        g = _pollard_brent(m)
        logger.debug(f"Pollard rho split {m} as {g} * {m // g}")
        stack.extend((g, m // g))
    return dict(sorted(factors.items()))
