"""
CM traces a_p = kappa + conj(kappa) and their power residuosity.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Optional

from arith_core.primes import primes_in_range
from cubicspin.exceptions import BadCongruence, BadInput, InternalInconsistency, NonSplit
from gaussian_orders.orders import cornacchia, split_prime, trace_set

from .curves import ap_naive, cm_curve

logger = logging.getLogger('cubicspin')


@dataclass(frozen=True)
class ApRecord:
    """
    Trace data at one prime.

    ap is None when only the unit orbit of kappa is known; cube is the cubic
    residuosity shared by every candidate.
    """
    p: int
    d: int
    f: int
    candidates: FrozenSet[int]
    cube: bool
    ap: Optional[int] = None
    m_power: Dict[int, bool] = field(default_factory=dict)


def ap_cm_candidates(p: int, d: int, f: int = 1) -> FrozenSet[int]:
    """{u kappa + conj(u kappa)}: {+-2a}, or {+-2a, +-2b} in Z[i]."""
    return trace_set(split_prime(p, d, f).kappa)


def ap_exact_d1(p: int) -> int:
    """
    a_p of y^2 = x^3 - x for p = 1 mod 4: 2a with p = a^2 + b^2, a odd, a + b = 1 mod 4.
    """
    if p <= 3:
        raise BadInput(f"{p} <= 3")
    if p % 4 != 1:
        raise NonSplit(f"{p} is not 1 mod 4")
    a, b = cornacchia(p, 1)
    if (a + b) % 4 != 1:
        a = -a
    return 2 * a


def is_mth_power_residue(x: int, p: int, m: int) -> bool:
    if m < 2:
        raise BadInput(f"degree {m} < 2")
    if (p - 1) % m != 0:
        raise BadCongruence(f"{p} is not 1 mod {m}")
    x %= p
    return x == 0 or pow(x, (p - 1) // m, p) == 1


@lru_cache(maxsize=None)
def validate_exact_trace_rule(limit: int = 10_000) -> int:
    """Check ap_exact_d1 against point counting on every p = 1 mod 4 up to limit."""
    curve = cm_curve(1)
    checked = 0
    for p in primes_in_range(5, limit + 1):
        if p % 4 != 1:
            continue
        exact, naive = ap_exact_d1(p), ap_naive(curve, p)
        if exact != naive:
            raise InternalInconsistency(f"ap_exact_d1({p}) = {exact} but point counting gives {naive}")
        checked += 1
    logger.info(f"exact trace rule for y^2 = x^3 - x agrees with point counting on {checked} primes <= {limit}")
    return checked


def _shared_flag(candidates: FrozenSet[int], p: int, m: int) -> bool:
    flags = {is_mth_power_residue(t, p, m) for t in candidates}
    if len(flags) != 1:
        raise InternalInconsistency(f"degree-{m} residuosity differs across the traces {sorted(candidates)} at {p}")
    return flags.pop()


def build_ap_record(p: int, d: int, f: int = 1, ms: Iterable[int] = (),
                    exact_limit: int = 10_000) -> ApRecord:
    """
    Trace record of p for the order Z[f sqrt(-d)].

    For Z[i] the exact trace is resolved; it is compared with point counting
    directly up to exact_limit and through validate_exact_trace_rule above.
    """
    candidates = ap_cm_candidates(p, d, f)
    ap = None
    if (d, f) == (1, 1):
        ap = ap_exact_d1(p)
        if p <= exact_limit:
            naive = ap_naive(cm_curve(1), p)
            if naive != ap:
                raise InternalInconsistency(f"ap_exact_d1({p}) = {ap} but point counting gives {naive}")
        else:
            validate_exact_trace_rule(exact_limit)
        if ap not in candidates:
            raise InternalInconsistency(f"a_{p} = {ap} is not in {sorted(candidates)}")
    m_power = {m: _shared_flag(candidates, p, m) for m in ms if m != 3 and (p - 1) % m == 0}
    return ApRecord(p, d, f, candidates, _shared_flag(candidates, p, 3), ap, m_power)
