"""
Property suites behind `manage.py verify`.

Every suite yields (case, size, ok) triples; the smallest failing case is the
counterexample reported by SuiteFailure.
"""
import logging
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Iterator, Optional, Tuple

import numpy as np
from django.conf import settings

from arith_core.modular import legendre
from arith_core.primes import primes_in_range
from cm_ap.curves import ap_naive, cm_curve
from cm_ap.traces import ap_cm_candidates, build_ap_record
from cubicspin.exceptions import (
    BadReduction, ConfigError, InternalInconsistency, PreconditionViolated, SuiteFailure,
)
from eisenstein.integers import EisensteinInt, e_gcd
from eisenstein.symbols import reciprocity_invariance_check, reciprocity_unit_factor_check
from gaussian_orders.orders import OrderElement, unit_orbit
from spin.embedding import SpinEmbedding, embed_from_kappa
from spin.lowering import (
    lowering_inert_check, lowering_inert_trivial_check, lowering_nonfixing_check,
    lowering_split_check,
)
from spin.symbols import (
    galois_orbit, kappa_cube_mod_conjugate, orbit_sum, spin_power_symbol, spin_symbol,
)

from .config import ScanConfig
from .records import VerifyReport
from .scan import run_scan

logger = logging.getLogger('cubicspin')

Case = Tuple[object, int, bool]

SUITES: Dict[str, Callable[['SuiteContext'], Iterator[Case]]] = {}

# (samples, x_max) used when the caller gives none
SUITE_DEFAULTS = {
    'reciprocity': (1000, None),
    'reciprocity-unit': (500, None),
    'lowering-split': (200, 10_000),
    'lowering-inert': (200, 10_000),
    'lowering-nonfixing': (200, 10_000),
    'lowering-inert-trivial': (200, 10_000),
    'galois-orbit': (None, 100_000),
    'unit-independence': (None, 100_000),
    'lsplit2': (None, 100_000),
    'spin-ap': (None, 100_000),
    'spin-ap-m': (None, 100_000),
    'magic-crosscheck': (None, 10_000),
}


@dataclass(frozen=True)
class SuiteContext:
    seed: int
    n: Optional[int]
    x_max: Optional[int]
    d: int
    f: int
    m: int
    workers: int
    radius: int

    @property
    def D(self) -> int:
        return self.f * self.f * self.d

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def scan_config(self) -> ScanConfig:
        return ScanConfig(
            d=self.d, f=self.f, x_max=self.x_max, mode='spin', seed=self.seed,
            workers=self.workers, block_size=settings.SCAN_BLOCK_SIZE,
            segment_size=settings.SIEVE_SEGMENT_SIZE,
            exhaustive_limit=settings.POINT_COUNT_EXHAUSTIVE_LIMIT,
            sample_modulus=settings.POINT_COUNT_SAMPLE_MODULUS,
            point_count_limit=settings.POINT_COUNT_LIMIT,
        )

    def embeddings(self) -> Iterator[SpinEmbedding]:
        for record in run_scan(self.scan_config()):
            kappa = OrderElement(record.a, record.b, self.D)
            yield embed_from_kappa(record.p, self.d, self.f, kappa)


def suite(name: str):
    def register(fn):
        SUITES[name] = fn
        return fn
    return register


def _holds(check: Callable[[], bool]) -> bool:
    """A check that trips an internal consistency assertion counts as failed."""
    try:
        return check()
    except InternalInconsistency as e:
        logger.warning(f"{e}")
        return False


def _eisenstein(rng: np.random.Generator, radius: int) -> EisensteinInt:
    a, b = (int(v) for v in rng.integers(-radius, radius + 1, size=2))
    return EisensteinInt(a, b)


def _prime_to_three(rng: np.random.Generator, radius: int) -> EisensteinInt:
    while True:
        x = _eisenstein(rng, radius)
        if not x.is_zero and x.norm % 3 != 0:
            return x


@suite('reciprocity')
def _reciprocity(ctx: SuiteContext) -> Iterator[Case]:
    rng = ctx.rng()
    step = max(ctx.radius // 10, 1)
    for _ in range(ctx.n):
        alpha = _prime_to_three(rng, ctx.radius)
        beta1 = _prime_to_three(rng, ctx.radius)
        gamma = _eisenstein(rng, step)
        beta2 = beta1 + EisensteinInt(27, 0) * alpha * gamma
        if beta2.is_zero:
            continue
        case = (alpha, beta1, beta2)
        yield case, alpha.norm + beta2.norm, reciprocity_invariance_check(
            alpha, beta1, beta2, settings.FACTOR_TRIAL_LIMIT)


@suite('reciprocity-unit')
def _reciprocity_unit(ctx: SuiteContext) -> Iterator[Case]:
    rng = ctx.rng()
    produced = 0
    while produced < ctx.n:
        alpha1 = _prime_to_three(rng, ctx.radius)
        beta1 = _prime_to_three(rng, ctx.radius)
        alpha2 = alpha1 + _eisenstein(rng, 1).scale(27)
        beta2 = beta1 + _eisenstein(rng, 1).scale(27)
        if alpha2.is_zero or beta2.is_zero:
            continue
        if not (e_gcd(alpha1, beta1).is_unit and e_gcd(alpha2, beta2).is_unit):
            continue
        produced += 1
        case = (alpha1, beta1, alpha2, beta2)
        yield case, alpha2.norm + beta2.norm, reciprocity_unit_factor_check(
            *case, trial_limit=settings.FACTOR_TRIAL_LIMIT)


def _sample_primes(ctx: SuiteContext, residue_mod_three: int, split: bool):
    """Primes p <= x_max coprime to 6D with the given class mod 3 and splitting of -D."""
    wanted = 1 if split else -1
    primes = [
        p for p in primes_in_range(5, ctx.x_max + 1)
        if p % 3 == residue_mod_three and (6 * ctx.D) % p != 0 and legendre(-ctx.D, p) == wanted
    ]
    if not primes:
        raise ConfigError(f"no primes <= {ctx.x_max} fit the suite for D = {ctx.D}")
    return primes


def _lowering_eisenstein(ctx: SuiteContext, split: bool, check) -> Iterator[Case]:
    rng = ctx.rng()
    primes = _sample_primes(ctx, 1, split)
    produced = 0
    while produced < ctx.n:
        p = int(rng.choice(primes))
        alpha = _eisenstein(rng, 1000)
        if alpha.norm % p == 0:
            continue
        produced += 1
        yield (p, ctx.d, ctx.f, alpha), p, check(p, ctx.d, alpha, ctx.f)


@suite('lowering-split')
def _lowering_split(ctx: SuiteContext) -> Iterator[Case]:
    return _lowering_eisenstein(ctx, True, lowering_split_check)


@suite('lowering-inert')
def _lowering_inert(ctx: SuiteContext) -> Iterator[Case]:
    return _lowering_eisenstein(ctx, False, lowering_inert_check)


def _lowering_order(ctx: SuiteContext, residue_mod_three: int, check) -> Iterator[Case]:
    rng = ctx.rng()
    primes = _sample_primes(ctx, residue_mod_three, True)
    produced = 0
    while produced < ctx.n:
        p = int(rng.choice(primes))
        a, b = (int(v) for v in rng.integers(-1000, 1001, size=2))
        alpha = OrderElement(a, b, ctx.D)
        try:
            ok = check(p, ctx.d, ctx.f, alpha)
        except PreconditionViolated:
            continue
        produced += 1
        yield (p, ctx.d, ctx.f, alpha), p, ok


@suite('lowering-nonfixing')
def _lowering_nonfixing(ctx: SuiteContext) -> Iterator[Case]:
    return _lowering_order(ctx, 1, lowering_nonfixing_check)


@suite('lowering-inert-trivial')
def _lowering_inert_trivial(ctx: SuiteContext) -> Iterator[Case]:
    return _lowering_order(ctx, 2, lowering_inert_trivial_check)


def _orbit_law(e: SpinEmbedding) -> bool:
    k = spin_symbol(e)
    orbit = galois_orbit(e)
    total = orbit_sum(orbit)
    return orbit == (k, k, k ** 2, k ** 2) and total == EisensteinInt(4 if k.is_trivial else -2, 0)


@suite('galois-orbit')
def _galois_orbit(ctx: SuiteContext) -> Iterator[Case]:
    for e in ctx.embeddings():
        yield e.p, e.p, _holds(lambda: _orbit_law(e))


@suite('unit-independence')
def _unit_independence(ctx: SuiteContext) -> Iterator[Case]:
    for e in ctx.embeddings():
        k = spin_symbol(e)
        values = {spin_symbol(embed_from_kappa(e.p, e.d, e.f, u)) for u in unit_orbit(e.kappa)}
        yield e.p, e.p, values == {k}


@suite('lsplit2')
def _lsplit2(ctx: SuiteContext) -> Iterator[Case]:
    for e in ctx.embeddings():
        yield e.p, e.p, kappa_cube_mod_conjugate(e) == spin_symbol(e).is_trivial


def _spin_matches_trace(e: SpinEmbedding) -> bool:
    record = build_ap_record(e.p, e.d, e.f, exact_limit=settings.POINT_COUNT_EXHAUSTIVE_LIMIT)
    return record.cube == spin_symbol(e).is_trivial


@suite('spin-ap')
def _spin_ap(ctx: SuiteContext) -> Iterator[Case]:
    for e in ctx.embeddings():
        yield e.p, e.p, _holds(lambda: _spin_matches_trace(e))


@suite('spin-ap-m')
def _spin_ap_m(ctx: SuiteContext) -> Iterator[Case]:
    ms = (ctx.m,) if ctx.m != 3 else (5, 7)
    for e in ctx.embeddings():
        for m in ms:
            if e.p % m != 1:
                continue
            record = build_ap_record(e.p, e.d, e.f, ms=(m,), exact_limit=settings.POINT_COUNT_EXHAUSTIVE_LIMIT)
            yield (e.p, m), e.p, record.m_power[m] == spin_power_symbol(e, m).is_trivial


@suite('magic-crosscheck')
def _magic_crosscheck(ctx: SuiteContext) -> Iterator[Case]:
    limit = min(ctx.x_max, settings.POINT_COUNT_LIMIT)
    for d in (1, 2, 7):
        curve = cm_curve(d)
        for p in primes_in_range(5, limit + 1):
            try:
                candidates = ap_cm_candidates(p, d)
                ap = ap_naive(curve, p, settings.POINT_COUNT_LIMIT)
            except (PreconditionViolated, BadReduction):
                continue
            yield (p, d), p, ap in candidates


def run_verify(suite_name: str, seed: Optional[int] = None, n: Optional[int] = None,
               x_max: Optional[int] = None, d: int = 1, f: int = 1, m: int = 3,
               workers: int = 1) -> VerifyReport:
    """
    Run one property suite.

    Raises:
        ConfigError: unknown suite or unusable parameters
        SuiteFailure: at least one case failed; carries the smallest one
    """
    if suite_name not in SUITES:
        raise ConfigError(f"unknown suite {suite_name!r}; choose from {sorted(SUITES)}")
    default_n, default_x = SUITE_DEFAULTS[suite_name]
    ctx = SuiteContext(
        seed=settings.VERIFY_DEFAULT_SEED if seed is None else seed,
        n=default_n if n is None else n,
        x_max=default_x if x_max is None else x_max,
        d=d, f=f, m=m, workers=workers, radius=settings.VERIFY_SAMPLE_RADIUS,
    )
    checked = 0
    failures = []
    for case, size, ok in SUITES[suite_name](ctx):
        checked += 1
        if not ok:
            failures.append((size, checked, case))
    params = {k: v for k, v in asdict(ctx).items() if k not in ('seed', 'radius')}
    if failures:
        _, _, case = min(failures, key=lambda item: item[:2])
        logger.error(f"suite {suite_name} failed on {len(failures)} of {checked} cases")
        raise SuiteFailure(suite_name, case, len(failures))
    logger.info(f"suite {suite_name} passed {checked} cases")
    return VerifyReport(suite_name, ctx.seed, checked, 0, params)
