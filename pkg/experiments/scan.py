"""
The prime scan: every qualifying p <= x_max through the spin path and the trace path.

Blocks of the range go to worker processes and come back in block order, so
the record stream is sorted by p for every worker count.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from arith_core.primes import prime_segments
from cm_ap.curves import ap_naive, cm_curve
from cm_ap.traces import build_ap_record
from cubicspin.exceptions import BadInput, BadReduction, InternalInconsistency, NonSplit
from gaussian_orders.orders import split_prime, trace_set
from spin.embedding import embed_from_kappa
from spin.symbols import spin_symbol

from .config import ScanConfig
from .records import SpinRecord
from .storage import read_cache, write_cache

logger = logging.getLogger('cubicspin')


def qualifies(p: int, cfg: ScanConfig) -> bool:
    """Congruence filters, built-in and user supplied."""
    if p % 3 != 1 or math.gcd(p, 6 * cfg.d * cfg.f) != 1:
        return False
    if cfg.d == 1 and p % 12 != 1:
        return False
    if cfg.m != 3 and p % cfg.m != 1:
        return False
    return all(p % modulus == residue for modulus, residue in cfg.residue_filters)


def _point_count_due(p: int, cfg: ScanConfig) -> bool:
    if p > cfg.point_count_limit:
        return False
    return p <= cfg.exhaustive_limit or p % cfg.sample_modulus == 1


def _cross_check_trace(p: int, cfg: ScanConfig, candidates, ap: Optional[int]) -> None:
    """Point count on the rational CM curve of the order, when one is tabulated."""
    if (cfg.d, cfg.f) == (1, 1) and p <= cfg.exhaustive_limit:
        # build_ap_record already counted points here
        return
    try:
        curve = cm_curve(cfg.d, cfg.f)
        naive = ap_naive(curve, p, cfg.point_count_limit)
    except (BadInput, BadReduction):
        return
    if naive not in candidates or (ap is not None and naive != ap):
        raise InternalInconsistency(f"point count a_{p} = {naive} disagrees with {sorted(candidates)} / {ap}")


def scan_prime(p: int, cfg: ScanConfig) -> Optional[SpinRecord]:
    """The record of p, or None when p does not qualify or does not split."""
    if not qualifies(p, cfg):
        return None
    try:
        kappa = split_prime(p, cfg.d, cfg.f).kappa
    except NonSplit:
        return None
    spin_k = None
    if cfg.mode in ('spin', 'both'):
        spin_k = spin_symbol(embed_from_kappa(p, cfg.d, cfg.f, kappa)).k
    ap, m_power = None, None
    candidates = trace_set(kappa)
    if cfg.mode in ('ap', 'both'):
        ms = (cfg.m,) if cfg.m != 3 else ()
        record = build_ap_record(p, cfg.d, cfg.f, ms, exact_limit=cfg.exhaustive_limit)
        candidates, ap = record.candidates, record.ap
        m_power = record.m_power.get(cfg.m)
        if _point_count_due(p, cfg):
            _cross_check_trace(p, cfg, candidates, ap)
        cube = record.cube
        if spin_k is not None and cube != (spin_k == 0):
            raise InternalInconsistency(f"spin path and trace path disagree at p = {p}")
    else:
        cube = spin_k == 0
    return SpinRecord(
        p=p, d=cfg.d, f=cfg.f, a=kappa.a, b=kappa.b, ap=ap,
        candidates=tuple(sorted(candidates)), cube=cube, spin_k=spin_k, m_power=m_power,
    )


def scan_block(job: Tuple[ScanConfig, int, int]) -> List[SpinRecord]:
    """Records of the primes in [lo, hi)."""
    cfg, lo, hi = job
    records = []
    for segment in prime_segments(lo, hi, cfg.segment_size):
        for p in segment.tolist():
            record = scan_prime(p, cfg)
            if record is not None:
                records.append(record)
    logger.debug(f"block [{lo}, {hi}) gave {len(records)} records")
    return records


def _blocks(cfg: ScanConfig, start: int) -> List[Tuple[ScanConfig, int, int]]:
    stop = cfg.x_max + 1
    return [(cfg, lo, min(lo + cfg.block_size, stop)) for lo in range(start, stop, cfg.block_size)]


def _scan_blocks(cfg: ScanConfig, jobs: List[Tuple[ScanConfig, int, int]]) -> Iterator[List[SpinRecord]]:
    if cfg.workers == 1 or len(jobs) <= 1:
        yield from map(scan_block, jobs)
        return
    with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
        yield from executor.map(scan_block, jobs)


def run_scan(cfg: ScanConfig) -> Iterator[SpinRecord]:
    """
    Stream the records of every qualifying prime p <= x_max, sorted by p.

    With a cache_path, cached records are replayed first and the scan resumes
    after the cache's scanned bound; the cache is rewritten after every block.
    """
    cfg.validate()
    scanned_through, cached = 1, []
    if cfg.cache_path is not None and Path(cfg.cache_path).exists():
        cache = read_cache(cfg.cache_path, cfg)
        scanned_through, cached = max(cache.scanned_through, 1), cache.records
        logger.info(f"resuming from cache {cfg.cache_path} after p = {scanned_through}")
    elif cfg.cache_path is not None:
        logger.warning(f"cache {cfg.cache_path} not found, starting fresh")
    for record in cached:
        if record.p > cfg.x_max:
            return
        yield record
    total = len(cached)
    jobs = _blocks(cfg, scanned_through + 1)
    for (_, _, hi), block in zip(jobs, _scan_blocks(cfg, jobs)):
        if cfg.cache_path is not None:
            cached.extend(block)
            write_cache(cfg.cache_path, cfg, cached, hi - 1)
        total += len(block)
        yield from block
    logger.info(f"scan d={cfg.d} f={cfg.f} up to {cfg.x_max} finished with {total} records")


def with_mode(cfg: ScanConfig, mode: str) -> ScanConfig:
    return replace(cfg, mode=mode)
