"""
Density and spin-sum reports aggregated from a scan.
"""
import logging
from collections import Counter
from typing import Iterable, Iterator, List, Tuple

from cubicspin.exceptions import ConfigError, InternalInconsistency
from gaussian_orders.orders import OrderElement
from spin.embedding import embed_from_kappa
from spin.symbols import galois_orbit

from .config import ScanConfig
from .records import DensityReport, DensityRow, SpinRecord, SpinSumRow, SpinSumReport
from .scan import run_scan, with_mode

logger = logging.getLogger('cubicspin')


def _by_checkpoint(records: Iterable[SpinRecord], checkpoints: Tuple[int, ...]) -> Iterator[Tuple[int, List[SpinRecord]]]:
    """Group the sorted record stream into the slices (previous X, X]."""
    it = iter(records)
    pending = next(it, None)
    for x in checkpoints:
        chunk = []
        while pending is not None and pending.p <= x:
            chunk.append(pending)
            pending = next(it, None)
        yield x, chunk


def density_config(cfg: ScanConfig) -> ScanConfig:
    """For m != 3 only the trace path can decide m-th power residuosity."""
    if cfg.m == 3:
        return cfg
    if cfg.mode == 'spin':
        raise ConfigError(f"the spin path is cubic only, m = {cfg.m} needs mode ap")
    if cfg.mode == 'both':
        logger.warning(f"mode both downgraded to ap for m = {cfg.m}")
        return with_mode(cfg, 'ap')
    return cfg


def run_density(cfg: ScanConfig) -> DensityReport:
    """C(X)/Q(X) at each checkpoint; C counts cubes (m-th powers for m != 3)."""
    cfg = density_config(cfg.validate())
    q = c = 0
    rows = []
    for x, chunk in _by_checkpoint(run_scan(cfg), cfg.report_checkpoints):
        q += len(chunk)
        c += sum(1 for r in chunk if (r.cube if cfg.m == 3 else r.m_power))
        rows.append(DensityRow(x, q, c))
    report = DensityReport(cfg.m, tuple(rows), cfg.echo())
    logger.info(f"density d={cfg.d} m={cfg.m} X={cfg.x_max}: {report.c_total}/{report.q_total}")
    return report


def run_spinsum(cfg: ScanConfig, full_orbit: bool = True) -> SpinSumReport:
    """
    Class counts of the spin symbols of primes of norm <= X.

    Full-orbit mode counts all four conjugate primes above each p, whose sum
    must be 6 C(X) - 2 Q(X); single mode counts the canonical prime only.
    """
    cfg.validate()
    if cfg.mode == 'ap':
        raise ConfigError("spin sums need the spin path, mode ap has none")
    if cfg.m != 3:
        raise ConfigError(f"spin sums are cubic, got m = {cfg.m}")
    counts = Counter()
    q = c = 0
    rows = []
    for x, chunk in _by_checkpoint(run_scan(cfg), cfg.report_checkpoints):
        for record in chunk:
            q += 1
            c += record.spin_k == 0
            if full_orbit:
                kappa = OrderElement(record.a, record.b, cfg.D)
                orbit = galois_orbit(embed_from_kappa(record.p, cfg.d, cfg.f, kappa))
                if orbit[0].k != record.spin_k:
                    raise InternalInconsistency(f"orbit of p = {record.p} does not start at its spin symbol")
                counts.update(v.k for v in orbit)
            else:
                counts[record.spin_k] += 1
        row = SpinSumRow(x, q, c, counts[0], counts[1], counts[2])
        if full_orbit and (row.B != 0 or row.A != 6 * c - 2 * q):
            raise InternalInconsistency(f"S({x}) = {row.A}+{row.B}w but 6C - 2Q = {6 * c - 2 * q}")
        rows.append(row)
    logger.info(f"spin sum d={cfg.d} X={cfg.x_max}: |S|^2 = {rows[-1].norm if rows else 0}")
    return SpinSumReport(full_orbit, tuple(rows), cfg.echo())
