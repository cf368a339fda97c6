"""
CSV / JSON-lines export and the checksummed scan cache.

Cache layout:

    #cubicspin-cache,v1,<scanned through>,<config fingerprint>
    p,d,f,a,b,ap,cube,spin_k,m_power
    <one row per record, p strictly increasing>
    #checksum,<sha256 of every byte above this line>
"""
import csv
import hashlib
import io
import json
import logging
import os
from pathlib import Path
from typing import Iterable, List, NamedTuple, Optional, TextIO, Tuple

from cubicspin.exceptions import CacheCorrupt, ConfigError, IoError
from gaussian_orders.orders import OrderElement, trace_set

from .config import ScanConfig
from .records import SpinRecord
from .serializers import SpinRecordSerializer

logger = logging.getLogger('cubicspin')

CSV_FIELDS = ('p', 'd', 'f', 'a', 'b', 'ap', 'cube', 'spin_k')
CACHE_FIELDS = CSV_FIELDS + ('m_power',)
CACHE_MAGIC = '#cubicspin-cache,v1,'
CHECKSUM_PREFIX = '#checksum,'
FORMATS = ('csv', 'jsonl')


def _cell(value) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return '1' if value else '0'
    return str(value)


def csv_row(record: SpinRecord) -> List[str]:
    data = SpinRecordSerializer(record).data
    return [_cell(data[name]) for name in CSV_FIELDS]


def write_records(records: Iterable[SpinRecord], fmt: str, stream: TextIO) -> int:
    """Write records to an open text stream; returns the number written."""
    if fmt not in FORMATS:
        raise ConfigError(f"format {fmt!r} not in {FORMATS}")
    count = 0
    if fmt == 'csv':
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(CSV_FIELDS)
        for record in records:
            writer.writerow(csv_row(record))
            count += 1
    else:
        for record in records:
            stream.write(json.dumps(SpinRecordSerializer(record).data, separators=(',', ':')) + '\n')
            count += 1
    return count


def export(records: Iterable[SpinRecord], fmt: str, path) -> int:
    """Export records to path as csv (header always written) or json-lines."""
    try:
        with open(path, 'w', newline='', encoding='utf-8') as stream:
            count = write_records(records, fmt, stream)
    except OSError as e:
        logger.error(f"Error writing export {path}: {e}")
        raise IoError(f"cannot write {path}: {e}") from e
    logger.info(f"exported {count} records to {path} as {fmt}")
    return count


def _checksum(body: str) -> str:
    return hashlib.sha256(body.encode('utf-8')).hexdigest()


def _cache_body(cfg: ScanConfig, records: Iterable[SpinRecord], scanned_through: int) -> str:
    out = io.StringIO()
    out.write(f"{CACHE_MAGIC}{scanned_through},{cfg.fingerprint()}\n")
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(CACHE_FIELDS)
    for record in records:
        writer.writerow(csv_row(record) + [_cell(record.m_power)])
    return out.getvalue()


def write_cache(path: Path, cfg: ScanConfig, records: List[SpinRecord], scanned_through: int) -> None:
    """
    Rewrite the cache atomically with a fresh checksum line.

    scanned_through is the bound every prime up to which has been scanned.
    """
    body = _cache_body(cfg, records, scanned_through)
    tmp = Path(f"{path}.tmp")
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(tmp, 'w', newline='', encoding='utf-8') as stream:
            stream.write(body + CHECKSUM_PREFIX + _checksum(body) + '\n')
        os.replace(tmp, path)
    except OSError as e:
        logger.error(f"Error writing cache {path}: {e}")
        raise IoError(f"cannot write cache {path}: {e}") from e


def _optional_int(cell: str) -> Optional[int]:
    return int(cell) if cell != '' else None


def _optional_bool(cell: str) -> Optional[bool]:
    return cell == '1' if cell != '' else None


def _parse_row(row: List[str]) -> SpinRecord:
    p, d, f, a, b = (int(cell) for cell in row[:5])
    kappa = OrderElement(a, b, f * f * d)
    return SpinRecord(
        p=p, d=d, f=f, a=a, b=b,
        ap=_optional_int(row[5]),
        candidates=tuple(sorted(trace_set(kappa))),
        cube=row[6] == '1',
        spin_k=_optional_int(row[7]),
        m_power=_optional_bool(row[8]),
    )


class CachedScan(NamedTuple):
    fingerprint: str
    scanned_through: int
    records: List[SpinRecord]


def _parse_magic(line: str, path) -> Tuple[int, str]:
    """(scanned_through, fingerprint) from the first cache line."""
    try:
        bound, fingerprint = line.strip()[len(CACHE_MAGIC):].split(',', 1)
        return int(bound), fingerprint
    except ValueError as e:
        raise CacheCorrupt(f"bad header in {path}: {e}") from e


def read_cache(path: Path, cfg: Optional[ScanConfig] = None) -> CachedScan:
    """
    Load a cache: its fingerprint, scanned bound and records.

    Raises:
        CacheCorrupt: checksum mismatch, malformed rows, p not increasing or
            a record beyond the scanned bound
        ConfigError: the cache was written for a different configuration
    """
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise IoError(f"cannot read cache {path}: {e}") from e
    lines = text.splitlines(keepends=True)
    if len(lines) < 3 or not lines[0].startswith(CACHE_MAGIC) or not lines[-1].startswith(CHECKSUM_PREFIX):
        raise CacheCorrupt(f"{path} is not a cubicspin cache")
    body = ''.join(lines[:-1])
    if lines[-1].strip()[len(CHECKSUM_PREFIX):] != _checksum(body):
        raise CacheCorrupt(f"checksum mismatch in {path}")
    scanned_through, fingerprint = _parse_magic(lines[0], path)
    if cfg is not None and fingerprint != cfg.fingerprint():
        logger.error(f"cache {path} was written for {fingerprint}")
        raise ConfigError(f"cache {path} belongs to a different configuration")
    records = []
    try:
        for row in csv.reader(lines[2:-1]):
            records.append(_parse_row(row))
    except (ValueError, IndexError) as e:
        raise CacheCorrupt(f"malformed row in {path}: {e}") from e
    if any(x.p >= y.p for x, y in zip(records, records[1:])):
        raise CacheCorrupt(f"rows of {path} are not strictly increasing in p")
    if records and records[-1].p > scanned_through:
        raise CacheCorrupt(f"{path} holds p = {records[-1].p} beyond its scanned bound {scanned_through}")
    return CachedScan(fingerprint, scanned_through, records)


def resume(cache_path, cfg: Optional[ScanConfig] = None) -> int:
    """Largest p such that every prime up to it has been scanned; 0 for a missing cache."""
    if not Path(cache_path).exists():
        logger.warning(f"cache {cache_path} not found, starting fresh")
        return 0
    return read_cache(cache_path, cfg).scanned_through
