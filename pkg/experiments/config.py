"""
Immutable experiment configuration shared by the scan, the reports and the suites.
"""
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from arith_core.primes import is_prime, is_squarefree
from cubicspin.exceptions import ConfigError

MODES = ('spin', 'ap', 'both')


@dataclass(frozen=True)
class ScanConfig:
    """
    Parameters of one scan over the primes p <= x_max.

    residue_filters are (modulus, residue) pairs p must satisfy; checkpoints
    are the X values reports are taken at (x_max alone when empty).
    """
    d: int
    f: int = 1
    x_max: int = 1000
    residue_filters: Tuple[Tuple[int, int], ...] = ()
    m: int = 3
    mode: str = 'both'
    checkpoints: Tuple[int, ...] = ()
    seed: int = 1
    cache_path: Optional[Path] = None
    workers: int = 1
    block_size: int = 100_000
    segment_size: int = 1_000_000
    exhaustive_limit: int = 10_000
    sample_modulus: int = 97
    point_count_limit: int = 1_000_000

    def validate(self) -> 'ScanConfig':
        if self.d < 1 or self.d == 3 or not is_squarefree(self.d):
            raise ConfigError(f"d = {self.d} must be squarefree, positive and not 3")
        if self.f < 1:
            raise ConfigError(f"conductor f = {self.f} must be positive")
        if self.x_max < 2:
            raise ConfigError(f"x_max = {self.x_max} < 2")
        for modulus, residue in self.residue_filters:
            if modulus < 2 or not 0 <= residue < modulus:
                raise ConfigError(f"bad filter {modulus}:{residue}")
        if not is_prime(self.m):
            raise ConfigError(f"degree m = {self.m} must be prime")
        if self.mode not in MODES:
            raise ConfigError(f"mode {self.mode!r} not in {MODES}")
        if list(self.checkpoints) != sorted(set(self.checkpoints)):
            raise ConfigError(f"checkpoints {self.checkpoints} are not strictly ascending")
        if self.checkpoints and (self.checkpoints[0] < 2 or self.checkpoints[-1] > self.x_max):
            raise ConfigError(f"checkpoints must lie in [2, {self.x_max}]")
        if self.workers < 1 or self.block_size < 1 or self.segment_size < 1:
            raise ConfigError("workers, block size and segment size must be positive")
        return self

    @property
    def report_checkpoints(self) -> Tuple[int, ...]:
        """The user checkpoints, always closed by x_max."""
        if self.checkpoints and self.checkpoints[-1] == self.x_max:
            return self.checkpoints
        return self.checkpoints + (self.x_max,)

    @property
    def D(self) -> int:
        return self.f * self.f * self.d

    def fingerprint(self) -> str:
        """The settings a cached record depends on; x_max and the worker count are free."""
        return json.dumps({
            'd': self.d, 'f': self.f, 'm': self.m, 'mode': self.mode,
            'filters': [list(fl) for fl in self.residue_filters],
            'exhaustive_limit': self.exhaustive_limit,
            'sample_modulus': self.sample_modulus,
        }, sort_keys=True, separators=(',', ':'))

    def echo(self) -> dict:
        return {
            'd': self.d, 'f': self.f, 'x_max': self.x_max,
            'filters': [f"{mod}:{res}" for mod, res in self.residue_filters],
            'm': self.m, 'mode': self.mode, 'checkpoints': list(self.report_checkpoints),
            'seed': self.seed,
        }
