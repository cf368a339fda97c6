"""
Result types of scans and reports.
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple


@dataclass(frozen=True)
class SpinRecord:
    """One scanned prime. spin_k is None when the spin path is off; ap when the trace sign is unresolved."""
    p: int
    d: int
    f: int
    a: int
    b: int
    ap: Optional[int]
    candidates: Tuple[int, ...]
    cube: bool
    spin_k: Optional[int]
    m_power: Optional[bool] = None


@dataclass(frozen=True)
class DensityRow:
    x: int
    q: int
    c: int

    @property
    def fraction(self) -> float:
        return self.c / self.q if self.q else 0.0


@dataclass(frozen=True)
class DensityReport:
    m: int
    rows: Tuple[DensityRow, ...]
    config: dict = field(default_factory=dict)

    @property
    def q_total(self) -> int:
        return self.rows[-1].q if self.rows else 0

    @property
    def c_total(self) -> int:
        return self.rows[-1].c if self.rows else 0

    @property
    def fraction(self) -> float:
        return self.rows[-1].fraction if self.rows else 0.0


@dataclass(frozen=True)
class SpinSumRow:
    """
    Class counts up to x and S = A + B zeta_3 with A = n0 - n2, B = n1 - n2.

    q counts qualifying primes and c those with trivial spin.
    """
    x: int
    q: int
    c: int
    n0: int
    n1: int
    n2: int

    @property
    def A(self) -> int:
        return self.n0 - self.n2

    @property
    def B(self) -> int:
        return self.n1 - self.n2

    @property
    def norm(self) -> int:
        """|S|^2 = A^2 - AB + B^2, exact."""
        return self.A * self.A - self.A * self.B + self.B * self.B


@dataclass(frozen=True)
class SpinSumReport:
    full_orbit: bool
    rows: Tuple[SpinSumRow, ...]
    config: dict = field(default_factory=dict)


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    seed: int
    checked: int
    failures: int
    params: dict = field(default_factory=dict)
