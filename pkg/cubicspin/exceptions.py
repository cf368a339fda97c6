"""
Exception hierarchy shared by every app of the project.
"""


class CubicSpinError(Exception):
    """Base class for all domain errors."""


class PreconditionViolated(CubicSpinError):
    """An operation was called outside its documented domain."""


class NotOneModThree(PreconditionViolated):
    """The modulus is not congruent to 1 mod 3 (or mod m for degree m)."""


class BadInput(PreconditionViolated):
    """Degenerate or ramified input the caller must filter out."""


class NonSplit(PreconditionViolated):
    """The prime is not represented by the principal form a² + D·b²."""


class NoRoot(PreconditionViolated):
    """-D has no square root mod p, so p does not split in the field."""


class NotCoprimeToThree(PreconditionViolated):
    """The element is divisible by the ramified prime 1 - ζ₃."""


class BadModulus(PreconditionViolated):
    """The denominator of a cubic symbol has norm divisible by 3."""


class BadReduction(PreconditionViolated):
    """The curve has bad reduction at p (or p <= 3)."""


class BadCongruence(PreconditionViolated):
    """p is not congruent to 1 mod m."""


class DivisionByZero(CubicSpinError, ZeroDivisionError):
    """Division by the zero Eisenstein integer."""


class InternalInconsistency(CubicSpinError):
    """A computed value contradicts an identity that must always hold."""


class ConfigError(CubicSpinError):
    """An invalid experiment configuration."""


class IoError(CubicSpinError, OSError):
    """Reading or writing an export or cache file failed."""


class CacheCorrupt(CubicSpinError):
    """A scan cache fails its checksum or is not ordered by p."""


class SuiteFailure(CubicSpinError):
    """A property suite found a counterexample."""

    def __init__(self, suite, counterexample, failures=1):
        self.suite = suite
        self.counterexample = counterexample
        self.failures = failures
        super().__init__(
            f"suite {suite} failed {failures} time(s); smallest counterexample: {counterexample}"
        )
