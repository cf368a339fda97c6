import pytest

from cubicspin.exceptions import ConfigError, SuiteFailure
from experiments.suites import SUITE_DEFAULTS, SUITES, run_verify


@pytest.mark.parametrize('suite, kwargs', [
    ('reciprocity', {'n': 100}),
    ('reciprocity-unit', {'n': 50}),
    ('lowering-split', {'n': 50}),
    ('lowering-inert', {'n': 50}),
    ('lowering-nonfixing', {'n': 50, 'd': 2}),
    ('lowering-inert-trivial', {'n': 50}),
    ('galois-orbit', {'x_max': 5000, 'd': 7}),
    ('unit-independence', {'x_max': 5000}),
    ('lsplit2', {'x_max': 5000, 'd': 2}),
    ('spin-ap', {'x_max': 5000}),
    ('spin-ap-m', {'x_max': 10_000}),
    ('magic-crosscheck', {'x_max': 2000}),
])
def test_suites_pass(suite, kwargs):
    report = run_verify(suite, seed=1, **kwargs)
    assert report.failures == 0
    assert report.checked > 0


def test_sampled_suites_honor_n():
    assert run_verify('lowering-split', n=20).checked == 20


def test_same_seed_same_cases():
    assert run_verify('reciprocity', seed=5, n=30) == run_verify('reciprocity', seed=5, n=30)


def test_unknown_suite():
    with pytest.raises(ConfigError):
        run_verify('riemann')


def test_failure_reports_smallest_counterexample(monkeypatch):
    def odd_primes_fail(ctx):
        for p in (29, 11, 7, 4):
            yield p, p, p % 2 == 0

    monkeypatch.setitem(SUITES, 'odd-fails', odd_primes_fail)
    monkeypatch.setitem(SUITE_DEFAULTS, 'odd-fails', (None, None))
    with pytest.raises(SuiteFailure) as info:
        run_verify('odd-fails')
    assert info.value.counterexample == 7
    assert info.value.failures == 3
