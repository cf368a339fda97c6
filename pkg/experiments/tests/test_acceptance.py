"""
Desk-scale runs up to 10^6; deselected by default, run with `pytest -m slow`.
"""
from dataclasses import replace

import pytest

from experiments.config import ScanConfig
from experiments.reports import run_density, run_spinsum
from experiments.scan import run_scan
from experiments.storage import export
from experiments.suites import run_verify

pytestmark = pytest.mark.slow

MILLION = 10 ** 6


def test_spin_matches_trace_up_to_1e5():
    report = run_verify('spin-ap', x_max=10 ** 5, d=1)
    assert report.failures == 0 and report.checked > 2000


def test_cube_density_for_gaussian_integers():
    report = run_density(ScanConfig(d=1, x_max=MILLION))
    assert 19_000 < report.q_total < 20_500
    assert abs(report.fraction - 1 / 3) <= 0.01


@pytest.mark.parametrize('d', [2, 7, 11])
def test_cube_density_for_other_fields(d):
    report = run_density(ScanConfig(d=d, x_max=MILLION))
    assert abs(report.fraction - 1 / 3) <= 0.015


@pytest.mark.parametrize('m', [5, 7])
def test_mth_power_density(m):
    report = run_density(ScanConfig(d=1, x_max=MILLION, m=m, mode='ap'))
    assert abs(report.fraction - 1 / m) <= 0.02


def test_spin_sum_cancellation():
    report = run_spinsum(ScanConfig(d=1, x_max=MILLION, checkpoints=(10 ** 4, 10 ** 5, MILLION)))
    for row in report.rows:
        assert row.A == 6 * row.c - 2 * row.q
        assert row.norm ** 5 <= row.x ** 8


@pytest.mark.parametrize('suite, kwargs', [
    ('reciprocity', {'n': 1000, 'seed': 1}),
    ('lowering-split', {'n': 200}),
    ('lowering-inert', {'n': 200}),
    ('galois-orbit', {'x_max': 10 ** 5}),
    ('unit-independence', {'x_max': 10 ** 5}),
    ('lsplit2', {'x_max': 10 ** 5}),
    ('magic-crosscheck', {'x_max': 10 ** 4}),
])
def test_property_suites(suite, kwargs):
    assert run_verify(suite, **kwargs).failures == 0


def test_density_with_congruence_restriction():
    report = run_density(ScanConfig(d=1, x_max=MILLION, residue_filters=((5, 1),)))
    assert abs(report.fraction - 1 / 3) <= 0.02


def test_output_is_independent_of_worker_count(tmp_path):
    cfg = ScanConfig(d=1, x_max=MILLION)
    export(run_scan(cfg), 'csv', tmp_path / 'one.csv')
    export(run_scan(replace(cfg, workers=8)), 'csv', tmp_path / 'eight.csv')
    assert (tmp_path / 'one.csv').read_bytes() == (tmp_path / 'eight.csv').read_bytes()
