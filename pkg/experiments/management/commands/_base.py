"""
Shared option handling and error mapping for the experiment commands.
"""
import json
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from cubicspin.exceptions import (
    CacheCorrupt, ConfigError, CubicSpinError, IoError, PreconditionViolated, SuiteFailure,
)
from experiments.serializers import build_scan_config

logger = logging.getLogger('cubicspin')

# exit status per error class, most specific first
EXIT_CODES = (
    (SuiteFailure, 1),
    (ConfigError, 2),
    (IoError, 2),
    (CacheCorrupt, 2),
    (PreconditionViolated, 2),
    (CubicSpinError, 1),
)


class ExperimentCommand(BaseCommand):
    """Base class: subclasses implement run(**options)."""

    def add_order_arguments(self, parser):
        parser.add_argument('--d', type=int, default=1, help='Squarefree d of Q(sqrt(-d))')
        parser.add_argument('--f', type=int, default=1, help='Conductor of the order Z[f sqrt(-d)]')
        parser.add_argument('--m', type=int, default=3, help='Power-residue degree')

    def add_scan_arguments(self, parser):
        self.add_order_arguments(parser)
        parser.add_argument('--xmax', type=int, default=1000, help='Scan bound, inclusive')
        parser.add_argument('--filter', action='append', default=[], metavar='MOD:RES',
                            help='Keep only p = RES mod MOD (repeatable)')
        parser.add_argument('--mode', choices=['spin', 'ap', 'both'], default='both')
        parser.add_argument('--checkpoints', default='', help='Comma-separated X values')
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument('--cache', default=None, help='Cache file (bare names go to CACHE_DIR)')
        parser.add_argument('--workers', type=int, default=None)

    def scan_config(self, options):
        data = {
            'd': options['d'],
            'f': options['f'],
            'x_max': options['xmax'],
            'filters': options['filter'],
            'm': options['m'],
            'mode': options['mode'],
            'checkpoints': [c for c in options['checkpoints'].split(',') if c.strip()],
            'cache': options['cache'],
        }
        for key in ('seed', 'workers'):
            if options.get(key) is not None:
                data[key] = options[key]
        return build_scan_config(data)

    def write_json(self, data):
        self.stdout.write(json.dumps(data, indent=2))

    def handle(self, *args, **options):
        try:
            return self.run(*args, **options)
        except CubicSpinError as e:
            for error_class, code in EXIT_CODES:
                if isinstance(e, error_class):
                    logger.error(f"{type(e).__name__}: {e}")
                    raise CommandError(str(e), returncode=code) from e
            raise

    def run(self, *args, **options):
        raise NotImplementedError


def default_workers():
    return settings.SCAN_WORKERS
