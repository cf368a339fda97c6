from experiments.management.commands._base import ExperimentCommand
from experiments.reports import run_spinsum
from experiments.serializers import SpinSumReportSerializer


class Command(ExperimentCommand):
    help = 'Spin-sum S(X) over the primes of norm up to X'

    def add_arguments(self, parser):
        self.add_scan_arguments(parser)
        parser.add_argument('--single', action='store_true',
                            help='Count only the canonical prime above each p')

    def run(self, *args, **options):
        report = run_spinsum(self.scan_config(options), full_orbit=not options['single'])
        self.write_json(SpinSumReportSerializer(report).data)
