from experiments.management.commands._base import ExperimentCommand
from experiments.reports import run_density
from experiments.serializers import DensityReportSerializer


class Command(ExperimentCommand):
    help = 'Fraction of qualifying primes whose trace is a cube (m-th power for --m)'

    def add_arguments(self, parser):
        self.add_scan_arguments(parser)

    def run(self, *args, **options):
        report = run_density(self.scan_config(options))
        self.write_json(DensityReportSerializer(report).data)
