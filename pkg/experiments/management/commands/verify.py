from experiments.management.commands._base import ExperimentCommand, default_workers
from experiments.serializers import VerifyReportSerializer
from experiments.suites import SUITES, run_verify


class Command(ExperimentCommand):
    help = 'Run a property suite; exits 1 with the smallest counterexample on failure'

    def add_arguments(self, parser):
        parser.add_argument('suite', choices=sorted(SUITES))
        self.add_order_arguments(parser)
        parser.add_argument('--n', type=int, default=None, help='Number of random samples')
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument('--xmax', type=int, default=None)
        parser.add_argument('--workers', type=int, default=None)

    def run(self, *args, **options):
        report = run_verify(
            options['suite'], seed=options['seed'], n=options['n'], x_max=options['xmax'],
            d=options['d'], f=options['f'], m=options['m'],
            workers=options['workers'] or default_workers(),
        )
        self.write_json(VerifyReportSerializer(report).data)
