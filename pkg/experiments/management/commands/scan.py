from experiments.management.commands._base import ExperimentCommand
from experiments.scan import run_scan
from experiments.storage import FORMATS, export, write_records


class Command(ExperimentCommand):
    help = 'Scan the primes up to --xmax and write one record per qualifying prime'

    def add_arguments(self, parser):
        self.add_scan_arguments(parser)
        parser.add_argument('--out', default=None, help='Output file (stdout when omitted)')
        parser.add_argument('--format', choices=FORMATS, default='csv')

    def run(self, *args, **options):
        cfg = self.scan_config(options)
        records = run_scan(cfg)
        if options['out']:
            count = export(records, options['format'], options['out'])
            self.stderr.write(f"{count} records written to {options['out']}")
        else:
            write_records(records, options['format'], self.stdout)
