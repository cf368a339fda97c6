from cm_ap.traces import build_ap_record
from experiments.management.commands._base import ExperimentCommand
from spin.embedding import embed
from spin.symbols import spin_power_symbol, spin_symbol


class Command(ExperimentCommand):
    help = 'Print the full pipeline for one prime: kappa, r, omega, spin symbol and traces'

    def add_arguments(self, parser):
        parser.add_argument('p', type=int)
        self.add_order_arguments(parser)

    def run(self, *args, **options):
        p, d, f, m = options['p'], options['d'], options['f'], options['m']
        e = embed(p, d, f)
        ms = (m,) if m != 3 else ()
        record = build_ap_record(p, d, f, ms)
        lines = [
            f"p = {p}",
            f"d = {d}",
            f"f = {f}",
            f"kappa = {e.kappa}",
            f"r = {e.r}",
            f"omega = {e.omega}",
            f"spin_k = {spin_symbol(e).k}",
            f"candidates = {','.join(str(t) for t in sorted(record.candidates))}",
            f"ap = {'' if record.ap is None else record.ap}",
            f"cube = {'true' if record.cube else 'false'}",
        ]
        if m != 3 and m in record.m_power:
            lines.append(f"spin_k_{m} = {spin_power_symbol(e, m).k}")
            lines.append(f"power_{m} = {'true' if record.m_power[m] else 'false'}")
        self.stdout.write('\n'.join(lines))
