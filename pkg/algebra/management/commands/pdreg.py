"""
Projective dimension, regularity and depth of R/I_{m,l}(C_n).
"""
from django.core.management.base import BaseCommand, CommandError

from algebra.closed_forms import depth, pd_reg
from algebra.errors import BettiLabError
from algebra.hochster_oracle import OracleConfig, betti_table_facet
from algebra.path_ideals import build_cycle_complex, make_params

from ._common import FORMATS, as_command_error, dump_json, parse_fields


class Command(BaseCommand):
    help = 'Report pd, reg and depth of R/I_{m,l}(C_n)'

    def add_arguments(self, parser):
        parser.add_argument('-n', type=int, required=True)
        parser.add_argument('-m', type=int, required=True)
        parser.add_argument('-l', type=int, required=True)
        parser.add_argument('--mode', choices=('closed', 'oracle', 'both'), default='closed')
        parser.add_argument('--field', default=None)
        parser.add_argument('--format', choices=FORMATS, default='table')

    def handle(self, *args, **options):
        mode = options['mode']
        try:
            params = make_params(options['n'], options['m'], options['l'])
            results = {}
            if mode in ('closed', 'both'):
                pd, reg = pd_reg(params)
                results['closed'] = {'pd': pd, 'reg': reg, 'depth': depth(params)}
            if mode in ('oracle', 'both'):
                cfg = OracleConfig.from_settings(field=parse_fields(options['field'])[0])
                table = betti_table_facet(build_cycle_complex(params), cfg)
                results['oracle'] = {'pd': table.pd, 'reg': table.reg, 'depth': params.n - table.pd}
        except BettiLabError as exc:
            raise as_command_error(exc)

        matched = mode != 'both' or results['closed'] == results['oracle']
        if options['format'] == 'json':
            self.stdout.write(dump_json({'params': params.as_dict(), 'match': matched, **results}))
        else:
            for source, values in results.items():
                self.stdout.write(f"{source}: pd {values['pd']}, reg {values['reg']}, depth {values['depth']}")
        if not matched:
            raise CommandError(f"{params.label}: closed {results['closed']} vs oracle {results['oracle']}",
                               returncode=1)
