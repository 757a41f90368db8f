"""
Graded Betti table of R/I_{m,l}(C_n) from the closed forms, the oracle, or both.
"""
import io

import pandas as pd
from django.core.management.base import BaseCommand, CommandError

from algebra.closed_forms import betti_table_closed
from algebra.errors import BettiLabError
from algebra.exchange import render_table
from algebra.hochster_oracle import OracleConfig, betti_table
from algebra.path_ideals import build_cycle_complex, make_params

from ._common import as_command_error, dump_json, parse_fields


class Command(BaseCommand):
    help = 'Compute the graded Betti table of R/I_{m,l}(C_n)'

    def add_arguments(self, parser):
        parser.add_argument('-n', type=int, required=True)
        parser.add_argument('-m', type=int, required=True)
        parser.add_argument('-l', type=int, required=True)
        parser.add_argument('--mode', choices=('closed', 'oracle', 'both'), default='both')
        parser.add_argument('--field', default=None, help='0 for the rationals, a prime p for GF(p)')
        parser.add_argument('--method', choices=('facet', 'sr'), default='facet',
                            help='Hochster sum used by the oracle')
        parser.add_argument('--format', choices=('table', 'json', 'csv'), default='table')

    def handle(self, *args, **options):
        mode = options['mode']
        fmt = options['format']
        try:
            params = make_params(options['n'], options['m'], options['l'])
            field_spec = parse_fields(options['field'])[0]
            closed = betti_table_closed(params, OracleConfig.from_settings().facet_subset_budget) \
                if mode in ('closed', 'both') else None
            oracle = None
            if mode in ('oracle', 'both'):
                cfg = OracleConfig.from_settings(field=field_spec)
                oracle = betti_table(build_cycle_complex(params), cfg, method=options['method'])
        except BettiLabError as exc:
            raise as_command_error(exc)

        if mode != 'both':
            table = closed if mode == 'closed' else oracle
            self.stdout.write(render_table(table, fmt))
            return

        differences = closed.differences(oracle)
        matched = not differences
        if fmt == 'json':
            self.stdout.write(dump_json({
                'params': params.as_dict(),
                'field': field_spec.code,
                'closed': closed.records(),
                'oracle': oracle.records(),
                'scope': sorted(closed.scope) if closed.scope is not None else None,
                'match': matched,
                'differences': differences,
            }))
        elif fmt == 'csv':
            frame = pd.concat([
                pd.DataFrame(closed.records(), columns=['i', 'j', 'value']).assign(source='closed'),
                pd.DataFrame(oracle.records(), columns=['i', 'j', 'value']).assign(source='oracle'),
            ], ignore_index=True)[['source', 'i', 'j', 'value']]
            buffer = io.StringIO()
            frame.to_csv(buffer, index=False)
            self.stdout.write(buffer.getvalue())
        else:
            scope = 'all columns' if closed.scope is None else f"columns {sorted(closed.scope)}"
            self.stdout.write(f"{params.label} closed forms ({scope}):")
            self.stdout.write(render_table(closed, 'table'))
            self.stdout.write(f"{params.label} oracle over {field_spec}:")
            self.stdout.write(render_table(oracle, 'table'))

        if not matched:
            raise CommandError(f"{params.label}: closed forms and oracle disagree at {differences}", returncode=1)
        if fmt == 'table':
            self.stdout.write(self.style.SUCCESS('match'))
