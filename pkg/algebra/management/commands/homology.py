"""
Reduced homology of an E-complex, a complex file, or the complement of a
cycle path complex.
"""
from django.core.management.base import BaseCommand, CommandError

from algebra.closed_forms import homology_cycle_complement, homology_E_runs
from algebra.errors import BettiLabError, InvalidParameters
from algebra.exchange import homology_listing, homology_payload, read_complex
from algebra.hochster_oracle import OracleConfig
from algebra.homology import METHODS, boundary_matrix, chain_complex, dump_matrix_market, homology_of_chain
from algebra.path_ideals import build_cycle_complex, build_E_complex, make_params
from algebra.simplicial_core import complement_complex

from ._common import FORMATS, as_command_error, dump_json, parse_fields, parse_runs


class Command(BaseCommand):
    help = 'List the reduced homology dimensions of a simplicial complex'

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--runs', help='Run lengths s1,s2,... of an E-complex (needs -m and -l)')
        source.add_argument('--file', help='Complex in the exchange format')
        source.add_argument('--cycle', action='store_true',
                            help='Complement of the path complex of C_n (needs -n, -m and -l)')
        parser.add_argument('-n', type=int)
        parser.add_argument('-m', type=int)
        parser.add_argument('-l', type=int)
        parser.add_argument('--field', default=None)
        parser.add_argument('--method', choices=METHODS, default='auto')
        parser.add_argument('--dump-boundary', action='store_true',
                            help='Print every boundary matrix in matrix-market form')
        parser.add_argument('--format', choices=FORMATS, default='table')

    def _require(self, options, *names):
        missing = [f"-{name}" for name in names if options.get(name) is None]
        if missing:
            raise InvalidParameters(f"missing {', '.join(missing)}")

    def handle(self, *args, **options):
        expected = None
        try:
            field_spec = parse_fields(options['field'])[0]
            if options['runs']:
                self._require(options, 'm', 'l')
                runs = parse_runs(options['runs'])
                m, l = options['m'], options['l']
                delta = build_E_complex(runs, m, l)
                expected = homology_E_runs(runs, (m - m % l) // l)
                label = f"E({','.join(map(str, runs))}) with m={m}, l={l}"
            elif options['file']:
                delta = read_complex(options['file'])
                label = options['file']
            else:
                self._require(options, 'n', 'm', 'l')
                params = make_params(options['n'], options['m'], options['l'])
                cycle = build_cycle_complex(params)
                delta = complement_complex(cycle, cycle.vertices)
                expected = homology_cycle_complement(params)
                label = f"complement of the path complex of {params.label}"

            cfg = OracleConfig.from_settings(field=field_spec, method=options['method'])
            chain = chain_complex(delta, cfg.face_budget, cfg.method)
            dims = homology_of_chain(chain, field_spec)
        except BettiLabError as exc:
            raise as_command_error(exc)

        if options['dump_boundary']:
            for d in range(0, chain.top_dimension + 1):
                self.stdout.write(f"% boundary d={d}")
                self.stdout.write(dump_matrix_market(boundary_matrix(chain, d)), ending='')

        matched = expected is None or expected.matches(dims)
        if options['format'] == 'json':
            payload = homology_payload(dims)
            payload.update({'source': label, 'field': field_spec.code})
            if expected is not None:
                payload.update({'closed': expected.as_dict(), 'match': matched})
            self.stdout.write(dump_json(payload))
        else:
            self.stdout.write(f"{label} over {field_spec}:")
            for line in homology_listing(dims):
                self.stdout.write(f"  {line}")
            if expected is not None and matched:
                self.stdout.write(self.style.SUCCESS('matches the closed form'))
        if not matched:
            raise CommandError(f"{label}: oracle {dims.nonzero()} vs closed form {expected.as_dims()}",
                               returncode=1)
