"""
Print the parameter arithmetic (l, s, t, k, p, d) of I_{m,l}(C_n).
"""
from django.core.management.base import BaseCommand

from algebra.errors import BettiLabError
from algebra.path_ideals import build_cycle_complex, facet_ideal, make_params

from ._common import FORMATS, as_command_error, dump_json


class Command(BaseCommand):
    help = 'Show the normalized parameters of the path ideal I_{m,l}(C_n)'

    def add_arguments(self, parser):
        parser.add_argument('-n', type=int, required=True, help='Number of cycle vertices')
        parser.add_argument('-m', type=int, required=True, help='Path length')
        parser.add_argument('-l', type=int, required=True, help='Raw step (normalized to gcd(l, n))')
        parser.add_argument('--format', choices=FORMATS, default='table')

    def handle(self, *args, **options):
        try:
            params = make_params(options['n'], options['m'], options['l'])
            ideal = facet_ideal(build_cycle_complex(params))
        except BettiLabError as exc:
            raise as_command_error(exc)

        if options['format'] == 'json':
            payload = params.as_dict()
            payload['ideal'] = str(ideal)
            self.stdout.write(dump_json(payload))
            return

        self.stdout.write(
            f"n={params.n} m={params.m} l={params.l} (raw {params.l_raw}) "
            f"s={params.s} t={params.t} k={params.k} p={params.p} d={params.d}"
        )
        if params.l != params.l_raw:
            self.stdout.write(self.style.WARNING(f"step normalized from {params.l_raw} to {params.l}"))
        self.stdout.write(f"{params.label} = {ideal}")
