"""
Sweep every valid (n, m, l) and compare the closed forms with both oracles.
"""
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from algebra.errors import BettiLabError, ResourceLimitExceeded
from algebra.hochster_oracle import OracleConfig
from algebra.verification import run_sweep

from ._common import FORMATS, as_command_error, dump_json, parse_fields


class Command(BaseCommand):
    help = 'Verify the closed forms against the Hochster oracles over a parameter sweep'

    def add_arguments(self, parser):
        parser.add_argument('--min-n', type=int, default=4)
        parser.add_argument('--max-n', type=int, default=12)
        parser.add_argument('--fields', default=None, help='Comma list of field codes, e.g. 2,3,0')
        parser.add_argument('--max-facets', type=int, default=8,
                            help='Largest total facet count of the E-complex sweep (0 disables it)')
        parser.add_argument('--max-l', type=int, default=3)
        parser.add_argument('--max-t', type=int, default=4)
        parser.add_argument('--line-max-n', type=int, default=10,
                            help='Largest n of the line ideal sweep (0 disables it)')
        parser.add_argument('--workers', type=int, default=None)
        parser.add_argument('--save', action='store_true', help='Persist the run in the database')
        parser.add_argument('--format', choices=FORMATS, default='table')

    def handle(self, *args, **options):
        try:
            fields = parse_fields(options['fields'])
            cfg = OracleConfig.from_settings(
                field=fields[0],
                workers=options['workers'] or getattr(settings, 'BETTI_WORKERS', 1),
            )
            summary = run_sweep(
                min_n=options['min_n'], max_n=options['max_n'], fields=fields, cfg=cfg,
                max_facets=options['max_facets'], line_max_n=options['line_max_n'],
                max_l=options['max_l'], max_t=options['max_t'],
            )
        except BettiLabError as exc:
            raise as_command_error(exc)

        if options['save']:
            from reports.models import VerificationRun

            run = VerificationRun.record(summary)
            self.stdout.write(f"saved verification run #{run.pk}")

        if options['format'] == 'json':
            self.stdout.write(dump_json(summary.as_dict()))
        else:
            fields_label = ', '.join(str(f) for f in fields)
            self.stdout.write(f"n in [{summary.min_n}, {summary.max_n}] over {fields_label}")
            for section, counts in summary.counts_by_section().items():
                line = f"  {section}: {counts['matched']}/{counts['total']} matched"
                if counts['incomplete']:
                    line += f", {counts['incomplete']} over budget"
                self.stdout.write(line)
            self.stdout.write(f"  skipped invalid triples: {summary.skipped_invalid}")
            self.stdout.write(f"  duration: {summary.duration:.2f}s")
            for report in summary.failures():
                for claim in report.failures():
                    self.stdout.write(self.style.ERROR(f"  {report.label} {claim.name}: {claim.detail}"))
            for report in summary.incomplete_reports():
                for claim in report.unchecked():
                    self.stdout.write(self.style.WARNING(f"  {report.label} {claim.name}: {claim.detail}"))

        if summary.mismatched:
            raise CommandError(f"{summary.mismatched} of {summary.total} instances failed", returncode=1)
        if summary.incomplete:
            raise CommandError(
                f"{summary.incomplete} of {summary.total} instances ran over budget and were not checked",
                returncode=ResourceLimitExceeded.exit_code,
            )
        if options['format'] == 'table':
            self.stdout.write(self.style.SUCCESS(f"all {summary.total} instances match"))
