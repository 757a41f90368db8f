from django.db import models, transaction
import logging

logger = logging.getLogger(__name__)


class VerificationRun(models.Model):
    """One `verify` sweep: its range, fields and aggregate outcome."""
    STATUS_CHOICES = [
        ('passed', 'Passed'),
        ('failed', 'Failed'),
        ('incomplete', 'Incomplete'),
    ]

    created_at = models.DateTimeField(auto_now_add=True)
    min_n = models.IntegerField()
    max_n = models.IntegerField()
    fields = models.JSONField(default=list)  # field codes, 0 = rationals

    total = models.IntegerField(default=0)
    matched = models.IntegerField(default=0)
    mismatched = models.IntegerField(default=0)
    incomplete = models.IntegerField(default=0)  # instances with a claim over budget
    skipped_invalid = models.IntegerField(default=0)
    duration_seconds = models.FloatField(default=0.0)

    status = models.CharField(max_length=20, choices=STATUS_CHOICES)
    summary = models.JSONField(default=dict)

    def __str__(self):
        return f"Run #{self.pk} n={self.min_n}..{self.max_n} ({self.status})"

    @classmethod
    def record(cls, summary) -> 'VerificationRun':
        """Persist a SweepSummary with one InstanceReport per checked instance."""
        with transaction.atomic():
            run = cls.objects.create(
                min_n=summary.min_n,
                max_n=summary.max_n,
                fields=list(summary.fields),
                total=summary.total,
                matched=summary.matched,
                mismatched=summary.mismatched,
                incomplete=summary.incomplete,
                skipped_invalid=summary.skipped_invalid,
                duration_seconds=summary.duration,
                status=summary.status,
                summary=summary.as_dict(),
            )
            InstanceReport.objects.bulk_create([
                InstanceReport(
                    run=run,
                    section=report.section,
                    label=report.label,
                    parameters=report.params,
                    claims=[claim.as_dict() for claim in report.claims],
                    matched=report.matched,
                    status=report.status,
                    duration_seconds=report.duration,
                )
                for report in summary.reports
            ])
        logger.info("stored verification run %s with %d instances", run.pk, summary.total)
        return run

    def as_dict(self):
        return {
            'id': self.pk,
            'created_at': self.created_at.isoformat(),
            'min_n': self.min_n,
            'max_n': self.max_n,
            'fields': self.fields,
            'total': self.total,
            'matched': self.matched,
            'mismatched': self.mismatched,
            'incomplete': self.incomplete,
            'skipped_invalid': self.skipped_invalid,
            'duration_seconds': self.duration_seconds,
            'status': self.status,
        }

    class Meta:
        db_table = 'verification_runs'
        ordering = ['-created_at']
        verbose_name = 'Verification Run'
        verbose_name_plural = 'Verification Runs'


class InstanceReport(models.Model):
    SECTION_CHOICES = [
        ('cycle', 'Path ideal of a cycle'),
        ('e_complex', 'Run-sequence complement'),
        ('line', 'Path ideal of a line'),
    ]
    STATUS_CHOICES = [
        ('match', 'Match'),
        ('mismatch', 'Mismatch'),
        ('incomplete', 'Over budget'),
    ]

    run = models.ForeignKey(VerificationRun, on_delete=models.CASCADE, related_name='instances')
    section = models.CharField(max_length=20, choices=SECTION_CHOICES)
    label = models.CharField(max_length=200)
    parameters = models.JSONField(default=dict)
    claims = models.JSONField(default=list)
    matched = models.BooleanField(default=True)
    status = models.CharField(max_length=20, choices=STATUS_CHOICES, default='match')
    duration_seconds = models.FloatField(default=0.0)

    def __str__(self):
        return f"{self.label} ({self.get_status_display().lower()})"

    def failed_claims(self):
        return [c['name'] for c in self.claims if c.get('status') in ('mismatch', 'error')]

    class Meta:
        db_table = 'instance_reports'
        ordering = ['run', 'id']
        verbose_name = 'Instance Report'
        verbose_name_plural = 'Instance Reports'
