from django.contrib import admin
from django.contrib.auth.models import User
from django.test import TestCase

from algebra.hochster_oracle import OracleConfig
from algebra.verification import ClaimResult, RunReport, SweepSummary, run_sweep
from .models import InstanceReport, VerificationRun


class VerificationRunTests(TestCase):
    def test_record_sweep(self):
        summary = run_sweep(min_n=4, max_n=4, max_facets=1, line_max_n=3, max_l=1, max_t=2)
        run = VerificationRun.record(summary)
        self.assertEqual(run.status, 'passed')
        self.assertEqual(run.total, summary.total)
        self.assertEqual(run.instances.count(), summary.total)
        self.assertEqual(set(run.instances.values_list('section', flat=True)), {'cycle', 'e_complex', 'line'})
        self.assertEqual(run.summary['total'], summary.total)
        self.assertEqual(run.as_dict()['fields'], [2])

    def test_failed_claims(self):
        report = RunReport(section='cycle', label='I_{2,1}(C_5)', params={'n': 5}, claims=[
            ClaimResult('pd_reg', 'match'),
            ClaimResult('bounds', 'mismatch', 'j-i'),
            ClaimResult('double_oracle', 'skipped'),
        ])
        summary = SweepSummary(min_n=5, max_n=5, fields=[2], reports=[report])
        run = VerificationRun.record(summary)
        self.assertEqual(run.status, 'failed')
        self.assertEqual(run.mismatched, 1)
        instance = InstanceReport.objects.get(run=run)
        self.assertFalse(instance.matched)
        self.assertEqual(instance.failed_claims(), ['bounds'])
        self.assertIn('mismatch', str(instance))

    def test_over_budget_run_is_incomplete(self):
        summary = run_sweep(min_n=4, max_n=4, cfg=OracleConfig(facet_subset_budget=1),
                            max_facets=0, line_max_n=0)
        run = VerificationRun.record(summary)
        self.assertEqual(run.status, 'incomplete')
        self.assertEqual(run.incomplete, summary.total)
        self.assertEqual(run.matched, 0)
        instance = run.instances.first()
        self.assertEqual(instance.status, 'incomplete')
        self.assertEqual(instance.failed_claims(), [])
        self.assertIn('over budget', str(instance))


class AdminTests(TestCase):
    def setUp(self):
        self.user = User.objects.create_superuser('admin', 'admin@example.com', 'password')
        self.client.force_login(self.user)

    def test_registered(self):
        self.assertTrue(admin.site.is_registered(VerificationRun))
        self.assertTrue(admin.site.is_registered(InstanceReport))

    def test_changelists(self):
        summary = run_sweep(min_n=4, max_n=4, max_facets=0, line_max_n=0)
        run = VerificationRun.record(summary)
        self.assertEqual(self.client.get('/admin/reports/verificationrun/').status_code, 200)
        self.assertEqual(self.client.get(f'/admin/reports/verificationrun/{run.pk}/change/').status_code, 200)
        self.assertEqual(self.client.get('/admin/reports/instancereport/').status_code, 200)
