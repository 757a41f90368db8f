from django.test import TestCase, override_settings
from django.urls import reverse

from reports.models import VerificationRun


class ParamsViewTests(TestCase):
    def test_params(self):
        response = self.client.get(reverse('params'), {'n': 6, 'm': 3, 'l': 2})
        self.assertEqual(response.status_code, 200)
        payload = response.json()
        self.assertEqual(payload['ideal'], '(x1x2x3, x3x4x5, x1x5x6)')
        self.assertEqual(payload['degrees'], [3, 3, 3])
        self.assertEqual(payload['params']['k'], 3)

    def test_missing_parameter(self):
        response = self.client.get(reverse('params'), {'n': 6, 'm': 3})
        self.assertEqual(response.status_code, 400)
        self.assertIn("'l'", response.json()['error'])

    def test_non_integer(self):
        response = self.client.get(reverse('params'), {'n': 'six', 'm': 3, 'l': 2})
        self.assertEqual(response.status_code, 400)

    def test_step_not_below_m(self):
        response = self.client.get(reverse('params'), {'n': 4, 'm': 3, 'l': 3})
        self.assertEqual(response.status_code, 400)

    def test_post_not_allowed(self):
        response = self.client.post(reverse('params'), {'n': 6, 'm': 3, 'l': 2})
        self.assertEqual(response.status_code, 405)


class BettiViewTests(TestCase):
    def test_closed_by_default(self):
        payload = self.client.get(reverse('betti'), {'n': 5, 'm': 2, 'l': 1}).json()
        self.assertEqual(payload['closed'][-1], {'i': 3, 'j': 5, 'value': 1})
        self.assertNotIn('oracle', payload)
        self.assertIsNone(payload['scope'])

    def test_both(self):
        payload = self.client.get(reverse('betti'), {'n': 4, 'm': 3, 'l': 2, 'mode': 'both'}).json()
        self.assertTrue(payload['match'])
        self.assertEqual(payload['scope'], [0, 4])
        self.assertEqual(payload['differences'], [])
        self.assertEqual(payload['field'], 2)

    def test_unknown_mode(self):
        response = self.client.get(reverse('betti'), {'n': 4, 'm': 3, 'l': 2, 'mode': 'guess'})
        self.assertEqual(response.status_code, 400)

    @override_settings(BETTI_FACET_SUBSET_BUDGET=8)
    def test_budget(self):
        response = self.client.get(reverse('betti'), {'n': 6, 'm': 2, 'l': 1, 'mode': 'oracle'})
        self.assertEqual(response.status_code, 413)


class PdRegViewTests(TestCase):
    def test_both(self):
        payload = self.client.get(reverse('pdreg'), {'n': 6, 'm': 3, 'l': 2, 'mode': 'both', 'field': 0}).json()
        self.assertEqual(payload['closed'], {'pd': 3, 'reg': 3, 'depth': 3})
        self.assertTrue(payload['match'])

    def test_invalid_field(self):
        response = self.client.get(reverse('pdreg'), {'n': 6, 'm': 3, 'l': 2, 'mode': 'both', 'field': 6})
        self.assertEqual(response.status_code, 400)


class HomologyViewTests(TestCase):
    def test_runs(self):
        payload = self.client.get(reverse('homology'), {'runs': '2,1', 'm': 3, 'l': 2}).json()
        self.assertEqual(payload['nonzero'], {'1': 1})
        self.assertEqual(payload['closed'], {'degree': 1, 'dimension': 1})
        self.assertTrue(payload['match'])

    def test_vanishing_run(self):
        payload = self.client.get(reverse('homology'), {'runs': '3', 'm': 2, 'l': 1}).json()
        self.assertEqual(payload['nonzero'], {})
        self.assertTrue(payload['match'])

    def test_bad_runs(self):
        self.assertEqual(self.client.get(reverse('homology'), {'m': 3, 'l': 2}).status_code, 400)
        self.assertEqual(self.client.get(reverse('homology'), {'runs': '2,x', 'm': 3, 'l': 2}).status_code, 400)


class RunsViewTests(TestCase):
    def test_lists_latest_runs(self):
        for status in ('passed', 'failed'):
            VerificationRun.objects.create(min_n=4, max_n=6, fields=[2], total=3, status=status)
        payload = self.client.get(reverse('runs'), {'limit': 1}).json()
        self.assertEqual(len(payload['runs']), 1)
        self.assertEqual(len(self.client.get(reverse('runs')).json()['runs']), 2)
