from django.test import SimpleTestCase

from algebra.errors import InvalidParameters
from algebra.path_ideals import (
    MonomialIdeal, RunProfile, build_cycle_complex, build_E_complex, build_line_complex,
    build_run_complex, classify_runs, cycle_path_ideal, facet_ideal, is_canonical_triple,
    make_params, normalize_step, run_sequence, run_vertex_count,
)
from algebra.simplicial_core import SimplicialComplex
from algebra.verification import valid_triples


def fs(*vertices):
    return frozenset(vertices)


class NormalizeStepTests(SimpleTestCase):
    def test_gcd_collapse(self):
        self.assertEqual(normalize_step(5, 12, 11), 1)
        self.assertEqual(normalize_step(7, 12, 11), 1)
        self.assertEqual(normalize_step(10, 12, 11), 2)
        self.assertEqual(normalize_step(3, 6), 3)

    def test_step_not_below_m(self):
        with self.assertRaises(InvalidParameters):
            normalize_step(3, 4, 3)

    def test_multiple_of_n(self):
        with self.assertRaises(InvalidParameters):
            normalize_step(6, 6)

    def test_non_positive(self):
        with self.assertRaises(InvalidParameters):
            normalize_step(0, 6)

    def test_boolean_is_not_a_step(self):
        with self.assertRaises(InvalidParameters):
            normalize_step(True, 6)


class CycleParamsTests(SimpleTestCase):
    def test_c6_m3_l2(self):
        params = make_params(6, 3, 2)
        self.assertEqual((params.l, params.s, params.t, params.k, params.p, params.d), (2, 1, 1, 3, 1, 1))
        self.assertEqual(params.label, 'I_{3,2}(C_6)')

    def test_c4_m3_l2(self):
        params = make_params(4, 3, 2)
        self.assertEqual((params.s, params.t, params.k, params.p, params.d), (1, 1, 2, 1, 0))

    def test_c12_m11_l4(self):
        params = make_params(12, 11, 4)
        self.assertEqual((params.l, params.s, params.t, params.k, params.p, params.d), (4, 3, 2, 3, 1, 0))

    def test_raw_step_is_kept(self):
        params = make_params(12, 11, 5)
        self.assertEqual((params.l, params.l_raw, params.t, params.k), (1, 5, 11, 12))
        self.assertEqual(params.as_dict()['l_raw'], 5)

    def test_path_length_range(self):
        for n, m, l in ((4, 5, 1), (4, 1, 1), (4, 3, 3)):
            with self.assertRaises(InvalidParameters):
                make_params(n, m, l)

    def test_non_integer(self):
        with self.assertRaises(InvalidParameters):
            make_params(6.0, 3, 2)

    def test_canonical_triples(self):
        self.assertTrue(is_canonical_triple(6, 3, 2))
        self.assertFalse(is_canonical_triple(6, 3, 4))
        self.assertFalse(is_canonical_triple(6, 4, 5))


class CycleComplexTests(SimpleTestCase):
    def test_c4(self):
        delta = build_cycle_complex(make_params(4, 3, 2))
        self.assertEqual(delta.facets, (fs(1, 2, 3), fs(3, 4, 1)))

    def test_c6(self):
        self.assertEqual(build_cycle_complex(make_params(6, 3, 2)).facets,
                         (fs(1, 2, 3), fs(3, 4, 5), fs(5, 6, 1)))
        self.assertEqual(build_cycle_complex(make_params(6, 5, 3)).facets,
                         (fs(1, 2, 3, 4, 5), fs(4, 5, 6, 1, 2)))

    def test_facet_count_and_difference(self):
        triples, _ = valid_triples(4, 10)
        for n, m, l in triples:
            delta = build_cycle_complex(make_params(n, m, l))
            self.assertEqual(len(delta), n // l, (n, m, l))
            self.assertEqual(delta.vertices, frozenset(range(1, n + 1)))
            if m + l <= n:
                facets = delta.facets
                for i, facet in enumerate(facets):
                    self.assertEqual(len(facet - facets[(i + 1) % len(facets)]), l, (n, m, l))

    def test_step_normalization_preserves_the_complex(self):
        for n in range(4, 13):
            for m in range(2, n + 1):
                for raw in range(1, m):
                    unreduced = SimplicialComplex.from_facets(
                        [[(i - 1) * raw + j for j in range(1, m + 1)] for i in range(1, n + 1)],
                        modulus=n,
                    )
                    self.assertEqual(build_cycle_complex(make_params(n, m, raw)), unreduced, (n, m, raw))


class RunTests(SimpleTestCase):
    def test_run_complexes(self):
        self.assertEqual(build_run_complex(1, 3, 2).facets, (fs(1, 2, 3),))
        self.assertEqual(build_run_complex(2, 3, 2).facets, (fs(1, 2, 3), fs(3, 4, 5)))
        self.assertEqual(len(build_run_complex(3, 5, 3).universe), 11)

    def test_run_vertex_count(self):
        for length in range(1, 6):
            for m in range(2, 6):
                for l in range(1, m):
                    run = build_run_complex(length, m, l)
                    self.assertEqual(len(run.vertices), run_vertex_count(length, m, l))
                    self.assertEqual(len(run), length)

    def test_bad_run_shape(self):
        with self.assertRaises(InvalidParameters):
            build_run_complex(0, 3, 2)
        with self.assertRaises(InvalidParameters):
            build_run_complex(2, 2, 2)

    def test_run_sequence_is_disjoint(self):
        gamma = run_sequence([2, 1], 3, 2)
        self.assertEqual(gamma.facets, (fs(1, 2, 3), fs(3, 4, 5), fs(6, 7, 8)))
        self.assertEqual(gamma.universe, frozenset(range(1, 9)))

    def test_e_complexes(self):
        self.assertTrue(build_E_complex([1], 3, 2).is_empty_face)
        self.assertEqual(set(build_E_complex([2], 3, 2).facets), {fs(4, 5), fs(1, 2)})
        self.assertEqual(set(build_E_complex([1, 1], 2, 1).facets), {fs(3, 4), fs(1, 2)})

    def test_empty_run_sequence(self):
        with self.assertRaises(InvalidParameters):
            build_E_complex([], 3, 2)

    def test_line_complex(self):
        line = build_line_complex(5, 3)
        self.assertEqual(line.facets, (fs(1, 2, 3), fs(2, 3, 4), fs(3, 4, 5)))
        with self.assertRaises(InvalidParameters):
            build_line_complex(2, 3)


class RunProfileTests(SimpleTestCase):
    def test_classify(self):
        profile = classify_runs([1, 4, 2, 5], 2)
        self.assertEqual(profile, RunProfile(alpha_runs=(0, 1), beta_runs=(0, 1)))
        self.assertEqual((profile.P, profile.Q, profile.alpha, profile.beta), (1, 1, 2, 2))
        self.assertEqual(profile.homology_degree, 2 * 2 + 2 * 2 + 2 - 2)
        self.assertEqual(profile.run_lengths(2), [1, 4, 2, 5])

    def test_other_residues(self):
        self.assertIsNone(classify_runs([1, 3], 2))
        self.assertIsNone(classify_runs([4], 3))

    def test_vertex_count_matches_runs(self):
        profile = RunProfile(alpha_runs=(1,), beta_runs=(0,))
        m, l, t = 5, 2, 2
        lengths = profile.run_lengths(t)
        self.assertEqual(profile.vertex_count(m, l, t), sum(run_vertex_count(s, m, l) for s in lengths))

    def test_negative_entries(self):
        with self.assertRaises(InvalidParameters):
            RunProfile(alpha_runs=(-1,))


class IdealTests(SimpleTestCase):
    def test_c4_generators(self):
        self.assertEqual(str(cycle_path_ideal(4, 3, 2)), '(x1x2x3, x1x3x4)')

    def test_c6_generators(self):
        self.assertEqual(str(cycle_path_ideal(6, 3, 2)), '(x1x2x3, x3x4x5, x1x5x6)')
        self.assertEqual(str(cycle_path_ideal(6, 5, 3)), '(x1x2x3x4x5, x1x2x4x5x6)')

    def test_c12_generator_counts(self):
        counts = [len(cycle_path_ideal(12, 11, l).generators) for l in range(1, 11)]
        self.assertEqual(counts, [12, 6, 4, 3, 12, 2, 12, 3, 4, 6])

    def test_degrees(self):
        self.assertEqual(cycle_path_ideal(6, 3, 2).degrees(), [3, 3, 3])

    def test_from_supports_keeps_minimal_generators(self):
        ideal = MonomialIdeal.from_supports([[1, 2], [1, 2, 3], [3, 4]])
        self.assertEqual(ideal.generators, (fs(1, 2), fs(3, 4)))
        self.assertEqual(ideal.n, 4)

    def test_from_supports_ring_too_small(self):
        with self.assertRaises(InvalidParameters):
            MonomialIdeal.from_supports([[1, 5]], n=4)

    def test_facet_ideal_of_a_line(self):
        self.assertEqual(str(facet_ideal(build_line_complex(4, 2))), '(x1x2, x2x3, x3x4)')
