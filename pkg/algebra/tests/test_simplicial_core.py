from itertools import combinations

from django.test import SimpleTestCase

from algebra.errors import ConsistencyError, InvalidParameters, PreconditionViolation
from algebra.path_ideals import build_cycle_complex, make_params
from algebra.simplicial_core import (
    FacetIndex, SimplicialComplex, complement_complex, connected_components,
    induced_on, is_cone, is_induced_facet_subset, is_pure, reduce_label, restrict_to,
)
from algebra.verification import valid_triples


def fs(*vertices):
    return frozenset(vertices)


class SimplicialComplexTests(SimpleTestCase):
    def test_reduce_label(self):
        self.assertEqual(reduce_label(13, 12), 1)
        self.assertEqual(reduce_label(12, 12), 12)
        self.assertEqual(reduce_label(0, 12), 12)

    def test_from_facets_keeps_maximal_in_order(self):
        delta = SimplicialComplex.from_facets([[3, 4], [1, 2], [3, 4], [4]])
        self.assertEqual(delta.facets, (fs(3, 4), fs(1, 2)))
        delta = SimplicialComplex.from_facets([[1, 2], [2, 1], [1, 2, 3]])
        self.assertEqual(delta.facets, (fs(1, 2, 3),))

    def test_modulus_reduces_labels(self):
        delta = SimplicialComplex.from_facets([[3, 4, 5]], modulus=4)
        self.assertEqual(delta.facets, (fs(3, 4, 1),))
        self.assertEqual(delta.universe, fs(1, 2, 3, 4))

    def test_facet_outside_universe(self):
        with self.assertRaises(PreconditionViolation):
            SimplicialComplex.from_facets([[1, 5]], universe=range(1, 5))

    def test_non_positive_label(self):
        with self.assertRaises(InvalidParameters):
            SimplicialComplex.from_facets([[0, 1]])

    def test_void_and_empty_face_differ(self):
        void = SimplicialComplex.void()
        empty = SimplicialComplex.empty_face()
        self.assertTrue(void.is_void)
        self.assertFalse(void.is_empty_face)
        self.assertTrue(empty.is_empty_face)
        self.assertNotEqual(void, empty)
        self.assertEqual(void.dimension, -2)
        self.assertEqual(empty.dimension, -1)

    def test_equality_ignores_facet_order(self):
        a = SimplicialComplex.from_facets([[1, 2], [2, 3]])
        b = SimplicialComplex.from_facets([[2, 3], [1, 2]])
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))


class ComplementTests(SimpleTestCase):
    def test_two_facets_on_four_vertices(self):
        delta = SimplicialComplex.from_facets([[1, 2, 3], [3, 4, 1]])
        complement = complement_complex(delta, range(1, 5))
        self.assertEqual(set(complement.facets), {fs(4), fs(2)})

    def test_full_simplex_gives_empty_face(self):
        delta = SimplicialComplex.simplex(range(1, 5))
        self.assertTrue(complement_complex(delta, range(1, 5)).is_empty_face)

    def test_two_points(self):
        delta = SimplicialComplex.from_facets([[1], [2]])
        self.assertEqual(set(complement_complex(delta, [1, 2]).facets), {fs(1), fs(2)})

    def test_facet_not_in_vertex_set(self):
        delta = SimplicialComplex.from_facets([[1, 2, 3]])
        with self.assertRaises(PreconditionViolation):
            complement_complex(delta, [1, 2])

    def test_complement_is_an_involution_on_incomparable_complements(self):
        delta = SimplicialComplex.from_facets([[1, 2, 3], [3, 4, 5], [5, 6, 1]])
        once = complement_complex(delta, delta.vertices)
        self.assertEqual(set(once.facets), {fs(4, 5, 6), fs(1, 2, 6), fs(2, 3, 4)})
        self.assertEqual(complement_complex(once, delta.vertices), delta)


class InducedSubcollectionTests(SimpleTestCase):
    def setUp(self):
        self.c6 = SimplicialComplex.from_facets([[1, 2, 3], [3, 4, 5], [5, 6, 1]])

    def test_window(self):
        induced = induced_on(self.c6, range(1, 6))
        self.assertEqual(induced.facets, (fs(1, 2, 3), fs(3, 4, 5)))
        self.assertEqual(induced.vertices, fs(1, 2, 3, 4, 5))

    def test_full_and_empty_window(self):
        self.assertEqual(induced_on(self.c6, range(1, 7)).facets, self.c6.facets)
        self.assertEqual(induced_on(self.c6, []).facets, ())

    def test_window_outside_universe(self):
        with self.assertRaises(PreconditionViolation):
            induced_on(self.c6, [1, 7])

    def test_is_induced_facet_subset(self):
        self.assertTrue(is_induced_facet_subset(self.c6, [[1, 2, 3]]))
        self.assertTrue(is_induced_facet_subset(self.c6, self.c6.facets))
        c4 = SimplicialComplex.from_facets([[1, 2, 3], [3, 4, 1]])
        self.assertTrue(is_induced_facet_subset(c4, [[1, 2, 3]]))
        triangle = SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3]])
        self.assertFalse(is_induced_facet_subset(triangle, [[1, 2], [2, 3]]))

    def test_non_facet_subset(self):
        with self.assertRaises(PreconditionViolation):
            is_induced_facet_subset(self.c6, [[1, 2]])

    def test_induced_iff_window_recovers_subset(self):
        index = FacetIndex(self.c6)
        facets = self.c6.facets
        for size in range(len(facets) + 1):
            for subset in combinations(facets, size):
                window = frozenset().union(*subset) if subset else frozenset()
                recovered = set(induced_on(self.c6, window).facets) == set(subset)
                self.assertEqual(index.is_induced(index.subset_mask(subset)), recovered, subset)


class RestrictionTests(SimpleTestCase):
    def test_restrict(self):
        delta = SimplicialComplex.from_facets([[1, 2, 3], [3, 4]])
        restricted = restrict_to(delta, [1, 3, 4])
        self.assertEqual(set(restricted.facets), {fs(1, 3), fs(3, 4)})
        self.assertTrue(restrict_to(delta, []).is_empty_face)

    def test_restrict_void(self):
        self.assertTrue(restrict_to(SimplicialComplex.void(), [1, 2]).is_void)


class ConeAndPurityTests(SimpleTestCase):
    def test_is_cone(self):
        self.assertTrue(is_cone(SimplicialComplex.from_facets([[1, 2], [1, 3]])))
        self.assertFalse(is_cone(SimplicialComplex.from_facets([[1, 2], [3, 4]])))

    def test_is_cone_on_void(self):
        with self.assertRaises(PreconditionViolation):
            is_cone(SimplicialComplex.void())

    def test_is_pure(self):
        self.assertTrue(is_pure(SimplicialComplex.from_facets([[1, 2], [2, 3]])))
        self.assertFalse(is_pure(SimplicialComplex.from_facets([[1, 2, 3], [3, 4]])))


class ConnectedComponentTests(SimpleTestCase):
    def setUp(self):
        self.c6 = build_cycle_complex(make_params(6, 3, 2))

    def test_without_cycle(self):
        runs = connected_components([[1, 2, 3], [3, 4, 5]])
        self.assertEqual(runs.lengths, [2])
        runs = connected_components([[1, 2], [4, 5]])
        self.assertEqual(runs.lengths, [1, 1])

    def test_proper_subcollection_of_a_cycle(self):
        runs = connected_components(induced_on(self.c6, range(1, 6)), cycle=self.c6)
        self.assertTrue(runs.is_proper)
        self.assertEqual(runs.lengths, [2])
        self.assertEqual(runs.components[0].indices, (0, 1))

    def test_run_across_the_wrap(self):
        runs = connected_components([[5, 6, 1], [1, 2, 3]], cycle=self.c6)
        self.assertEqual(runs.lengths, [2])
        self.assertEqual(runs.components[0].indices, (2, 0))

    def test_full_cycle_is_not_proper(self):
        runs = connected_components(self.c6, cycle=self.c6)
        self.assertFalse(runs.is_proper)
        self.assertEqual(runs.lengths, [3])

    def test_non_consecutive_component(self):
        cycle = build_cycle_complex(make_params(6, 3, 1))
        with self.assertRaises(ConsistencyError):
            connected_components([[1, 2, 3], [3, 4, 5]], cycle=cycle)

    def test_parent_is_not_taken_as_the_cycle(self):
        parent = SimplicialComplex.from_facets([[1, 2], [7, 8], [2, 3], [5, 6]])
        runs = connected_components(induced_on(parent, [1, 2, 3]))
        self.assertEqual(runs.lengths, [2])
        self.assertEqual(runs.components[0].indices, ())
        with self.assertRaises(ConsistencyError):
            connected_components(induced_on(parent, [1, 2, 3]), cycle=parent)

    def test_components_of_proper_induced_subcollections_are_runs(self):
        triples, _ = valid_triples(4, 12)
        for n, m, l in triples:
            delta = build_cycle_complex(make_params(n, m, l))
            index = FacetIndex(delta)
            for mask in range(1, (1 << len(index)) - 1):
                if not index.is_induced(mask):
                    continue
                runs = connected_components(index.facets_of(mask), cycle=delta)
                self.assertTrue(runs.is_proper)
                self.assertEqual(sum(runs.lengths), bin(mask).count('1'))
