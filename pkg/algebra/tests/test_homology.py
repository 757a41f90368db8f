import numpy as np
from django.test import SimpleTestCase

from algebra.errors import InvalidParameters, ResourceLimitExceeded
from algebra.homology import (
    GF2, GF3, RATIONALS, FieldSpec, boundary_matrix, chain_complex, dump_matrix_market,
    enumerate_faces, matrix_rank, nerve_faces, reduced_homology_dims,
)
from algebra.path_ideals import build_cycle_complex, make_params
from algebra.simplicial_core import SimplicialComplex, complement_complex
from algebra.verification import valid_triples

# six-vertex triangulation of the real projective plane
RP2 = SimplicialComplex.from_facets([
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2],
    [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4],
])


def cycle_complements(max_n):
    triples, _ = valid_triples(4, max_n)
    for triple in triples:
        delta = build_cycle_complex(make_params(*triple))
        yield triple, complement_complex(delta, delta.vertices)


class FieldSpecTests(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(FieldSpec.parse('0'), RATIONALS)
        self.assertEqual(FieldSpec.parse(7).label, 'GF(7)')
        self.assertEqual(RATIONALS.label, 'QQ')

    def test_rejects_composites_and_garbage(self):
        for code in (4, -3, 'x', None):
            with self.assertRaises(InvalidParameters):
                FieldSpec.parse(code)


class FaceEnumerationTests(SimpleTestCase):
    def test_edge(self):
        chain = enumerate_faces(SimplicialComplex.from_facets([[1, 2]]))
        self.assertEqual(chain.faces_by_dim, {-1: [()], 0: [(1,), (2,)], 1: [(1, 2)]})

    def test_path_complex_of_c4(self):
        chain = enumerate_faces(build_cycle_complex(make_params(4, 3, 2)))
        self.assertEqual([chain.count(d) for d in range(-1, 3)], [1, 4, 5, 2])

    def test_void_has_no_faces(self):
        self.assertEqual(enumerate_faces(SimplicialComplex.void()).total(), 0)

    def test_budget(self):
        with self.assertRaises(ResourceLimitExceeded) as ctx:
            enumerate_faces(SimplicialComplex.simplex(range(1, 6)), budget=16)
        self.assertEqual(ctx.exception.size, 32)
        self.assertEqual(ctx.exception.exit_code, 3)

    def test_nerve_of_empty_face(self):
        self.assertEqual(nerve_faces(SimplicialComplex.empty_face()).faces_by_dim, {-1: [()]})

    def test_unknown_method(self):
        with self.assertRaises(InvalidParameters):
            chain_complex(RP2, method='cells')


class BoundaryTests(SimpleTestCase):
    def test_boundary_of_two_points(self):
        chain = enumerate_faces(SimplicialComplex.from_facets([[4], [2]]))
        np.testing.assert_array_equal(boundary_matrix(chain, 0), np.array([[1, 1]]))

    def test_boundary_of_an_edge(self):
        chain = enumerate_faces(SimplicialComplex.from_facets([[1, 2]]))
        np.testing.assert_array_equal(boundary_matrix(chain, 1), np.array([[-1], [1]]))

    def test_boundary_squares_to_zero(self):
        chain = enumerate_faces(RP2)
        for d in range(1, chain.top_dimension + 1):
            product = boundary_matrix(chain, d - 1) @ boundary_matrix(chain, d)
            self.assertFalse(product.any(), d)

    def test_matrix_market(self):
        text = dump_matrix_market(np.array([[1, 1]]))
        self.assertEqual(text, '%%MatrixMarket matrix coordinate integer general\n1 2 2\n1 1 1\n1 2 1\n')


class RankTests(SimpleTestCase):
    def test_rank_depends_on_characteristic(self):
        matrix = np.array([[2, 0], [0, 2]])
        self.assertEqual(matrix_rank(matrix, GF2), 0)
        self.assertEqual(matrix_rank(matrix, GF3), 2)
        self.assertEqual(matrix_rank(matrix, RATIONALS), 2)

    def test_dependent_rows(self):
        matrix = np.array([[1, 1, 0], [0, 1, 1], [1, 0, -1]])
        self.assertEqual(matrix_rank(matrix, RATIONALS), 2)
        self.assertEqual(matrix_rank(matrix, GF3), 2)
        self.assertEqual(matrix_rank(matrix, GF2), 2)

    def test_empty_matrix(self):
        self.assertEqual(matrix_rank(np.zeros((0, 3), dtype=np.int64)), 0)


class ReducedHomologyTests(SimpleTestCase):
    def test_empty_face(self):
        self.assertEqual(reduced_homology_dims(SimplicialComplex.empty_face()).nonzero(), {-1: 1})

    def test_void(self):
        self.assertTrue(reduced_homology_dims(SimplicialComplex.void()).is_zero())

    def test_two_points(self):
        delta = SimplicialComplex.from_facets([[4], [2]])
        self.assertEqual(reduced_homology_dims(delta).nonzero(), {0: 1})

    def test_cone_is_acyclic(self):
        delta = SimplicialComplex.from_facets([[1, 2], [1, 3], [1, 4, 5]])
        for field_spec in (GF2, GF3, RATIONALS):
            self.assertTrue(reduced_homology_dims(delta, field_spec).is_zero())

    def test_simplex_is_acyclic(self):
        self.assertTrue(reduced_homology_dims(SimplicialComplex.simplex(range(1, 5))).is_zero())

    def test_projective_plane_sees_the_field(self):
        self.assertEqual(reduced_homology_dims(RP2, GF2).nonzero(), {1: 1, 2: 1})
        self.assertTrue(reduced_homology_dims(RP2, GF3).is_zero())
        self.assertTrue(reduced_homology_dims(RP2, RATIONALS).is_zero())

    def test_euler_characteristic(self):
        chain = enumerate_faces(RP2)
        dims = reduced_homology_dims(RP2, GF2, method='faces')
        self.assertEqual(chain.euler_characteristic(), dims.euler_characteristic())

    def test_nerve_agrees_with_faces(self):
        for triple, complement in cycle_complements(8):
            by_faces = reduced_homology_dims(complement, GF2, method='faces')
            by_nerve = reduced_homology_dims(complement, GF2, method='nerve')
            self.assertEqual(by_faces.nonzero(), by_nerve.nonzero(), triple)

    def test_cycle_complements_do_not_depend_on_the_field(self):
        for triple, complement in cycle_complements(8):
            reference = reduced_homology_dims(complement, GF2).nonzero()
            for field_spec in (GF3, RATIONALS):
                self.assertEqual(reduced_homology_dims(complement, field_spec).nonzero(), reference, triple)
