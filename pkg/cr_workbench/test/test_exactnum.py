"""
Tests for exact Gaussian-rational arithmetic, row reduction and subspaces
"""
import unittest

from cr_workbench import exactnum as en
from cr_workbench.exceptions import DimensionMismatch, ExactArithmeticError, PreconditionError


def _random_matrix(rng, m, n, bound=3):
    return en.matrix([[en.random_scalar(rng, bound) for _ in range(n)] for _ in range(m)], n)


def _random_subspace(rng, n, k):
    return en.Subspace.span([en.random_vector(rng, n, 3) for _ in range(k)], n)


class TestScalars(unittest.TestCase):
    def test_field_operations(self):
        """(1 + i)(1 - i) = 2, inverses and conjugates are exact"""
        self.assertEqual(en.gq(1, 1) * en.gq(1, -1), en.gq(2))
        self.assertEqual(en.conjugate(en.gq("3/2", "-1/4")), en.gq("3/2", "1/4"))
        self.assertEqual(en.invert(en.gq(0, 2)), en.gq(0, "-1/2"))
        self.assertEqual(en.divide(en.gq(1), en.I), -en.I)
        self.assertEqual(en.I * en.I, -en.ONE)
        z = en.gq("3/2", "-1/4")
        self.assertEqual(en.add(z, en.negate(z)), en.ZERO)
        self.assertEqual(en.multiply(z, en.invert(z)), en.ONE)
        self.assertEqual(en.real_part(z), en.parse_rational("3/2"))
        self.assertEqual(en.imag_part(z), en.parse_rational("-1/4"))
        self.assertFalse(en.is_real(z))

    def test_invert_zero(self):
        with self.assertRaisesRegex(ExactArithmeticError, "Cannot invert zero"):
            en.invert(en.ZERO)

    def test_rationals_are_canonical(self):
        """-6/4 is stored and written as -3/2"""
        self.assertEqual(en.scalar_to_json(en.gq("-6/4", 0)), {"re": "-3/2", "im": "0/1"})
        self.assertEqual(en.format_rational(en.parse_rational("4/2")), "2/1")
        self.assertEqual(en.format_rational(en.parse_rational(" -7 ")), "-7/1")
        self.assertEqual(en.scalar_from_json({"re": "1/2", "im": "-3/1"}), en.gq("1/2", -3))

    def test_parse_rational_errors(self):
        with self.assertRaisesRegex(ExactArithmeticError, "Zero denominator"):
            en.parse_rational("3/0")
        with self.assertRaisesRegex(ValueError, "Not a rational number"):
            en.parse_rational("abc")
        with self.assertRaisesRegex(ValueError, "Not a rational number"):
            en.parse_rational("0.5")

    def test_format_scalar(self):
        cases = [
            (en.gq(0, -1), "-i"),
            (en.gq(0, 1), "i"),
            (en.gq("1/2", "1/4"), "1/2 + 1/4i"),
            (en.gq(3, 0), "3"),
            (en.gq(1, -2), "1 - 2i"),
            (en.ZERO, "0"),
        ]
        for value, expected in cases:
            with self.subTest(expected=expected):
                self.assertEqual(en.format_scalar(value), expected)

    def test_realify(self):
        v = en.vector([en.gq(1, 2), en.gq("1/3", -1)])
        self.assertEqual(en.realify(v), en.vector([1, "1/3", 2, -1]))
        self.assertEqual(en.complexify(en.realify(v)), v)


class TestVectorsAndMatrices(unittest.TestCase):
    def test_length_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            en.vadd(en.zero_vector(2), en.zero_vector(3))
        with self.assertRaises(DimensionMismatch):
            en.mat_vec(en.identity(2), en.zero_vector(3))
        with self.assertRaises(DimensionMismatch):
            en.matrix([[1, 2], [3]])

    def test_rref_examples(self):
        """rref of the identity, of a zero matrix and of a rank one complex matrix"""
        reduced, pivots, r = en.rref(en.identity(3))
        self.assertEqual(en.rows_of(reduced), en.rows_of(en.identity(3)))
        self.assertEqual((pivots, r), ([0, 1, 2], 3))

        _, pivots, r = en.rref(en.zero_matrix(2, 3))
        self.assertEqual((pivots, r), ([], 0))

        reduced, pivots, r = en.rref(en.matrix([[en.I, 1], [1, -en.I]]))
        self.assertEqual(en.rows_of(reduced), [(en.ONE, -en.I), (en.ZERO, en.ZERO)])
        self.assertEqual((pivots, r), ([0], 1))

    def test_rref_is_idempotent(self):
        rng = en.seeded_rng(7)
        for _ in range(10):
            m = _random_matrix(rng, 3, 4)
            once, _, _ = en.rref(m)
            twice, _, _ = en.rref(once)
            self.assertEqual(en.rows_of(once), en.rows_of(twice))

    def test_rank_nullity(self):
        """rank + dim kernel = number of columns on random matrices"""
        rng = en.seeded_rng(11)
        for shape in [(2, 4), (4, 2), (3, 3), (1, 5)]:
            for _ in range(5):
                m = _random_matrix(rng, *shape)
                with self.subTest(shape=shape):
                    self.assertEqual(en.rank(m) + en.kernel(m).dim, shape[1])

    def test_kernel_vectors_are_solutions(self):
        rng = en.seeded_rng(3)
        m = en.matrix([[1, 2, 3], [2, 4, 6]])
        for v in en.kernel(m).basis:
            self.assertTrue(en.is_zero_vector(en.mat_vec(m, v)))
        m = _random_matrix(rng, 2, 5)
        for v in en.kernel(m).basis:
            self.assertTrue(en.is_zero_vector(en.mat_vec(m, v)))

    def test_kernel_examples(self):
        self.assertEqual(en.kernel(en.identity(3)).dim, 0)
        self.assertEqual(en.kernel(en.zero_matrix(2, 3)), en.Subspace.full(3))
        k = en.kernel(en.matrix([[1, en.I]]))
        self.assertEqual(k, en.Subspace.span([(-en.I, en.ONE)], 2))
        self.assertEqual(k.basis, ((en.ONE, en.I),))

    def test_solve(self):
        e1, e2 = en.unit_vector(3, 0), en.unit_vector(3, 1)
        self.assertEqual(en.solve([e1, e2], en.vector([2, 3, 0])), [en.scalar(2), en.scalar(3)])
        self.assertIsNone(en.solve([e1, e2], en.vector([0, 0, 1])))
        self.assertEqual(en.solve([], en.zero_vector(3)), [])

    def test_mat_mul(self):
        a = en.matrix([[0, 1], [1, 0]])
        self.assertEqual(en.rows_of(en.mat_mul(a, a)), en.rows_of(en.identity(2)))
        with self.assertRaises(DimensionMismatch):
            en.mat_mul(a, en.identity(3))


class TestSubspace(unittest.TestCase):
    def test_canonical_form(self):
        """Different spanning sets of one subspace compare equal"""
        a = en.Subspace.span([en.vector([1, 1, 0]), en.vector([0, 1, 1])], 3)
        b = en.Subspace.span([en.vector([1, 0, -1]), en.vector([2, 3, 1]), en.vector([0, 1, 1])], 3)
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertEqual(a.dim, 2)

    def test_reduce_and_quotient_coords(self):
        e = [en.unit_vector(2, i) for i in range(2)]
        line = en.Subspace.span([e[0]], 2)
        v = en.vadd(e[0], e[1])
        self.assertEqual(line.reduce(v), e[1])
        self.assertEqual(line.quotient_coords(v), (en.ONE,))
        self.assertEqual(line.coordinates(en.vscale(5, e[0])), [en.scalar(5)])
        self.assertIsNone(line.coordinates(v))
        self.assertIn(e[0], line)

    def test_lattice_laws(self):
        """sum and intersection are commutative, sum is associative, dimensions add up"""
        rng = en.seeded_rng(5)
        for _ in range(5):
            a, b, c = (_random_subspace(rng, 4, k) for k in (1, 2, 2))
            self.assertEqual(a + b, b + a)
            self.assertEqual(a & b, b & a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a + b).dim + (a & b).dim, a.dim + b.dim)
            self.assertTrue((a & b) <= a)
            self.assertTrue(a <= a + b)

    def test_intersection_example(self):
        e = [en.unit_vector(3, i) for i in range(3)]
        a = en.Subspace.span([e[0], e[1]], 3)
        b = en.Subspace.span([e[1], e[2]], 3)
        self.assertEqual(a & b, en.Subspace.span([e[1]], 3))
        self.assertEqual(a + b, en.Subspace.full(3))
        self.assertEqual(a & en.Subspace.zero(3), en.Subspace.zero(3))

    def test_complement_and_quotient(self):
        e = [en.unit_vector(3, i) for i in range(3)]
        big = en.Subspace.span([e[0], e[1]], 3)
        sub = en.Subspace.span([e[0]], 3)
        self.assertEqual(big.complement_in(sub), [e[1]])
        quotient = big.quotient_basis(sub)
        self.assertEqual(quotient.basis, (e[1],))
        self.assertEqual(en.quotient_class_coordinates(en.vector([7, 2, 0]), quotient, sub), [en.scalar(2)])
        with self.assertRaisesRegex(PreconditionError, "outside"):
            en.quotient_class_coordinates(e[2], quotient, sub)

    def test_ambient_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            en.Subspace.full(2) + en.Subspace.full(3)
        with self.assertRaises(DimensionMismatch):
            en.Subspace.span([en.zero_vector(2)], 3)
