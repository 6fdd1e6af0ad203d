"""
Tests for the su(2) family of graded CR algebras
"""
import unittest

from cr_workbench import exactnum as en
from cr_workbench import liecore
from cr_workbench import su2family
from cr_workbench.cralg import cr_dimensions
from cr_workbench.exceptions import PreconditionError


def _commutator(a, b):
    return en.mat_mul(a, b) - en.mat_mul(b, a)


class TestIrrep(unittest.TestCase):
    def test_k1_matrices(self):
        act = su2family.irrep_action(1)
        self.assertEqual(
            en.rows_of(act["H"]),
            [en.vector([-2, 0, 0]), en.vector([0, 0, 0]), en.vector([0, 0, 2])],
        )
        # X+ v-1 = 2 v0
        self.assertEqual(en.rows_of(act["X+"])[1][0], en.scalar(2))

    def test_highest_and_lowest_weight(self):
        for k in range(1, 5):
            act = su2family.irrep_action(k)
            self.assertTrue(en.is_zero_vector(en.columns_of(act["X+"])[2 * k]))
            self.assertTrue(en.is_zero_vector(en.columns_of(act["X-"])[0]))

    def test_representation(self):
        """[X+, X-] = H, [H, X+] = 2X+ and [H, X-] = -2X- on V"""
        for k in range(1, 6):
            with self.subTest(k=k):
                act = su2family.irrep_action(k)
                x_up, x_down, h = act["X+"], act["X-"], act["H"]
                self.assertEqual(en.rows_of(_commutator(x_up, x_down)), en.rows_of(h))
                self.assertEqual(en.rows_of(_commutator(h, x_up)), en.rows_of(x_up + x_up))
                self.assertEqual(en.rows_of(_commutator(x_down, h)), en.rows_of(x_down + x_down))
                diagonal = [en.rows_of(h)[i][i] for i in range(2 * k + 1)]
                self.assertEqual(diagonal, [en.scalar(2 * j) for j in range(-k, k + 1)])

    def test_bad_k(self):
        for k in (0, -1, True, 1.5):
            with self.subTest(k=k):
                with self.assertRaises(PreconditionError):
                    su2family.irrep_action(k)
                with self.assertRaises(PreconditionError):
                    su2family.build_family(k)


class TestFamily(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.families = {k: su2family.build_family(k) for k in range(1, 5)}

    def test_shape(self):
        for k, family in self.families.items():
            self.assertEqual(family.g.dim, 2 * k + 4)
            self.assertEqual(family.f.dim, k + 2)
            self.assertEqual(family.g.grades, tuple([-1, 0, 1] + list(range(-k, k + 1))))
            self.assertEqual(su2family.v_index(k, k), 2 * k + 3)
        with self.assertRaises(IndexError):
            su2family.v_index(2, 3)

    def test_abelian_module(self):
        family = self.families[2]
        g = family.g
        self.assertTrue(en.is_zero_vector(g.bracket(family.v(1), family.v(2))))
        self.assertTrue(en.is_zero_vector(g.bracket(g.basis_vector("H"), g.basis_vector("H"))))
        sl2 = su2family.build_sl2()
        self.assertTrue(en.is_zero_vector(sl2.bracket(sl2.basis_vector("H"), sl2.basis_vector("H"))))

    def test_tau(self):
        family = self.families[2]
        g, tau = family.g, family.tau
        i_h = g.element({"H": en.I})
        self.assertEqual(tau.apply(i_h), i_h)
        self.assertEqual(tau.apply(family.v(0)), family.v(0))
        self.assertEqual(tau.apply(family.v(1)), en.vneg(family.v(-1)))
        self.assertEqual(tau.apply(family.v(2)), family.v(-2))
        self.assertEqual(su2family.build_tau(2).apply(g.basis_vector("X+")), en.vneg(g.basis_vector("X-")))

    def test_f_and_tau_f(self):
        for k, family in self.families.items():
            g, a = family.g, family.cr_algebra()
            expected = g.span(["H", "X-"] + [su2family.v_label(-h) for h in range(1, k + 1)])
            self.assertEqual(a.tau_f, expected)
            self.assertEqual(a.isotropy, g.span(["H"]))
            self.assertEqual(a.f_plus_tau_f.dim, 2 * k + 3)
            self.assertEqual(cr_dimensions(a), (k + 1, 1))

    def test_expected_freeman_step(self):
        family = self.families[3]
        self.assertEqual(family.expected_freeman_step(1), family.g.span(["H", "v2", "v3"]))
        self.assertEqual(family.expected_freeman_step(3), family.g.span(["H"]))


class TestPauli(unittest.TestCase):
    def test_pauli_relations(self):
        """[s1, s2] = s3, [s2, s3] = s1, [s3, s1] = s2 and tau fixes every s_i"""
        family = su2family.build_family(1)
        g, tau = family.g, family.tau
        s1, s2, s3 = su2family.family_pauli(1)
        self.assertEqual(g.bracket(s1, s2), s3)
        self.assertEqual(g.bracket(s2, s3), s1)
        self.assertEqual(g.bracket(s3, s1), s2)
        self.assertEqual(g.bracket(s3, s2), en.vneg(s1))
        for s in (s1, s2, s3):
            self.assertEqual(tau.apply(s), s)

    def test_pauli_basis_in_sl2(self):
        sl2 = su2family.build_sl2()
        s1, s2, s3 = su2family.pauli_basis()
        self.assertEqual(sl2.bracket(s1, s2), s3)


class TestControlCases(unittest.TestCase):
    def test_su2_borel(self):
        a = su2family.build_su2_borel()
        self.assertEqual(cr_dimensions(a), (1, 0))
        self.assertEqual(a.isotropy, a.g.span(["H"]))
        self.assertTrue(liecore.check_involution(a.g, a.tau).passed)

    def test_weight_rotation_sign(self):
        """J agrees with -(1/h) ad(sigma3) on every direction"""
        for k in range(1, 7):
            with self.subTest(k=k):
                result = su2family.weight_rotation_sign(k)
                self.assertEqual(result["sign"], -1)
                self.assertEqual(len(result["directions"]), 2 + 2 * k)
                self.assertEqual(set(result["directions"].values()), {-1})
