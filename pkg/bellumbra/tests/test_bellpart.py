import random
from fractions import Fraction

from django.test import SimpleTestCase

from bellumbra import bellpart
from bellumbra.bellpart import (
    RBellSpec, Seq, alternating_cycle_counts, assoc_bell_poly,
    bender_canfield_hypothesis, check_derivative_identity, cycle_counts, e_plus,
    f_family, factorials, family_preset, iterated_family, iterated_sequence, ones,
    parse_seq, partial_bell, partial_bell_row, partial_r_bell, remark_family, shift_seq, v_poly,
    v_poly_umbral,
)
from bellumbra.combinat import lah, stirling1_signed, stirling2
from bellumbra.exactmath import Poly, falling_factorial_poly, poly_derivative, rising_factorial_poly
from bellumbra.rzcert import certify_rz
from bellumbra.umbra import bell_poly, lah_poly, r_bell_poly


class SeqTests(SimpleTestCase):

    def test_one_indexed(self):
        a = Seq([5, 6, 7])
        self.assertEqual(a[1], 5)
        self.assertEqual(a[3], 7)
        with self.assertRaises(IndexError):
            a[0]
        with self.assertRaises(IndexError):
            a[4]

    def test_shift_and_e_plus(self):
        self.assertEqual(shift_seq(ones(2), 2), Seq([0, 0, 1, 1]))
        self.assertEqual(e_plus(Seq([3, 4])), Seq([1, 3, 4]))
        with self.assertRaises(ValueError):
            shift_seq(ones(2), -1)

    def test_presets(self):
        self.assertEqual(parse_seq('ones', 3), Seq([1, 1, 1]))
        self.assertEqual(parse_seq('shift:2', 5), Seq([0, 0, 1, 1, 1]))
        self.assertEqual(parse_seq('factorials', 4), Seq([1, 2, 6, 24]))
        self.assertEqual(parse_seq('cycle', 4), Seq([1, 1, 2, 6]))
        self.assertEqual(parse_seq('alt-cycle', 4), Seq([1, -1, 2, -6]))
        self.assertEqual(parse_seq('["1", "1/2"]', 9), Seq([1, Fraction(1, 2)]))

    def test_bad_presets(self):
        for text in ('twos', 'shift:x', '[1,'):
            with self.assertRaises(ValueError):
                parse_seq(text, 3)

    def test_rbell_spec_rejects_negative_r(self):
        with self.assertRaises(ValueError):
            RBellSpec(ones(2), ones(3), -1)


class PartialBellTests(SimpleTestCase):

    def test_diagonal_and_first_column(self):
        a = Seq([2, 3, 5, 7])
        self.assertEqual(partial_bell(3, 3, a), 8)
        self.assertEqual(partial_bell(4, 1, a), 7)
        self.assertEqual(partial_bell(0, 0, a), 1)
        self.assertEqual(partial_bell(3, 0, a), 0)
        self.assertEqual(partial_bell(2, 3, a), 0)

    def test_classical_sequences(self):
        for n in range(1, 8):
            for k in range(1, n + 1):
                self.assertEqual(partial_bell(n, k, ones(n)), stirling2(n, k))
                self.assertEqual(partial_bell(n, k, factorials(n)), lah(n, k))
                self.assertEqual(partial_bell(n, k, alternating_cycle_counts(n)), stirling1_signed(n, k))

    def test_short_sequence(self):
        with self.assertRaises(ValueError):
            partial_bell(4, 1, Seq([1, 1]))
        with self.assertRaises(ValueError):
            partial_bell(-1, 0, ones(2))

    def test_partial_r_bell(self):
        spec = RBellSpec(ones(4), e_plus(ones(4)), 1)
        # 2! [t^2] (e^t - 1) e^t = 4 - 1
        self.assertEqual(partial_r_bell(2, 1, spec), 3)
        self.assertEqual(partial_r_bell(0, 0, spec), 1)
        self.assertEqual(partial_r_bell(3, 1, RBellSpec(ones(4), ones(5), 0)), partial_bell(3, 1, ones(4)))

    def test_partial_r_bell_without_r_is_partial_bell(self):
        rng = random.Random(17)
        for _ in range(200):
            n = rng.randint(0, 8)
            k = rng.randint(0, n)
            length = max(n, 1)
            a = Seq(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(length))
            b = Seq(rng.randint(-5, 5) for _ in range(length + 1))
            self.assertEqual(partial_r_bell(n, k, RBellSpec(a, b, 0)), partial_bell(n, k, a),
                             (n, k, a.to_json()))
            self.assertEqual(partial_bell_row(n, a)[k], partial_bell(n, k, a))


class VPolyTests(SimpleTestCase):

    def test_ones_give_r_bell(self):
        for n in range(7):
            for r in range(4):
                self.assertEqual(v_poly(n, r, ones(max(n, 1))), r_bell_poly(n, r))

    def test_two_routes_agree(self):
        for name in ('ones', 'shift:1', 'shift:2', 'factorials', 'cycle'):
            a = parse_seq(name, 7)
            for n in range(7):
                for r in range(4):
                    self.assertEqual(v_poly(n, r, a), v_poly_umbral(n, r, a), (name, n, r))

    def test_associated_bell(self):
        self.assertEqual(assoc_bell_poly(2, 4), Poly([0, 1, 3]))
        for m in (2, 3):
            a = parse_seq(f'shift:{m - 1}', 8)
            for n in range(9):
                self.assertEqual(v_poly(n, 0, a), assoc_bell_poly(m, n))
                for r in range(4):
                    self.assertTrue(certify_rz(v_poly(n, r, a)).all_real)


class IteratedFamilyTests(SimpleTestCase):

    def test_level_zero(self):
        family = iterated_family(ones(6), 0, 6)
        self.assertEqual(family, [bell_poly(n) for n in range(7)])
        family = iterated_family(cycle_counts(6), 0, 6)
        self.assertEqual(family, [rising_factorial_poly(n) for n in range(7)])

    def test_first_level(self):
        self.assertEqual(iterated_family(cycle_counts(6), 1, 6), [lah_poly(n) for n in range(7)])
        values = iterated_sequence(ones(5), 1, 5)
        self.assertEqual(values, Seq([1, 3, 12, 60, 358]))

    def test_second_level_is_lah_of_bell(self):
        family = iterated_family(cycle_counts(5), 2, 5)
        for n, p in enumerate(family):
            expected = Poly()
            for k in range(n + 1):
                expected = expected + lah(n, k) * bell_poly(k)
            self.assertEqual(p, expected)

    def test_sequences_feeding_the_remark(self):
        self.assertEqual(iterated_sequence(cycle_counts(5), 0, 5), factorials(5))
        self.assertEqual(remark_family(cycle_counts(5), 0, 4, 2), v_poly(4, 2, factorials(4)))

    def test_hypothesis(self):
        self.assertTrue(bender_canfield_hypothesis(cycle_counts(8), 0, 8).holds)
        self.assertTrue(bender_canfield_hypothesis(cycle_counts(8), 1, 8).holds)

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            iterated_family(ones(3), -1, 3)
        with self.assertRaises(ValueError):
            iterated_family(ones(2), 0, 5)


class ConvolutionFamilyTests(SimpleTestCase):

    def test_exp_family_is_derivative_of_bell(self):
        family = family_preset('exp').family(1, 5)
        for n in range(6):
            self.assertEqual(family[n], poly_derivative(bell_poly(n)))

    def test_log1p_family(self):
        preset = family_preset('log1p')
        self.assertEqual(preset.family(0, 5), [falling_factorial_poly(n) for n in range(6)])
        family = preset.family(2, 6)
        for n in range(2, 7):
            self.assertEqual(family[n], preset.printed_form(n, 2))

    def test_lah_family_uses_prefactor(self):
        preset = family_preset('lah')
        family = preset.family(2, 6)
        for n in range(2, 7):
            self.assertEqual(family[n], preset.derived_form(n, 2))
            self.assertEqual(family[n].degree, n - 2)
        # the printed alternating sum does not match
        self.assertNotEqual(preset.printed_form(2, 1), preset.derived_form(2, 1))

    def test_exp_printed_form_differs_from_derived(self):
        preset = family_preset('exp')
        self.assertEqual(preset.derived_form(3, 1), Poly([1, 6, 3]))
        self.assertEqual(preset.printed_form(3, 1), Poly([1, 12, 3]))

    def test_general_F(self):
        # F = e^t shifts the Bell family: f_n = sum_k C(n, k) B_k(x)
        family = f_family([1] * 6, ones(5), 0, 5)
        self.assertEqual(family[2], bell_poly(2) + 2 * bell_poly(1) + 1)

    def test_scale(self):
        family = f_family([1], ones(4), 1, 4, scale=lambda r: Fraction(1, 3))
        self.assertEqual(family[2], Fraction(1, 3) * poly_derivative(bell_poly(2)))

    def test_derivative_check_detects_a_bad_level(self):
        self.assertFalse(check_derivative_identity([[Poly([0, 0, 1])], [Poly([1])]]))
        self.assertTrue(check_derivative_identity([[Poly([0, 0, 1])], [Poly([0, 2])]]))

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            f_family([1], ones(3), -1, 3)
        with self.assertRaises(ValueError):
            family_preset('sin')

    def test_presets_listed(self):
        self.assertEqual(sorted(bellpart.FAMILY_PRESETS), ['exp', 'lah', 'log', 'log1p'])
