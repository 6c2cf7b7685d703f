import random
from fractions import Fraction

import sympy
from django.test import SimpleTestCase

from bellumbra.exactmath import (
    ONE, X, ZERO, FactPoly, InternalInconsistency, Poly, TruncSeries,
    divide_by_x_power, falling_factorial_poly, from_falling, monic,
    poly_derivative, poly_divmod, poly_from_json, poly_gcd, poly_shift,
    poly_to_json, primitive, rising_factorial_poly, series_add,
    series_derivative, series_exp, series_from_scalars, series_identity,
    series_mul, series_pow, series_scale, to_falling, to_rational,
)


def random_poly(rng, degree, bound=9):
    return Poly(rng.randint(-bound, bound) for _ in range(degree + 1))


class RationalTests(SimpleTestCase):

    def test_parses_strings(self):
        self.assertEqual(to_rational('3/6'), Fraction(1, 2))
        self.assertEqual(to_rational(' -4 '), Fraction(-4))

    def test_rejects_floats_and_bools(self):
        with self.assertRaises(ValueError):
            to_rational(0.5)
        with self.assertRaises(ValueError):
            to_rational(True)
        with self.assertRaises(ValueError):
            to_rational('1/0')


class PolyTests(SimpleTestCase):

    def test_normalizes_trailing_zeros(self):
        p = Poly([1, 2, 0, 0])
        self.assertEqual(p.coeffs, (Fraction(1), Fraction(2)))
        self.assertEqual(p.degree, 1)
        self.assertEqual(Poly([0, 0]), ZERO)
        self.assertTrue(ZERO.is_zero)
        self.assertLess(ZERO.degree, 0)

    def test_arithmetic(self):
        p = Poly([1, 1])
        self.assertEqual(p * p, Poly([1, 2, 1]))
        self.assertEqual(p - p, ZERO)
        self.assertEqual(p + 1, Poly([2, 1]))
        self.assertEqual(3 * p, Poly([3, 3]))
        self.assertEqual(p ** 3, Poly([1, 3, 3, 1]))
        self.assertEqual(-p, Poly([-1, -1]))

    def test_evaluation(self):
        p = Poly([1, -3, 2])
        self.assertEqual(p(2), 3)
        self.assertEqual(p('1/2'), 0)

    def test_shift_matches_sympy(self):
        y = sympy.symbols('y')
        rng = random.Random(1)
        for _ in range(20):
            p = random_poly(rng, rng.randint(1, 7))
            if p.is_zero:
                continue
            r = rng.randint(-3, 3)
            shifted = sum(int(c) * (y + r) ** i for i, c in enumerate(p.coeffs))
            expected = [int(c) for c in reversed(sympy.Poly(shifted, y).all_coeffs())]
            self.assertEqual([int(c) for c in poly_shift(p, r).coeffs], expected)

    def test_ring_axioms(self):
        rng = random.Random(12)
        for _ in range(100):
            a, b, c = (random_poly(rng, rng.randint(0, 6)) for _ in range(3))
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a + ZERO, a)
            self.assertEqual(a * ONE, a)

    def test_shift_inverse(self):
        rng = random.Random(13)
        for _ in range(50):
            p = random_poly(rng, rng.randint(0, 9))
            a = Fraction(rng.randint(-7, 7), rng.randint(1, 4))
            self.assertEqual(poly_shift(poly_shift(p, a), -a), p)

    def test_shift_is_horner_on_y_plus_r(self):
        self.assertEqual(poly_shift(Poly.monomial(2), 1), Poly([1, 2, 1]))
        self.assertEqual(poly_shift(Poly([5]), 7), Poly([5]))

    def test_derivative(self):
        self.assertEqual(poly_derivative(Poly([4, 3, 2, 1])), Poly([3, 4, 3]))
        self.assertEqual(poly_derivative(Poly([4])), ZERO)

    def test_divmod(self):
        p = Poly([-1, 0, 0, 1])
        q, r = poly_divmod(p, Poly([-1, 1]))
        self.assertEqual(q, Poly([1, 1, 1]))
        self.assertEqual(r, ZERO)
        q, r = poly_divmod(Poly([1, 0, 1]), Poly([0, 2]))
        self.assertEqual(q, Poly([0, Fraction(1, 2)]))
        self.assertEqual(r, Poly([1]))
        with self.assertRaises(ValueError):
            poly_divmod(p, ZERO)

    def test_divmod_reconstructs(self):
        rng = random.Random(7)
        for _ in range(30):
            p = random_poly(rng, rng.randint(0, 8))
            d = random_poly(rng, rng.randint(0, 4))
            if d.is_zero:
                continue
            q, r = poly_divmod(p, d)
            self.assertEqual(q * d + r, p)
            self.assertTrue(r.is_zero or r.degree < d.degree)

    def test_gcd(self):
        a = Poly([-1, 1]) * Poly([2, 1]) * Poly([2, 1])
        b = Poly([2, 1]) * Poly([3, 1])
        self.assertEqual(poly_gcd(a, b), Poly([2, 1]))
        self.assertEqual(poly_gcd(Poly([3, 6]), ZERO), Poly([Fraction(1, 2), 1]))
        self.assertEqual(poly_gcd(ZERO, ZERO), ZERO)

    def test_monic_and_primitive(self):
        self.assertEqual(monic(Poly([2, 4])), Poly([Fraction(1, 2), 1]))
        self.assertEqual(primitive(Poly([Fraction(1, 2), Fraction(3, 4)])), Poly([2, 3]))
        self.assertEqual(primitive(Poly([-2, -4])), Poly([-1, -2]))

    def test_divide_by_x_power(self):
        self.assertEqual(divide_by_x_power(Poly([0, 0, 1, 2]), 2), Poly([1, 2]))
        with self.assertRaises(InternalInconsistency):
            divide_by_x_power(Poly([0, 1, 1]), 2)

    def test_factorial_polys(self):
        self.assertEqual(falling_factorial_poly(3), Poly([0, 2, -3, 1]))
        self.assertEqual(rising_factorial_poly(3), Poly([0, 2, 3, 1]))
        self.assertEqual(falling_factorial_poly(3, 2), rising_factorial_poly(3))
        self.assertEqual(falling_factorial_poly(0), ONE)

    def test_json(self):
        p = Poly([Fraction(1, 3), -2, 5])
        self.assertEqual(poly_to_json(p), ['1/3', '-2', '5'])
        self.assertEqual(poly_from_json('["1/3", "-2", "5"]'), p)
        self.assertEqual(poly_from_json([]), ZERO)
        with self.assertRaises(ValueError):
            poly_from_json('{"a": 1}')
        with self.assertRaises(ValueError):
            poly_from_json('[1,')


class FallingBasisTests(SimpleTestCase):

    def test_known_expansions(self):
        self.assertEqual(to_falling(Poly.monomial(2)), FactPoly([0, 1, 1]))
        self.assertEqual(to_falling(falling_factorial_poly(4)), FactPoly([0, 0, 0, 0, 1]))
        self.assertEqual(to_falling(Poly([7])), FactPoly([7]))

    def test_round_trip(self):
        rng = random.Random(3)
        for _ in range(25):
            p = random_poly(rng, rng.randint(0, 9))
            self.assertEqual(from_falling(to_falling(p)), p)

    def test_round_trip_to_degree_30(self):
        rng = random.Random(30)
        for degree in (20, 25, 30):
            p = random_poly(rng, degree)
            self.assertEqual(from_falling(to_falling(p)), p)
        self.assertEqual(to_falling(falling_factorial_poly(30)), FactPoly([0] * 30 + [1]))
        self.assertEqual(from_falling(to_falling(Poly.monomial(30))), Poly.monomial(30))


class SeriesTests(SimpleTestCase):

    def test_exp_of_t_gives_ones(self):
        t = series_from_scalars([0, 1], 6)
        self.assertEqual(series_exp(t).scalars(), [1] * 7)

    def test_exp_of_x_times_exp_minus_one_is_bell(self):
        h = series_from_scalars([0] + [1] * 5, 5)
        e = series_exp(series_scale(h, X))
        self.assertEqual(e[3], Poly([0, 1, 3, 1]))
        self.assertEqual(e[5](1), 52)

    def test_exp_rejects_constant_term(self):
        with self.assertRaises(ValueError):
            series_exp(series_from_scalars([1, 1], 3))

    def test_mul_is_binomial_convolution(self):
        # e^t * e^t = e^(2t)
        e = series_from_scalars([1] * 6, 5)
        self.assertEqual(series_mul(e, e).scalars(), [2 ** n for n in range(6)])
        self.assertEqual(series_pow(e, 3).scalars(), [3 ** n for n in range(6)])
        self.assertEqual(series_pow(e, 0), series_identity(5))

    def test_order_mismatch(self):
        with self.assertRaises(ValueError):
            series_mul(series_identity(2), series_identity(3))

    def test_truncation_keeps_order_plus_one_slots(self):
        s = TruncSeries([1, 2, 3, 4, 5], 2)
        self.assertEqual(len(s), 3)
        self.assertEqual(series_from_scalars([1], 3).scalars(), [1, 0, 0, 0])

    def _random_series(self, rng, order):
        scalars = series_from_scalars([0] + [rng.randint(-4, 4) for _ in range(order)], order)
        if rng.random() < 0.5:
            return series_scale(scalars, X)
        return scalars

    def test_exp_turns_sums_into_products(self):
        rng = random.Random(14)
        for _ in range(20):
            a = self._random_series(rng, 7)
            b = self._random_series(rng, 7)
            self.assertEqual(series_exp(series_add(a, b)), series_mul(series_exp(a), series_exp(b)))

    def test_derivative_of_exp(self):
        rng = random.Random(15)
        for _ in range(20):
            a = self._random_series(rng, 7)
            e = series_exp(a)
            truncated = TruncSeries(e.coeffs, 6)
            self.assertEqual(series_derivative(e), series_mul(series_derivative(a), truncated))

    def test_derivative_drops_a_slot(self):
        s = series_from_scalars([1, 2, 3], 2)
        self.assertEqual(series_derivative(s).scalars(), [2, 3])
