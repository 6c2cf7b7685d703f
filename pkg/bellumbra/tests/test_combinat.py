import math
import threading

from django.test import SimpleTestCase
from sympy.functions.combinatorial.numbers import stirling as sympy_stirling

from bellumbra.combinat import (
    NumberKind, NumberTable, assoc_stirling2, audit_table, bell_number,
    bell_triangle_number, binomial, lah, r_stirling1_unsigned, rederive,
    stirling1_signed, stirling1_unsigned, stirling2, table, triangle,
)


class StirlingTests(SimpleTestCase):

    def test_small_values(self):
        self.assertEqual(stirling2(4, 2), 7)
        self.assertEqual(stirling1_unsigned(4, 2), 11)
        self.assertEqual(stirling1_signed(4, 2), 11)
        self.assertEqual(stirling1_signed(3, 1), 2)
        self.assertEqual(stirling1_signed(4, 1), -6)
        self.assertEqual(stirling2(0, 0), 1)
        self.assertEqual(stirling2(5, 0), 0)

    def test_outside_triangle_is_zero(self):
        self.assertEqual(stirling2(3, 4), 0)
        self.assertEqual(stirling2(-1, 0), 0)
        self.assertEqual(lah(2, -1), 0)

    def test_against_sympy(self):
        for n in range(15):
            for k in range(n + 1):
                self.assertEqual(stirling2(n, k), sympy_stirling(n, k, kind=2))
                self.assertEqual(stirling1_unsigned(n, k), sympy_stirling(n, k, kind=1))
                self.assertEqual(stirling1_signed(n, k), sympy_stirling(n, k, kind=1, signed=True))

    def test_rows_sum_to_known_totals(self):
        for n in range(10):
            self.assertEqual(sum(table(NumberKind.STIRLING1_UNSIGNED).row(n)), math.factorial(n))
        self.assertEqual([bell_number(n) for n in range(8)], [1, 1, 2, 5, 15, 52, 203, 877])

    def test_orthogonality(self):
        for n in range(13):
            for m in range(13):
                total = sum((-1) ** (n - k) * stirling1_unsigned(n, k) * stirling2(k, m)
                            for k in range(n + 1))
                self.assertEqual(total, 1 if n == m else 0, (n, m))

    def test_bell_triangle_agrees(self):
        for n in range(25):
            self.assertEqual(bell_number(n), bell_triangle_number(n))


class OtherKindsTests(SimpleTestCase):

    def test_lah(self):
        self.assertEqual(triangle(NumberKind.LAH, 4)[3], [0, 6, 6, 1])
        for n in range(1, 12):
            for k in range(1, n + 1):
                expected = math.comb(n - 1, k - 1) * math.factorial(n) // math.factorial(k)
                self.assertEqual(lah(n, k), expected)

    def test_lah_is_cycle_numbers_composed_with_set_partitions(self):
        for n in range(13):
            for m in range(n + 1):
                composed = sum(stirling1_unsigned(n, k) * stirling2(k, m) for k in range(n + 1))
                self.assertEqual(lah(n, m), composed, (n, m))

    def test_r_stirling(self):
        # (y + 1)(y + 2) = y^2 + 3y + 2
        self.assertEqual(table(NumberKind.R_STIRLING1_UNSIGNED, 1).row(3), [0, 2, 3, 1])
        self.assertEqual(r_stirling1_unsigned(2, 2, 2), 1)
        self.assertEqual(r_stirling1_unsigned(1, 1, 2), 0)
        for n in range(8):
            for k in range(n + 1):
                self.assertEqual(r_stirling1_unsigned(n, k, 0), stirling1_unsigned(n, k))

    def test_associated(self):
        # partitions of 4 into 2 blocks of size >= 2: {12|34}, {13|24}, {14|23}
        self.assertEqual(assoc_stirling2(2, 4, 2), 3)
        self.assertEqual(assoc_stirling2(2, 5, 2), 10)
        self.assertEqual(assoc_stirling2(3, 6, 2), 10)
        self.assertEqual(assoc_stirling2(2, 1, 1), 0)
        for n in range(12):
            for k in range(n + 1):
                self.assertEqual(assoc_stirling2(1, n, k), stirling2(n, k))

    def test_associated_table_grows_past_first_block(self):
        t = NumberTable(NumberKind.ASSOC_STIRLING2, 2)
        self.assertEqual(t.get(4, 2), 3)
        self.assertEqual(t.get(20, 1), 1)
        self.assertGreaterEqual(t.size, 21)

    def test_binomial(self):
        for n in range(20):
            for k in range(n + 1):
                self.assertEqual(binomial(n, k), math.comb(n, k))

    def test_parameter_required(self):
        with self.assertRaises(ValueError):
            NumberTable(NumberKind.ASSOC_STIRLING2)
        with self.assertRaises(ValueError):
            NumberTable(NumberKind.ASSOC_STIRLING2, 0)
        with self.assertRaises(ValueError):
            NumberTable(NumberKind.R_STIRLING1_UNSIGNED, -1)


class TableCacheTests(SimpleTestCase):

    def test_registry_shares_tables(self):
        self.assertIs(table(NumberKind.STIRLING2), table(NumberKind.STIRLING2))
        self.assertIs(table(NumberKind.LAH, 5), table(NumberKind.LAH))
        self.assertIsNot(table(NumberKind.ASSOC_STIRLING2, 2), table(NumberKind.ASSOC_STIRLING2, 3))

    def test_concurrent_growth(self):
        t = NumberTable(NumberKind.STIRLING2)
        results = {}

        def grow(n):
            results[n] = t.get(n, 2)

        threads = [threading.Thread(target=grow, args=(n,)) for n in range(5, 40, 3)]
        for th in threads:
            th.start()
        for th in threads:
            th.join()
        for n, value in results.items():
            self.assertEqual(value, 2 ** (n - 1) - 1)

    def test_rederive_and_audit(self):
        self.assertEqual(rederive(NumberKind.STIRLING2, 10, 4), stirling2(10, 4))
        self.assertEqual(audit_table(NumberKind.LAH, samples=30, seed=4, n_max=15), [])
        self.assertEqual(audit_table(NumberKind.ASSOC_STIRLING2, samples=20, seed=1, param=3, n_max=12), [])
