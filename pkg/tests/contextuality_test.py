import os
import unittest

import numpy as np

from quancontext.contextuality import (LINES, NCHVBound, PMSquare, ValueAssignment, all_classical_betas,
                                       beta_quantum, classical_beta, format_square, line_correlations,
                                       line_expectations, line_product, line_product_orderings, nchv_max,
                                       parse_square, pm_square, verify_square)
from quancontext.linalg import DensityMatrix, random_density_matrix
from quancontext.pauli import parse_pauli

TEST_DIR = os.path.dirname(__file__)
SQUARE_FILE = os.path.join(TEST_DIR, "data", "square.txt")
BAD_SQUARE_FILE = os.path.join(TEST_DIR, "data", "square_bad_sign.txt")


class SquareTest(unittest.TestCase):

    def setUp(self):
        self.sq = pm_square()

    def test_lines(self):
        self.assertEqual([str(p) for p in self.sq.observables('r1')], ['Z1', '1Z', 'ZZ'])
        self.assertEqual([str(p) for p in self.sq.observables('c3')], ['ZZ', 'XX', 'YY'])
        with self.assertRaises(ValueError):
            self.sq.observables('d1')

    def test_line_products(self):
        expected = dict(zip(LINES, (1, 1, 1, 1, 1, -1)))
        for line in LINES:
            p = line_product(self.sq, line)
            self.assertTrue(p.is_identity)
            self.assertEqual(p.sign, expected[line])

    def test_products_independent_of_order(self):
        for line in LINES:
            products = line_product_orderings(self.sq, line)
            self.assertEqual(len(products), 6)
            self.assertEqual(len(set(products)), 1)

    def test_verify_square_passes(self):
        report = verify_square(self.sq)
        self.assertTrue(report.passed)
        self.assertTrue(all(check.commuting for check in report.checks))
        self.assertEqual(report.line('c3').expected_sign, -1)

    def test_broken_commutation_detected(self):
        broken = self.sq.with_entry(0, 0, parse_pauli('X1'))
        report = verify_square(broken)
        self.assertFalse(report.passed)
        self.assertFalse(report.line('r1').commuting)
        self.assertTrue(report.line('r2').passed)

    def test_wrong_sign_detected(self):
        report = verify_square(self.sq.with_signs((1, 1, 1, 1, 1, 1)))
        self.assertFalse(report.passed)
        self.assertFalse(report.line('c3').product_ok)
        self.assertTrue(report.line('c3').commuting)

    def test_invalid_square(self):
        with self.assertRaises(ValueError):
            PMSquare.from_text((('Z1', '1Z'), ('1X', 'X1', 'XX'), ('ZX', 'XZ', 'YY')))
        with self.assertRaises(ValueError):
            PMSquare.from_text((('Z1', '1Z', 'ZZZ'), ('1X', 'X1', 'XX'), ('ZX', 'XZ', 'YY')))
        with self.assertRaises(ValueError):
            self.sq.with_signs((1, 1, 1))

    def test_text_format(self):
        with open(SQUARE_FILE, 'r', encoding='utf-8') as file:
            from_file = parse_square(file.read())
        self.assertEqual(from_file, self.sq)
        self.assertEqual(parse_square(format_square(self.sq)), self.sq)
        self.assertEqual(format_square(self.sq).splitlines()[-1], '+ + + + + -')
        with open(BAD_SQUARE_FILE, 'r', encoding='utf-8') as file:
            self.assertFalse(verify_square(parse_square(file.read())).passed)

    def test_parse_square_errors(self):
        with self.assertRaises(ValueError):
            parse_square("Z1 1Z ZZ\n1X X1 XX\n+ + + + + -\n")
        with self.assertRaises(ValueError):
            parse_square("Z1 1Z ZZ\n1X X1 XX\nZX XZ\n+ + + + + -\n")
        with self.assertRaises(ValueError):
            parse_square("Z1 1Z ZZ\n1X X1 XX\nZX XZ YY\n+ + + + +\n")


class QuantumValueTest(unittest.TestCase):

    def test_beta_is_six_for_any_state(self):
        rng = np.random.default_rng(2)
        for trial in range(100):
            rho = random_density_matrix(4, rng, rank=1 + trial % 4)
            self.assertAlmostEqual(beta_quantum(rho), 6, delta=1e-10)

    def test_line_expectations(self):
        values = line_expectations(DensityMatrix.maximally_mixed(4))
        self.assertEqual(set(values), set(LINES))
        self.assertAlmostEqual(values['c3'], -1, delta=1e-12)

    def test_single_line(self):
        rho = DensityMatrix.maximally_mixed(4)
        self.assertAlmostEqual(beta_quantum(rho, lines=('r1',)), 1, delta=1e-12)

    def test_dimension_mismatch(self):
        with self.assertRaises(ValueError):
            beta_quantum(DensityMatrix.maximally_mixed(8))


class NCHVTest(unittest.TestCase):

    def test_enumeration(self):
        self.assertEqual(ValueAssignment.from_index(0).values, (1,) * 9)
        self.assertEqual(ValueAssignment.from_index(256)[0, 0], -1)
        self.assertEqual(ValueAssignment.from_index(1)[2, 2], -1)
        for index in (0, 1, 77, 511):
            self.assertEqual(ValueAssignment.from_index(index).index, index)
        with self.assertRaises(ValueError):
            ValueAssignment.from_index(512)
        with self.assertRaises(ValueError):
            ValueAssignment((1, 0, 1, 1, 1, 1, 1, 1, 1))

    def test_all_plus_one(self):
        assignment = ValueAssignment.from_index(0)
        self.assertEqual(line_correlations(assignment), dict.fromkeys(LINES, 1))
        self.assertEqual(classical_beta(assignment), 4)

    def test_flip_changes_two_lines(self):
        assignment = ValueAssignment.from_index(0).flipped(2, 2)
        self.assertEqual(line_correlations(assignment)['r3'], -1)
        self.assertEqual(line_correlations(assignment)['c3'], -1)
        self.assertEqual(classical_beta(assignment), 4)

    def test_bound_is_four(self):
        betas = all_classical_betas()
        self.assertEqual(betas.shape, (512,))
        self.assertEqual(betas.max(), 4)
        self.assertGreaterEqual(betas.min(), -4)
        self.assertTrue(np.all(betas % 2 == 0))
        bound = nchv_max()
        self.assertIsInstance(bound, NCHVBound)
        self.assertEqual(bound.value, 4)
        self.assertEqual(bound.assignment.index, 0)

    def test_vectorized_matches_scalar(self):
        betas = all_classical_betas()
        for index in range(0, 512, 37):
            self.assertEqual(betas[index], classical_beta(ValueAssignment.from_index(index)))

    def test_single_row(self):
        self.assertEqual(nchv_max(lines=('r1',)).value, 1)

    def test_grid(self):
        grid = ((1, -1, 1), (1, 1, 1), (-1, 1, 1))
        assignment = ValueAssignment.from_grid(grid)
        self.assertEqual(assignment.as_grid(), grid)
        self.assertEqual(line_correlations(assignment)['r1'], -1)


if __name__ == '__main__':
    unittest.main()
