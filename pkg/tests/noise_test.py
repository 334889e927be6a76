import unittest

import numpy as np

from quancontext.contextuality import LINES
from quancontext.dqc1 import ProbeSpec, run_experiment_suite
from quancontext.linalg import (DensityMatrix, apply_kraus, check_kraus_completeness, partial_trace,
                                random_density_matrix, tensor_all)
from quancontext.noise import (DEFAULT_RATIOS, SWEEP_CSV_HEADER, NoiseModel, SweepPoint, SweepSeries,
                               beta_sweep, dephasing_eta, dephasing_kraus, n_fold_channel, noisy_suite_beta,
                               three_fold_channel)

ETAS = (0, 0.25, 0.5276, 1)


class DephasingTest(unittest.TestCase):

    def test_eta(self):
        self.assertEqual(dephasing_eta(0, 2), 0)
        self.assertAlmostEqual(dephasing_eta(1.5, 2), 1 - np.exp(-0.75), delta=1e-15)
        with self.assertRaises(ValueError):
            dephasing_eta(1.5, 0)
        with self.assertRaises(ValueError):
            dephasing_eta(-1, 2)

    def test_kraus_completeness(self):
        for eta in ETAS:
            for kraus in (dephasing_kraus(eta), three_fold_channel(eta)):
                completeness = sum(op.conj().T @ op for op in kraus)
                self.assertTrue(np.allclose(completeness, np.eye(kraus[0].shape[0]), rtol=0, atol=1e-12))
                check_kraus_completeness(kraus)
        self.assertEqual(len(three_fold_channel(0.3)), 8)
        with self.assertRaises(ValueError):
            dephasing_kraus(1.2)

    def test_unital(self):
        for eta in ETAS:
            mixed = DensityMatrix.maximally_mixed(8)
            out = apply_kraus(mixed, three_fold_channel(eta))
            self.assertTrue(np.allclose(out.matrix, mixed.matrix, rtol=0, atol=1e-12))

    def test_single_qubit_action(self):
        rho = DensityMatrix([[0.3, 0.2 - 0.1j], [0.2 + 0.1j, 0.7]])
        eta = 0.36
        out = apply_kraus(rho, dephasing_kraus(eta)).matrix
        self.assertAlmostEqual(out[0, 0], 0.3, delta=1e-14)
        self.assertAlmostEqual(out[0, 1], (0.2 - 0.1j) * 0.8, delta=1e-14)
        plus = DensityMatrix.from_vector([1, 1])
        self.assertTrue(np.allclose(apply_kraus(plus, dephasing_kraus(1)).matrix, np.eye(2) / 2))

    def test_identity_and_full_dephasing(self):
        rho = random_density_matrix(8, np.random.default_rng(8))
        self.assertTrue(np.allclose(apply_kraus(rho, three_fold_channel(0)).matrix, rho.matrix))
        erased = apply_kraus(rho, three_fold_channel(1)).matrix
        self.assertTrue(np.allclose(erased, np.diag(np.diag(rho.matrix))))

    def test_factorization(self):
        rng = np.random.default_rng(12)
        states = [random_density_matrix(2, rng) for _ in range(3)]
        eta = 0.4
        out = apply_kraus(DensityMatrix(tensor_all(states)), three_fold_channel(eta)).matrix
        for qubit, state in enumerate(states):
            marginal = partial_trace(out, [2, 2, 2], keep=[qubit])
            self.assertTrue(np.allclose(marginal, apply_kraus(state, dephasing_kraus(eta)).matrix))

    def test_n_fold(self):
        self.assertEqual(len(n_fold_channel(0.1, 2)), 4)
        with self.assertRaises(ValueError):
            n_fold_channel(0.1, 0)


class NoiseModelTest(unittest.TestCase):

    def test_model(self):
        model = NoiseModel.from_ratio(0.75, pulse_length_t=1.5)
        self.assertAlmostEqual(model.dephasing_time_T2, 2)
        self.assertAlmostEqual(model.ratio, 0.75)
        self.assertAlmostEqual(model.eta, 1 - np.exp(-0.75))
        with self.assertRaises(ValueError):
            NoiseModel(1.5, -2)
        with self.assertRaises(ValueError):
            NoiseModel(1.5, 2, gates_per_experiment=0)
        with self.assertRaises(ValueError):
            NoiseModel.from_ratio(0)

    def test_applications(self):
        self.assertEqual(NoiseModel(1.5, 2).applications(3), [1, 1, 1])
        self.assertEqual(NoiseModel(1.5, 2, gates_per_experiment=5).applications(3), [2, 2, 1])
        self.assertEqual(NoiseModel(1.5, 2, gates_per_experiment=1).applications(3), [1, 0, 0])


class NoisySuiteTest(unittest.TestCase):

    def test_no_noise(self):
        self.assertAlmostEqual(noisy_suite_beta(NoiseModel(0, 2), ProbeSpec(1.)), 6, delta=1e-10)

    def test_full_dephasing(self):
        for gates in (1, 3):
            model = NoiseModel(1.5, 1e-3, gates)
            self.assertEqual(model.eta, 1)
            result = run_experiment_suite(ProbeSpec(1.), noise=model)
            self.assertAlmostEqual(result.beta, 0, delta=1e-12)
            self.assertTrue(all(abs(value) < 1e-12 for value in result.values.values()))

    def test_reference_endpoints(self):
        weak = noisy_suite_beta(NoiseModel(1.5, 30), ProbeSpec(1.))
        strong = noisy_suite_beta(NoiseModel(1.5, 2), ProbeSpec(1.))
        self.assertTrue(5.0 <= weak <= 5.6, msg=f"beta = {weak}")
        self.assertTrue(0.5 <= strong <= 1.7, msg=f"beta = {strong}")

    def test_experimental_value_bracketed(self):
        betas = [noisy_suite_beta(NoiseModel(1.5, t2), ProbeSpec(1.)) for t2 in np.linspace(2, 30, 57)]
        self.assertTrue(any(5.1 <= beta <= 5.3 for beta in betas))

    def test_correction_cancels_epsilon(self):
        model = NoiseModel(1.5, 10)
        self.assertAlmostEqual(noisy_suite_beta(model, ProbeSpec(0.3)), noisy_suite_beta(model, ProbeSpec(1.)),
                               delta=1e-9)

    def test_terms_shrink(self):
        result = run_experiment_suite(ProbeSpec(1.), noise=NoiseModel(1.5, 5))
        for line, sign in zip(LINES, (1, 1, 1, 1, 1, -1)):
            value = result.values[line]
            self.assertGreater(sign * value, 0)
            self.assertLess(abs(value), 1)


class SweepTest(unittest.TestCase):

    def test_default_grid(self):
        self.assertEqual(len(DEFAULT_RATIOS), 50)
        self.assertAlmostEqual(DEFAULT_RATIOS[0], 0.01)
        self.assertAlmostEqual(DEFAULT_RATIOS[-1], 2)

    def test_monotone_and_bounded(self):
        series = beta_sweep(1.5, DEFAULT_RATIOS, ProbeSpec(1.), 3)
        betas = series.betas
        self.assertEqual(len(betas), 50)
        self.assertTrue(np.all(np.diff(betas) <= 1e-12))
        self.assertTrue(np.all((betas >= 0) & (betas <= 6 + 1e-10)))
        for point in series.points[::10]:
            self.assertAlmostEqual(point.beta, noisy_suite_beta(NoiseModel.from_ratio(point.ratio), ProbeSpec(1.)),
                                   delta=1e-12)

    def test_limit_at_zero(self):
        series = beta_sweep(1.5, [1e-9])
        self.assertAlmostEqual(series.betas[0], 6, delta=1e-6)

    def test_beta_at(self):
        series = beta_sweep(1.5, [0.05, 0.75])
        self.assertTrue(5.0 <= series.beta_at(0.05) <= 5.6)
        self.assertTrue(0.5 <= series.beta_at(0.75) <= 1.7)
        self.assertIsNone(series.beta_at(0.1))

    def test_invalid_ratios(self):
        with self.assertRaises(ValueError):
            beta_sweep(1.5, [0.75, 0.05])
        with self.assertRaises(ValueError):
            beta_sweep(1.5, [0, 0.05])
        with self.assertRaises(ValueError):
            beta_sweep(1.5, [])
        with self.assertRaises(ValueError):
            SweepSeries((SweepPoint(0.2, 0.1, (1.,) * 6, 6.), SweepPoint(0.1, 0.1, (1.,) * 6, 6.)))

    def test_csv_rows(self):
        series = beta_sweep(1.5, [0.05, 0.75])
        rows = series.csv_rows()
        self.assertEqual(len(rows), 2)
        self.assertTrue(all(len(row) == len(SWEEP_CSV_HEADER) for row in rows))
        self.assertEqual(SWEEP_CSV_HEADER[0], 'ratio_t_over_T2')
        self.assertEqual(SWEEP_CSV_HEADER[-1], 'beta_total')
        self.assertAlmostEqual(float(rows[1][-1]), series.betas[1], delta=1e-15)
        data = series._asdict()
        self.assertEqual(set(data), set(SWEEP_CSV_HEADER))


if __name__ == '__main__':
    unittest.main()
