import io
import os
import re
import shutil
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

from quancontext.cli import ConfigError, RunConfig, main, validate
from quancontext.dqc1 import SUITE_CSV_HEADER
from quancontext.json_utils import json_read
from quancontext.linalg import NumericalIntegrityError
from quancontext.noise import SWEEP_CSV_HEADER
from quancontext.storage import open_h5

TEST_DIR = os.path.dirname(__file__)
DATA_DIR = os.path.join(TEST_DIR, "tmp_test_data")
SQUARE_FILE = os.path.join(TEST_DIR, "data", "square.txt")
BAD_SQUARE_FILE = os.path.join(TEST_DIR, "data", "square_bad_sign.txt")
ZERO_SPINS_FILE = os.path.join(TEST_DIR, "data", "zero_spins.txt")

CENTER_RE = re.compile(r"([\w+]+): cluster center = (-?[\d.]+) kHz")
BIN_WIDTH = 1 / (4096 * 0.05)


def run_cli(*args):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(args))
    return code, out.getvalue(), err.getvalue()


class VerifyTest(unittest.TestCase):

    def test_default_square(self):
        code, out, _ = run_cli('verify')
        self.assertEqual(code, 0)
        self.assertIn("c3: commuting=yes product=-11 expected=-1 ok", out)
        self.assertIn("r1: commuting=yes product=11 expected=+1 ok", out)
        self.assertEqual(out.strip().split('\n')[-1], "PASS")

    def test_square_file(self):
        self.assertEqual(run_cli('verify', '--square', SQUARE_FILE)[0], 0)

    def test_bad_sign(self):
        code, out, _ = run_cli('verify', '--square', BAD_SQUARE_FILE)
        self.assertEqual(code, 1)
        self.assertIn("FAILED", out)
        self.assertEqual(out.strip().split('\n')[-1], "FAIL")


class BetaTest(unittest.TestCase):

    def test_ideal(self):
        code, out, _ = run_cli('beta', '--epsilon', '1.0')
        self.assertEqual(code, 0)
        self.assertIn("beta = 6.000000", out)
        self.assertIn("c3: -1 x -1.000000", out)

    def test_corrected_epsilon(self):
        self.assertIn("beta = 6.000000", run_cli('beta', '--epsilon', '0.3')[1])
        self.assertIn("beta = 3.000000", run_cli('beta', '--epsilon', '0.5', '--no-epsilon-correction')[1])

    def test_noise(self):
        code, out, _ = run_cli('beta', '--t', '1.5', '--t2', '2')
        self.assertEqual(code, 0)
        beta = float(re.search(r"beta = (-?[\d.]+)", out).group(1))
        self.assertTrue(0.5 <= beta <= 1.7, msg=out)

    def test_invalid_epsilon(self):
        code, _, err = run_cli('beta', '--epsilon', '2')
        self.assertEqual(code, 1)
        self.assertIn('--epsilon', err)
        self.assertEqual(run_cli('beta', '--epsilon', '0')[0], 1)
        self.assertEqual(run_cli('beta', '--epsilon', '0', '--no-epsilon-correction')[0], 0)


class NchvTest(unittest.TestCase):

    def test_bound(self):
        code, out, _ = run_cli('nchv')
        self.assertEqual(code, 0)
        self.assertEqual(out.split('\n')[0], "nchv_max = 4")
        self.assertEqual(len(out.strip().split('\n')), 4)


class OutputTest(unittest.TestCase):

    @classmethod
    def tearDownClass(cls):
        if os.path.exists(DATA_DIR):
            shutil.rmtree(DATA_DIR)

    def test_dqc1_stdout(self):
        code, out, _ = run_cli('dqc1', '--epsilon', '0.5')
        self.assertEqual(code, 0)
        lines = out.strip().split('\n')
        self.assertEqual(lines[0], ','.join(SUITE_CSV_HEADER))
        self.assertEqual(lines[-1], "# beta = 6.000000")

    def test_sweep_single_ratio(self):
        filename = os.path.join(DATA_DIR, "single.csv")
        code, out, _ = run_cli('sweep', '--ratios', '0.75', '--out', filename)
        self.assertEqual(code, 0)
        self.assertIn("beta(t/T2=0.75) = ", out)
        with open(filename, 'r', encoding='utf-8') as file:
            lines = file.read().strip().split('\n')
        self.assertEqual(lines[0], ','.join(SWEEP_CSV_HEADER))
        self.assertEqual(len(lines), 2)
        self.assertTrue(0.5 <= float(lines[1].split(',')[-1]) <= 1.7)

    def test_sweep_deterministic(self):
        files = [os.path.join(DATA_DIR, f"sweep_{k}.csv") for k in range(2)]
        for filename in files:
            self.assertEqual(run_cli('sweep', '--ratios', '0.01:2:10log', '--out', filename)[0], 0)
        contents = []
        for filename in files:
            with open(filename, 'rb') as file:
                contents.append(file.read())
        self.assertEqual(contents[0], contents[1])

    def test_sweep_invalid_ratios(self):
        for ratios in ('0', '0.75,0.05', '0:1:x'):
            code, _, err = run_cli('sweep', '--ratios', ratios)
            self.assertEqual(code, 1, msg=ratios)
            self.assertIn('--ratios', err)

    def test_h5_output(self):
        filename = os.path.join(DATA_DIR, "beta.h5")
        self.assertEqual(run_cli('beta', '--out', filename)[0], 0)
        self.assertAlmostEqual(open_h5(filename)['beta']['beta'], 6, delta=1e-10)

    def test_json_output(self):
        filename = os.path.join(DATA_DIR, "verify.json")
        self.assertEqual(run_cli('verify', '--out', filename)[0], 0)
        self.assertTrue(json_read(filename)['passed'])

        filename = os.path.join(DATA_DIR, "nchv.json")
        self.assertEqual(run_cli('nchv', '--out', filename)[0], 0)
        self.assertEqual(json_read(filename)['nchv_max'], 4)

    def test_unsupported_output(self):
        self.assertEqual(run_cli('verify', '--out', os.path.join(DATA_DIR, "verify.csv"))[0], 1)
        self.assertEqual(run_cli('dqc1', '--out', os.path.join(DATA_DIR, "dqc1.json"))[0], 1)


class SpectrumTest(unittest.TestCase):

    @classmethod
    def tearDownClass(cls):
        if os.path.exists(DATA_DIR):
            shutil.rmtree(DATA_DIR)

    def centers(self, *args):
        code, out, err = run_cli('spectrum', '--out', os.path.join(DATA_DIR, "spectrum.csv"), *args)
        self.assertEqual(code, 0, msg=err)
        return {label: float(value) for label, value in CENTER_RE.findall(out)}

    def test_malonic_acid(self):
        centers = self.centers()
        self.assertEqual(set(centers), {'C1', 'C2', 'Cm'})
        for label, shift in (('C1', 6.380), ('C2', -1.533), ('Cm', -5.650)):
            self.assertLessEqual(abs(centers[label] - shift), BIN_WIDTH + 1e-6)

    def test_zero_params(self):
        centers = self.centers('--params', ZERO_SPINS_FILE)
        self.assertEqual(len(centers), 1)
        self.assertEqual(len(next(iter(centers)).split('+')), 3)
        self.assertLessEqual(abs(next(iter(centers.values()))), 1e-6)

    def test_missing_file(self):
        missing = os.path.join(TEST_DIR, "data", "missing.txt")
        code, _, err = run_cli('spectrum', '--params', missing)
        self.assertEqual(code, 1)
        self.assertIn(missing, err)


class IntegrityTest(unittest.TestCase):

    def test_integrity_error_exit_code(self):
        with mock.patch('quancontext.dqc1.experiment.apply_unitary',
                        side_effect=NumericalIntegrityError("state lost its trace")):
            code, _, err = run_cli('beta')
        self.assertEqual(code, 2)
        self.assertIn("numerical error: state lost its trace", err)

    def test_tolerance_below_rounding(self):
        code, _, err = run_cli('beta', '--t2', '2', '--tolerance', '1e-16')
        self.assertEqual(code, 2, msg=err)
        self.assertIn("numerical error", err)

    def test_invalid_input_is_not_integrity(self):
        self.assertEqual(run_cli('beta', '--tolerance', '-1')[0], 1)


class ConfigTest(unittest.TestCase):

    def test_parser_errors(self):
        self.assertEqual(run_cli()[0], 1)
        self.assertEqual(run_cli('unknown')[0], 1)
        self.assertEqual(run_cli('beta', '--gates', 'two')[0], 1)
        self.assertEqual(run_cli('--help')[0], 0)

    def test_validate(self):
        self.assertEqual(validate(RunConfig('beta')), RunConfig('beta'))
        with self.assertRaises(ConfigError) as context:
            validate(RunConfig('beta', gates=0))
        self.assertEqual(context.exception.flag, '--gates')
        with self.assertRaises(ConfigError):
            validate(RunConfig('spectrum', samples=1))
        with self.assertRaises(ConfigError):
            validate(RunConfig('dqc1', t2_ms=0))

    def test_output_kind(self):
        self.assertEqual(RunConfig('beta').output_kind, 'stdout')
        self.assertEqual(RunConfig('beta', output='a.H5').output_kind, 'h5')
        self.assertEqual(RunConfig('beta', output='a.json').output_kind, 'json')
        self.assertEqual(RunConfig('beta', output='a.txt').output_kind, 'csv')


if __name__ == '__main__':
    unittest.main()
