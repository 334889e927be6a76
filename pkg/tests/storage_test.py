import os
import shutil
import unittest

import numpy as np

from quancontext import json_utils
from quancontext.contextuality import pm_square, verify_square
from quancontext.dqc1 import ProbeSpec, run_experiment_suite
from quancontext.linalg import random_density_matrix
from quancontext.storage import FileLockedError, LockFile, keys_h5, open_h5, save_dict

TEST_DIR = os.path.dirname(__file__)
DATA_DIR = os.path.join(TEST_DIR, "tmp_test_data")
DATA_FILE_PATH = os.path.join(DATA_DIR, "storage.h5")


class H5Test(unittest.TestCase):

    def setUp(self):
        if os.path.exists(DATA_FILE_PATH):
            os.remove(DATA_FILE_PATH)

    @classmethod
    def tearDownClass(cls):
        if os.path.exists(DATA_DIR):
            shutil.rmtree(DATA_DIR)

    def test_save_and_open(self):
        save_dict(DATA_FILE_PATH, {'a': [1, 2, 3], 'b': {'c': 2.5, 'd': 'text'}, 'skip': None})
        data = open_h5(DATA_FILE_PATH)
        self.assertTrue(np.all(data['a'] == [1, 2, 3]))
        self.assertEqual(data['b']['c'], 2.5)
        self.assertEqual(data['b']['d'], 'text')
        self.assertNotIn('skip', data)
        self.assertEqual(keys_h5(DATA_FILE_PATH), {'a', 'b'})

    def test_overwrite_key(self):
        save_dict(DATA_FILE_PATH, {'a': [1, 2, 3]})
        save_dict(DATA_FILE_PATH, {'a': [4, 5]})
        self.assertTrue(np.all(open_h5(DATA_FILE_PATH, 'a')['a'] == [4, 5]))

    def test_result_with_asdict(self):
        result = run_experiment_suite(ProbeSpec(1.))
        save_dict(DATA_FILE_PATH, {'beta': result})
        data = open_h5(DATA_FILE_PATH)['beta']
        self.assertAlmostEqual(data['beta'], 6, delta=1e-10)
        self.assertEqual(list(data['line']), ['r1', 'r2', 'r3', 'c1', 'c2', 'c3'])

    def test_density_matrix(self):
        rho = random_density_matrix(4, np.random.default_rng(3))
        save_dict(DATA_FILE_PATH, {'rho': rho})
        self.assertTrue(np.allclose(open_h5(DATA_FILE_PATH)['rho'], rho.matrix, rtol=0, atol=1e-15))

    def test_locked_file(self):
        os.makedirs(DATA_DIR, exist_ok=True)
        with LockFile(DATA_FILE_PATH):
            with self.assertRaises(FileLockedError):
                save_dict(DATA_FILE_PATH, {'a': 1}, retries=1)
        save_dict(DATA_FILE_PATH, {'a': 1})
        self.assertFalse(os.path.exists(os.path.splitext(DATA_FILE_PATH)[0] + ".lock"))


class JsonTest(unittest.TestCase):

    @classmethod
    def tearDownClass(cls):
        if os.path.exists(DATA_DIR):
            shutil.rmtree(DATA_DIR)

    def test_report(self):
        path = json_utils.json_write('report', verify_square(pm_square()), path=DATA_DIR)
        self.assertEqual(path.suffix, '.json')
        data = json_utils.json_read('report', path=DATA_DIR)
        self.assertTrue(data['passed'])
        self.assertEqual(data['lines']['c3']['expected_sign'], -1)

    def test_numpy_values(self):
        text = json_utils.dumps({'b': np.float64(1.5), 'a': np.arange(2), 'c': np.bool_(True)})
        self.assertEqual(text, '{\n    "a": [\n        0,\n        1\n    ],\n    "b": 1.5,\n    "c": true\n}')


if __name__ == '__main__':
    unittest.main()
