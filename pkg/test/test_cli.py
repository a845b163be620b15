#!/usr/bin/env python3

"""Tests of the holospaces command line front end."""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

import contextlib
import csv
import io
import json
import os
import shutil
import sys
import tempfile
import unittest

top_srcdir = os.path.abspath(os.environ.get(
    'HOLOSPACES_TOP_SRCDIR', os.path.join(os.path.dirname(__file__),
                                          os.pardir)))
sys.path.insert(0, top_srcdir)

import holospaces
from holospaces import _config
from holospaces.cli import main

if not holospaces.__file__.startswith(top_srcdir):
    raise Exception("holospaces (%s) is not being picked up from the source "
                    "tree" % holospaces.__file__)


class TestCommands(unittest.TestCase):

    def tearDown(self):
        _config._overrides.clear()

    def run_main(self, *argv):
        out = io.StringIO()
        err = io.StringIO()
        with contextlib.redirect_stdout(out), \
                contextlib.redirect_stderr(err):
            status = main(list(argv))
        return status, out.getvalue(), err.getvalue()

    def test_moments_csv(self):
        status, out, _ = self.run_main('moments', '--weight', 'linear',
                                       '--n', '3')
        self.assertEqual(status, 0)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[0], ['n', 'delta_n', 'est_rel_err'])
        self.assertEqual([int(r[0]) for r in rows[1:]], [0, 1, 2, 3])
        for n, value, _ in rows[1:]:
            self.assertAlmostEqual(float(value), 1.0 / (int(n) + 1),
                                   places=12)

    def test_moments_json(self):
        status, out, _ = self.run_main('moments', '--geometry', 'plane',
                                       '--weight', 'exp-simple', '--n', '4',
                                       '--out', 'json')
        self.assertEqual(status, 0)
        doc = json.loads(out)
        self.assertEqual(doc['weight'], 'exp-simple')
        self.assertAlmostEqual(doc['moments'][4]['delta_n'], 24.0, places=9)

    def test_moments_refuse_halfplane(self):
        status, out, err = self.run_main('moments', '--geometry',
                                         'halfplane', '--weight', 'linear',
                                         '--n', '3')
        self.assertEqual(status, 2)
        self.assertEqual(out, '')
        self.assertIn('Laplace symbol', err)

    def test_kernel(self):
        status, out, _ = self.run_main('kernel', '--weight', 'linear',
                                       '--at', '0.5,0', '--at', '0,0')
        self.assertEqual(status, 0)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[0], ['re', 'im', 'c_re', 'c_im', 'est_err'])
        self.assertAlmostEqual(float(rows[1][2]), 4.0, places=10)
        self.assertAlmostEqual(float(rows[2][2]), 1.0, places=12)

    def test_kernel_needs_points(self):
        status, _, err = self.run_main('kernel', '--weight', 'linear')
        self.assertEqual(status, 2)
        self.assertIn('--at', err)

    def write_grid(self, text):
        tmp = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, tmp)
        path = os.path.join(tmp, 'grid.csv')
        with open(path, 'w') as f:
            f.write(text)
        return path

    def test_kernel_grid(self):
        path = self.write_grid('re,im\n# centre\n0.5,0\n\n0,0\n')
        status, out, _ = self.run_main('kernel', '--weight', 'linear',
                                       '--grid', path)
        self.assertEqual(status, 0)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(len(rows), 3)
        self.assertAlmostEqual(float(rows[1][2]), 4.0, places=10)
        self.assertAlmostEqual(float(rows[2][2]), 1.0, places=12)

    def test_kernel_grid_malformed(self):
        for text in ('re,im\nx,y\n0.5,0\n', '0.5,0\n0.25\n',
                     're,im\n0.5,0\nbad,0\n'):
            status, out, err = self.run_main('kernel', '--weight', 'linear',
                                             '--grid', self.write_grid(text))
            self.assertEqual(status, 2)
            self.assertEqual(out, '')
            self.assertIn('malformed row', err)

    def test_apply_l(self):
        status, out, _ = self.run_main('apply-l', '--weight', 'linear',
                                       '--function', 'taylor:[1, 1]',
                                       '--at', '0.5,0')
        self.assertEqual(status, 0)
        record = json.loads(out)[0]
        self.assertEqual(record['z'], [0.5, 0.0])
        self.assertAlmostEqual(record['value'][0], 1.25, places=12)

    def test_norm(self):
        status, out, _ = self.run_main('norm', '--space', 'hp', '--function',
                                       'taylor:[0, 1]')
        self.assertEqual(status, 0)
        doc = json.loads(out)
        self.assertEqual(doc['space'], 'hp')
        self.assertAlmostEqual(doc['value'], 1.0, places=10)
        status, _, _ = self.run_main('norm', '--space', 'ap', '--function',
                                     'taylor:[0, 1]')
        self.assertEqual(status, 2)

    def test_open_problem_refused(self):
        status, out, err = self.run_main('reproduce', '--geometry', 'plane',
                                         '--weight', 'exp-simple',
                                         '--function', 'taylor:[1]',
                                         '--at', '0.5,0', '--p', '1')
        self.assertEqual(status, 1)
        self.assertEqual(out, '')
        self.assertIn('holospaces.Error.OpenProblem', err)

    def test_syntax_error(self):
        status, _, err = self.run_main('moments', '--weight', 'power:beta=1',
                                       '--n', '3')
        self.assertEqual(status, 1)
        self.assertIn('holospaces.Error.SpecSyntax', err)

    def test_set(self):
        status, _, _ = self.run_main('--set', 'tol=1e-8', 'moments',
                                     '--weight', 'linear', '--n', '1')
        self.assertEqual(status, 0)
        self.assertEqual(_config.get('tol'), 1e-8)
        for item in ('tol', 'nothing=1', 'workers=many'):
            status, _, _ = self.run_main('--set', item, 'moments',
                                         '--weight', 'linear', '--n', '1')
            self.assertEqual(status, 2)

    def test_verify(self):
        status, out, _ = self.run_main('verify', '--config',
                                       '{"scenarios": []}')
        self.assertEqual(status, 0)
        self.assertEqual(out.splitlines(), ['id,verdict'])
        status, out, _ = self.run_main('verify', '--config', '{"seed": -1}')
        self.assertEqual(status, 2)
        self.assertEqual(out, '')

    def test_verify_scenario(self):
        status, out, _ = self.run_main('verify', '--scenario',
                                       'representation-plane-p1',
                                       '--workers', '1')
        self.assertEqual(status, 0)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[1], ['representation-plane-p1', 'pass'])
        status, _, _ = self.run_main('verify', '--scenario', 'nothing')
        self.assertEqual(status, 2)


if __name__ == '__main__':
    unittest.main()
