#!/usr/bin/env python3

"""Tests of disc and plane moments and of the half-plane Laplace symbol."""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

import math
import os
import shutil
import sys
import tempfile
import unittest

top_srcdir = os.path.abspath(os.environ.get(
    'HOLOSPACES_TOP_SRCDIR', os.path.join(os.path.dirname(__file__),
                                          os.pardir)))
sys.path.insert(0, top_srcdir)

import numpy as np

import holospaces
from holospaces import weights
from holospaces.exceptions import DomainError, UnsupportedRepresentationError
from holospaces.moments import disc_moments, laplace_symbol, plane_moments
from holospaces.weights import Family, Geometry, WeightFunction

if not holospaces.__file__.startswith(top_srcdir):
    raise Exception("holospaces (%s) is not being picked up from the source "
                    "tree" % holospaces.__file__)


class TestDiscMoments(unittest.TestCase):

    def test_power_closed_form(self):
        n = np.arange(65, dtype=float)
        for alpha in (0.5, 1.0, 2.0):
            m = disc_moments(weights.make_power_weight('disc', alpha), 64)
            self.assertEqual(m.method, 'closed')
            self.assertEqual(m.N, 64)
            self.assertEqual(len(m), 65)
            expected = np.exp(math.lgamma(alpha + 1.0)
                              + np.array([math.lgamma(k + 1.0) for k in n])
                              - np.array([math.lgamma(k + alpha + 1.0)
                                          for k in n]))
            np.testing.assert_allclose(m.values, expected, rtol=1e-10)

    def test_linear(self):
        m = disc_moments(weights.make_linear_weight('disc'), 10)
        np.testing.assert_allclose(m.values, 1.0 / np.arange(1, 12),
                                   rtol=1e-12)
        self.assertAlmostEqual(m[3], 0.25, places=14)

    def test_values_are_read_only(self):
        m = disc_moments(weights.make_linear_weight('disc'), 4)
        self.assertRaises(ValueError, m.values.__setitem__, 0, 2.0)

    def test_rows(self):
        rows = list(disc_moments(weights.make_linear_weight('disc'),
                                 2).as_rows())
        self.assertEqual([r[0] for r in rows], [0, 1, 2])
        self.assertAlmostEqual(rows[1][1], 0.5, places=14)

    def test_quadrature_route(self):
        tmp = tempfile.mkdtemp()
        try:
            path = os.path.join(tmp, 'line.csv')
            with open(path, 'w') as f:
                f.write('t,omega\n0,1\n0.5,0.5\n1,0\n')
            m = disc_moments(weights.load_tabulated(path, 'disc'), 20)
        finally:
            shutil.rmtree(tmp)
        self.assertEqual(m.method, 'quadrature')
        np.testing.assert_allclose(m.values, 1.0 / np.arange(1, 22),
                                   rtol=1e-10)

    def test_volterra_square_moments_are_squares(self):
        base = weights.make_linear_weight('disc')
        square = disc_moments(weights.volterra_square(base), 12)
        np.testing.assert_allclose(square.values,
                                   disc_moments(base, 12).values ** 2,
                                   rtol=1e-8)

    def test_domain(self):
        w = weights.make_linear_weight('disc')
        self.assertRaises(DomainError, disc_moments, w, -1)
        self.assertRaises(DomainError, disc_moments, w, 2.5)
        self.assertRaises(DomainError, disc_moments,
                          weights.make_named_weight('plane', 'exp-simple'), 4)


class TestPlaneMoments(unittest.TestCase):

    def test_factorials(self):
        m = plane_moments(weights.make_named_weight('plane', 'exp-simple'), 20)
        self.assertEqual(m.method, 'closed')
        np.testing.assert_allclose(
            m.values, [math.factorial(n) for n in range(21)], rtol=1e-12)

    def test_exp_decay(self):
        w = weights.make_named_weight('plane', 'exp-decay', gamma=2.0)
        m = plane_moments(w, 15)
        np.testing.assert_allclose(
            m.values, [math.factorial(n) / 2.0 ** n for n in range(16)],
            rtol=1e-12)

    def test_log_values_stay_finite(self):
        m = plane_moments(weights.make_named_weight('plane', 'exp-simple'),
                          400)
        self.assertTrue(np.isinf(m.values[-1]))
        self.assertAlmostEqual(m.log_values[-1], math.lgamma(401.0),
                               places=8)

    def test_quadrature_route(self):
        w = WeightFunction(Geometry.PLANE, Family('custom'),
                           lambda t: np.exp(-t), lambda t: -np.exp(-t),
                           end_value=0.0)
        m = plane_moments(w, 8)
        self.assertEqual(m.method, 'quadrature')
        np.testing.assert_allclose(
            m.values, [math.factorial(n) for n in range(9)], rtol=1e-9)

    def test_domain(self):
        self.assertRaises(DomainError, plane_moments,
                          weights.make_linear_weight('disc'), 4)


class TestLaplaceSymbol(unittest.TestCase):

    def test_linear(self):
        symbol = laplace_symbol(weights.make_linear_weight('halfplane'))
        self.assertEqual(symbol.method, 'closed')
        self.assertAlmostEqual(symbol.evaluate(4.0), 0.25, places=14)
        np.testing.assert_allclose(symbol.evaluate(np.array([1.0, 2.0])),
                                   [1.0, 0.5], rtol=1e-14)

    def test_capped_linear(self):
        w = weights.make_linear_weight('halfplane', cap=1.0)
        symbol = laplace_symbol(w)
        for t in (0.5, 1.0, 3.0):
            self.assertAlmostEqual(symbol.evaluate(t), -math.expm1(-t) / t,
                                   places=12)

    def test_atom(self):
        w = weights.make_power_weight('halfplane', -1.0, coef=3.0)
        self.assertAlmostEqual(laplace_symbol(w).evaluate(2.0), 3.0,
                               places=14)
        quad = laplace_symbol(w, method='quadrature')
        self.assertAlmostEqual(quad.evaluate(2.0), 3.0, places=12)

    def test_quadrature_matches_closed_form(self):
        w = weights.make_power_weight('halfplane', 0.5, cap=2.0)
        closed = laplace_symbol(w, method='closed')
        quad = laplace_symbol(w, method='quadrature')
        ts = np.array([0.25, 1.0, 5.0])
        np.testing.assert_allclose(quad.evaluate(ts), closed.evaluate(ts),
                                   rtol=1e-9)

    def test_growth(self):
        symbol = laplace_symbol(
            weights.make_named_weight('halfplane', 'exp-minus-one'))
        self.assertEqual(symbol.growth, 1.0)
        self.assertAlmostEqual(symbol.evaluate(2.0), 1.0, places=14)
        self.assertRaises(DomainError, symbol.evaluate, 1.0)
        self.assertRaises(DomainError, symbol.evaluate, 0.5)

    def test_log_one_plus(self):
        w = weights.make_named_weight('halfplane', 'log-one-plus')
        closed = laplace_symbol(w, method='closed')
        quad = laplace_symbol(w, method='quadrature')
        ts = np.array([0.5, 1.0, 4.0])
        np.testing.assert_allclose(quad.evaluate(ts), closed.evaluate(ts),
                                   rtol=1e-9)

    def test_no_closed_form(self):
        w = weights.squash(
            weights.make_named_weight('halfplane', 'log-one-plus'), 'double')
        self.assertRaises(UnsupportedRepresentationError, laplace_symbol, w,
                          'closed')
        self.assertEqual(laplace_symbol(w).method, 'quadrature')

    def test_domain(self):
        self.assertRaises(DomainError, laplace_symbol,
                          weights.make_linear_weight('disc'))
        self.assertRaises(DomainError, laplace_symbol,
                          weights.make_linear_weight('halfplane'), 'series')
        symbol = laplace_symbol(weights.make_linear_weight('halfplane'))
        self.assertRaises(DomainError, symbol.evaluate, 0.0)


if __name__ == '__main__':
    unittest.main()
