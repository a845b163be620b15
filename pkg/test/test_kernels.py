#!/usr/bin/env python3

"""Tests of the kernel evaluators."""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

import cmath
import os
import sys
import unittest

top_srcdir = os.path.abspath(os.environ.get(
    'HOLOSPACES_TOP_SRCDIR', os.path.join(os.path.dirname(__file__),
                                          os.pardir)))
sys.path.insert(0, top_srcdir)

import numpy as np

import holospaces
from holospaces import kernels, weights
from holospaces.exceptions import (AccuracyError, DomainError, RadiusError,
                                   UnsupportedRepresentationError)
from holospaces.kernels import KernelMode, make_kernel

if not holospaces.__file__.startswith(top_srcdir):
    raise Exception("holospaces (%s) is not being picked up from the source "
                    "tree" % holospaces.__file__)


def disc_points(radius, count=25, seed=7):
    rng = np.random.default_rng(seed)
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, count))
    return r * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, count))


class TestDiscKernel(unittest.TestCase):

    def test_closed_form_matches_series(self):
        z = disc_points(0.8)
        for alpha in (0.5, 1.0, 2.0):
            w = weights.make_power_weight('disc', alpha)
            closed = make_kernel(w)
            series = make_kernel(w, 'series')
            self.assertIs(closed.mode, KernelMode.CLOSED_FORM)
            self.assertEqual(closed.closed_tag, 'power')
            self.assertIs(series.mode, KernelMode.SERIES)
            np.testing.assert_allclose(series.evaluate(z), closed.evaluate(z),
                                       rtol=0, atol=1e-8)

    def test_series_without_closed_form(self):
        w = weights.squash(weights.make_linear_weight('disc'), 'square')
        k = make_kernel(w)
        self.assertIs(k.mode, KernelMode.SERIES)
        self.assertIsNotNone(k.n_terms)
        self.assertAlmostEqual(k.evaluate(0.5), 3.0, places=8)
        self.assertIsInstance(k.estimate_error(0.5), float)
        self.assertRaises(UnsupportedRepresentationError, make_kernel, w,
                          'closed-form')

    def test_radius(self):
        w = weights.make_linear_weight('disc')
        self.assertRaises(RadiusError, make_kernel, w, r_max=0.99)
        self.assertRaises(DomainError, make_kernel, w, r_max=0.0)
        k = make_kernel(w)
        self.assertRaises(RadiusError, k.evaluate, 0.95)
        try:
            k.evaluate(np.array([0.1, 0.93j]))
        except RadiusError as e:
            self.assertEqual(e.r_max, 0.9)
            self.assertAlmostEqual(e.modulus, 0.93)
        else:
            self.fail('expected RadiusError')

    def test_larger_certified_radius(self):
        w = weights.make_linear_weight('disc')
        k = make_kernel(w, 'series', r_max=0.97)
        self.assertAlmostEqual(abs(k.evaluate(0.96) - 1.0 / 0.04 ** 2), 0.0,
                               places=6)

    def test_unsupported(self):
        self.assertRaises(UnsupportedRepresentationError, make_kernel,
                          weights.make_linear_weight('disc'), 'quadrature')
        self.assertRaises(ValueError, make_kernel,
                          weights.make_linear_weight('disc'), 'guess')


class TestPlaneKernel(unittest.TestCase):

    def test_exp(self):
        w = weights.make_named_weight('plane', 'exp-simple')
        closed = make_kernel(w)
        self.assertEqual(closed.closed_tag, 'exp')
        series = make_kernel(w, 'series')
        z = np.array([0.0, 1.0, -2.0 + 1.0j, 3.0j, 4.0 - 3.0j])
        np.testing.assert_allclose(series.evaluate(z), np.exp(z), rtol=1e-9)
        self.assertAlmostEqual(closed.evaluate(1.0), cmath.exp(1.0),
                               places=14)

    def test_exp_decay(self):
        w = weights.make_named_weight('plane', 'exp-decay', rho=2.0)
        closed = make_kernel(w)
        self.assertEqual(closed.closed_tag, 'mittag-leffler')
        series = make_kernel(w, 'series')
        z = np.array([0.5, -1.0 + 0.5j, 1.5j, 2.0])
        np.testing.assert_allclose(series.evaluate(z), closed.evaluate(z),
                                   rtol=1e-9)

    def test_series_overflow(self):
        w = weights.make_named_weight('plane', 'exp-simple')
        k = make_kernel(w, 'series')
        self.assertRaises(AccuracyError, k.evaluate, 1000.0)


class TestMittagLeffler(unittest.TestCase):

    def test_special_cases(self):
        z = np.array([0.5, -1.0 + 2.0j])
        np.testing.assert_allclose(kernels.mittag_leffler(1, 1, z), np.exp(z),
                                   rtol=1e-14)
        np.testing.assert_allclose(kernels.mittag_leffler(0.5, 1, 0.0), 1.0)

    def test_cosh(self):
        z = np.array([4.0, 0.25, -1.0 + 1.0j])
        np.testing.assert_allclose(kernels.mittag_leffler(2, 1, z),
                                   np.cosh(np.sqrt(z)), rtol=1e-9)

    def test_bad_parameters(self):
        self.assertRaises(DomainError, kernels.mittag_leffler, 0.0, 1.0, 1.0)


class TestHalfPlaneKernel(unittest.TestCase):

    points = np.array([0.3 + 1.0j, -1.0 + 0.5j, 2.0 + 2.0j])

    def test_linear(self):
        w = weights.make_linear_weight('halfplane')
        closed = make_kernel(w)
        self.assertEqual(closed.closed_tag, 'power')
        np.testing.assert_allclose(closed.evaluate(self.points),
                                   -1.0 / self.points ** 2, rtol=1e-14)
        quad = make_kernel(w, 'quadrature', tol=1e-9)
        np.testing.assert_allclose(quad.evaluate(self.points),
                                   closed.evaluate(self.points), rtol=0,
                                   atol=1e-7)

    def test_capped_linear(self):
        w = weights.make_linear_weight('halfplane', cap=1.0)
        closed = make_kernel(w)
        self.assertEqual(closed.closed_tag, 'trigamma')
        quad = make_kernel(w, 'quadrature', tol=1e-9)
        np.testing.assert_allclose(quad.evaluate(self.points),
                                   closed.evaluate(self.points), rtol=0,
                                   atol=1e-7)
        err = quad.estimate_error(self.points)
        self.assertTrue(np.all(err < 1e-6))

    def test_atom(self):
        w = weights.make_power_weight('halfplane', -1.0, coef=2.0)
        k = make_kernel(w)
        self.assertEqual(k.closed_tag, 'inverse')
        self.assertAlmostEqual(k.evaluate(1.0j), 0.5, places=15)

    def test_im_checks(self):
        k = make_kernel(weights.make_linear_weight('halfplane'))
        self.assertRaises(DomainError, k.evaluate, 1.0 - 1.0j)
        self.assertRaises(DomainError, k.evaluate, 1.0)
        self.assertRaises(AccuracyError, k.evaluate, 1.0 + 1e-3j)

    def test_growth_refused(self):
        w = weights.make_named_weight('halfplane', 'exp-minus-one')
        self.assertRaises(DomainError, make_kernel, w)

    def test_unsupported(self):
        self.assertRaises(UnsupportedRepresentationError, make_kernel,
                          weights.make_linear_weight('halfplane'), 'series')
        w = weights.make_named_weight('halfplane', 'log-one-plus', cap=1.0)
        self.assertRaises(UnsupportedRepresentationError, make_kernel, w,
                          'closed-form')
        self.assertIs(make_kernel(w).mode, KernelMode.QUADRATURE)

    def test_decay_probe(self):
        k = make_kernel(weights.make_linear_weight('halfplane'))
        probe = kernels.decay_probe(k, 2.0)
        self.assertTrue(probe.bounded)
        self.assertEqual(probe.radii.size, 25)
        self.assertFalse(kernels.decay_probe(k, 3.0).bounded)


class TestTypedEvaluation(unittest.TestCase):

    def test_geometry_mismatch(self):
        disc = make_kernel(weights.make_linear_weight('disc'))
        self.assertAlmostEqual(kernels.eval_disc_kernel(disc, 0.5), 4.0,
                               places=12)
        self.assertRaises(DomainError, kernels.eval_plane_kernel, disc, 0.5)
        self.assertRaises(DomainError, kernels.eval_halfplane_kernel, disc,
                          0.5j)
        self.assertRaises(DomainError, kernels.decay_probe, disc, 2.0)


if __name__ == '__main__':
    unittest.main()
