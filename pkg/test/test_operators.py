#!/usr/bin/env python3

"""Tests of the operator L, its inverse and the integral representations."""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

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
from holospaces import functions, weights
from holospaces.exceptions import (DomainError, OpenProblemError,
                                   PreconditionError,
                                   UnsupportedRepresentationError)
from holospaces.operators import (OperatorContext, apply_L, area_reproduce,
                                  invert_L, real_part_reproduce,
                                  reconstruct_boundary)
from holospaces.quadrature import integrate

if not holospaces.__file__.startswith(top_srcdir):
    raise Exception("holospaces (%s) is not being picked up from the source "
                    "tree" % holospaces.__file__)


def disc_context(**kwargs):
    return OperatorContext(weights.make_linear_weight('disc'), **kwargs)


def plane_context(**kwargs):
    return OperatorContext(weights.make_named_weight('plane', 'exp-simple'),
                           **kwargs)


class TestApplyL(unittest.TestCase):

    def test_disc_coefficients(self):
        g = apply_L(disc_context(), functions.taylor([1.0, 1.0, 1.0]))
        np.testing.assert_allclose(g.coefficients(), [1.0, 0.5, 1.0 / 3.0],
                                   rtol=1e-14)

    def test_plane_coefficients(self):
        g = apply_L(plane_context(), functions.taylor([1.0, 1.0, 1.0, 1.0]))
        np.testing.assert_allclose(g.coefficients(), [1.0, 1.0, 2.0, 6.0],
                                   rtol=1e-13)

    def test_round_trip(self):
        rng = np.random.default_rng(11)
        for ctx in (disc_context(), plane_context()):
            for _ in range(50):
                f = functions.random_polynomial(rng, int(rng.integers(0, 9)))
                back = invert_L(ctx, apply_L(ctx, f, check=False))
                np.testing.assert_allclose(back.coefficients(),
                                           f.coefficients(), rtol=0,
                                           atol=1e-12)

    def test_coefficients_match_quadrature(self):
        rng = np.random.default_rng(23)
        for ctx, radius in ((disc_context(), 0.8), (plane_context(), 1.5)):
            zs = radius * np.sqrt(rng.uniform(0.0, 1.0, 8)) \
                * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, 8))
            for _ in range(10):
                f = functions.random_polynomial(rng,
                                                int(rng.integers(0, 17)))
                series = apply_L(ctx, f, check=False).evaluate(zs)

                def integrand(t, f=f):
                    return f.evaluate(t[:, None] * zs[None, :])

                direct, _ = ctx.weight.stieltjes(integrand, rtol=1e-11,
                                                 atol=1e-12)
                gap = np.abs(-np.asarray(direct) - series) \
                    / np.maximum(1.0, np.abs(series))
                self.assertLess(float(np.max(gap)), 1e-8)

    def test_rotation_covariance(self):
        rng = np.random.default_rng(5)
        ctx = disc_context()
        z = np.array([0.3 + 0.2j, -0.5j, 0.7])
        for theta in (0.7, 2.0, -1.3):
            f = functions.random_polynomial(rng, 8)
            rotated = apply_L(ctx, f.rotated(theta)).evaluate(z)
            np.testing.assert_allclose(
                rotated, apply_L(ctx, f).evaluate(np.exp(1j * theta) * z),
                rtol=0, atol=1e-10)

    def test_taylor_only(self):
        f = functions.rational([(1.0, 1.0, 2)])
        self.assertRaises(UnsupportedRepresentationError, apply_L,
                          disc_context(), f)
        self.assertRaises(UnsupportedRepresentationError, invert_L,
                          disc_context(), f)


class TestHalfPlaneL(unittest.TestCase):

    f = functions.rational([(1.0, 1.0, 2)])
    points = np.array([0.5 + 0.5j, -1.0 + 1.0j, 2.0 + 0.25j])

    def direct(self, density, upper, z):
        value, _ = integrate(
            lambda t: self.f.evaluate(z[None, :] + 1j * t[:, None])
            * density(t)[:, None], 0.0, upper, 1e-12, 1e-14)
        return value

    def test_capped_linear_closed_form(self):
        ctx = OperatorContext(weights.make_linear_weight('halfplane',
                                                         cap=1.0))
        g = apply_L(ctx, self.f)
        self.assertIsInstance(g, functions.RationalHalfPlane)
        z = self.points
        np.testing.assert_allclose(g.evaluate(z),
                                   1j / (z + 2j) - 1j / (z + 1j), rtol=1e-14)
        np.testing.assert_allclose(
            g.evaluate(z), self.direct(np.ones_like, 1.0, z), rtol=1e-10)

    def test_tabulated_agrees_with_closed_form(self):
        tmp = tempfile.mkdtemp()
        try:
            path = os.path.join(tmp, 'ramp.csv')
            with open(path, 'w') as f:
                f.write('0,0\n1,1\n')
            ramp = weights.load_tabulated(path, 'halfplane')
        finally:
            shutil.rmtree(tmp)
        pointwise = apply_L(OperatorContext(ramp), self.f)
        self.assertIsInstance(pointwise, functions.PointwiseFunction)
        closed = apply_L(OperatorContext(
            weights.make_linear_weight('halfplane', cap=1.0)), self.f)
        np.testing.assert_allclose(pointwise.evaluate(self.points),
                                   closed.evaluate(self.points), rtol=1e-9)

    def test_log_weight(self):
        ctx = OperatorContext(weights.make_named_weight(
            'halfplane', 'log-one-plus', cap=1.0))
        g = apply_L(ctx, self.f)
        np.testing.assert_allclose(
            g.evaluate(self.points),
            self.direct(lambda t: 1.0 / (1.0 + t), 1.0, self.points),
            rtol=1e-9)

    def test_translation_covariance(self):
        ctx = OperatorContext(weights.make_linear_weight('halfplane',
                                                         cap=1.0))
        g = apply_L(ctx, self.f)
        for a in (0.5, -2.0, 3.25):
            shifted = apply_L(ctx, self.f.translated(a))
            self.assertIsInstance(shifted, functions.PointwiseFunction)
            np.testing.assert_allclose(shifted.evaluate(self.points),
                                       g.evaluate(self.points + a), rtol=0,
                                       atol=1e-8)

    def test_atom_scales(self):
        ctx = OperatorContext(weights.make_power_weight('halfplane', -1.0,
                                                        coef=2.0))
        g = apply_L(ctx, self.f)
        np.testing.assert_allclose(g.evaluate(self.points),
                                   2.0 * self.f.evaluate(self.points))

    def test_refuses_taylor(self):
        ctx = OperatorContext(weights.make_linear_weight('halfplane'))
        self.assertRaises(UnsupportedRepresentationError, apply_L, ctx,
                          functions.taylor([1.0]))
        self.assertRaises(UnsupportedRepresentationError, invert_L, ctx,
                          functions.taylor([1.0]))
        self.assertRaises(UnsupportedRepresentationError, ctx.moments, 4)


class TestReconstruction(unittest.TestCase):

    f = functions.taylor([1.0, 0.5, 0.25j, -0.125])
    z = np.array([0.3 + 0.2j, -0.5j, 0.0])

    def test_disc_from_function(self):
        ctx = disc_context()
        phi = apply_L(ctx, self.f)
        np.testing.assert_allclose(reconstruct_boundary(ctx, phi, self.z),
                                   self.f.evaluate(self.z), rtol=0, atol=1e-9)
        self.assertIsInstance(reconstruct_boundary(ctx, phi, 0.1), complex)

    def test_disc_from_samples(self):
        ctx = disc_context()
        phi = apply_L(ctx, self.f)
        theta = 2.0 * np.pi * np.arange(128) / 128
        samples = phi.evaluate(np.exp(1j * theta))
        np.testing.assert_allclose(
            reconstruct_boundary(ctx, samples, self.z),
            self.f.evaluate(self.z), rtol=0, atol=1e-9)

    def test_orthogonal_part_is_ignored(self):
        ctx = disc_context()
        phi = apply_L(ctx, self.f)

        def noisy(e):
            return phi.evaluate(e) + 3.0 * np.conj(e) ** 2

        np.testing.assert_allclose(reconstruct_boundary(ctx, noisy, self.z),
                                   self.f.evaluate(self.z), rtol=0, atol=1e-9)

    def test_plane(self):
        ctx = plane_context()
        phi = apply_L(ctx, self.f)
        z = np.array([1.5, -2.0 + 1.0j])
        np.testing.assert_allclose(reconstruct_boundary(ctx, phi, z),
                                   self.f.evaluate(z), rtol=1e-9)

    def test_halfplane(self):
        ctx = OperatorContext(weights.make_linear_weight('halfplane'),
                              tol=1e-6)
        f = functions.rational([(1.0, 1.0, 3)])
        phi = apply_L(ctx, f)
        z = 0.5 + 1.0j
        self.assertAlmostEqual(reconstruct_boundary(ctx, phi, z),
                               f.evaluate(z), delta=1e-5)


class TestAreaRepresentation(unittest.TestCase):

    f = functions.taylor([1.0, 0.5j, 0.25])

    def test_disc(self):
        ctx = disc_context()
        z = np.array([0.3 - 0.2j, 0.6j])
        np.testing.assert_allclose(area_reproduce(ctx, self.f, z),
                                   self.f.evaluate(z), rtol=0, atol=1e-8)

    def test_plane(self):
        ctx = plane_context(p=2)
        f = functions.taylor([1.0, 1.0])
        self.assertAlmostEqual(area_reproduce(ctx, f, 0.5), 1.5, delta=1e-7)

    def test_plane_refusals(self):
        f = functions.taylor([1.0])
        self.assertRaises(PreconditionError, area_reproduce, plane_context(),
                          f, 0.5)
        self.assertRaises(OpenProblemError, area_reproduce,
                          plane_context(p=1), f, 0.5)

    def test_halfplane_domain(self):
        ctx = OperatorContext(weights.make_linear_weight('halfplane'))
        self.assertRaises(DomainError, area_reproduce, ctx,
                          functions.rational([(1.0, 1.0, 2)]), 1.0 - 0.5j)

    def test_real_part(self):
        ctx = disc_context()
        f = functions.taylor([0.5 + 0.5j, 1.0, 0.5j])
        z = 0.4 + 0.1j
        self.assertAlmostEqual(real_part_reproduce(ctx, f, z), f.evaluate(z),
                               delta=1e-8)
        shifted = real_part_reproduce(ctx, f, z, f0=0.5)
        self.assertAlmostEqual(shifted, f.evaluate(z) - 0.5j, delta=1e-8)


if __name__ == '__main__':
    unittest.main()
