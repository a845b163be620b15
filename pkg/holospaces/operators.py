"""The fractional integration operator ``L`` and the integral
representations built on the kernels.

Disc and plane: ``L f(z) = -int f(t z) d omega(t)``, which multiplies the
n-th Taylor coefficient by Delta_n. Half-plane:
``L f(z) = int_0^inf f(z + i t) d omega(t)`` (the atom omega(0) at t = 0
included).
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('OperatorContext', 'apply_L', 'invert_L', 'reconstruct_boundary',
           'area_reproduce', 'real_part_reproduce')
__docformat__ = 'restructuredtext'

import logging
import threading
import zlib

import numpy as np

from holospaces import _config
from holospaces.exceptions import (AccuracyError, ConsistencyError,
                                   DomainError, OpenProblemError,
                                   PreconditionError,
                                   UnsupportedRepresentationError)
from holospaces.functions import (PointwiseFunction, RationalHalfPlane,
                                  TaylorSeries, evaluate)
from holospaces.kernels import make_kernel
from holospaces.moments import disc_moments, laplace_symbol, plane_moments
from holospaces.quadrature import (circle_mean, integrate, integrate_line,
                                   sampled_circle_mean)
from holospaces.weights import Geometry, power_data

_logger = logging.getLogger('holospaces.operators')

_CHECK_POINTS = 10
_CHECK_TOL = 1e-8
# largest real-line truncation tried by the half-plane reconstruction
_MAX_LINE = 1e6


class OperatorContext(object):
    """Everything the operators need about one weight.

    :Parameters:
        `weight` : `WeightFunction`
        `tol` : float
            Quadrature target; defaults to the configured tolerance.
        `kernel_mode`, `r_max`
            Passed on to `make_kernel`.
        `p` : float or None
            Exponent of the space the functions are asserted to lie in;
            the plane area representation refuses p < 2.
    """

    __slots__ = ('weight', 'geometry', 'tol', 'kernel_mode', 'r_max', 'p',
                 '_kernel', '_lock')

    def __init__(self, weight, tol=None, kernel_mode='auto', r_max=None,
                 p=None):
        self.weight = weight
        self.geometry = weight.geometry
        self.tol = _config.get('tol') if tol is None else float(tol)
        self.kernel_mode = kernel_mode
        self.r_max = r_max
        self.p = None if p is None else float(p)
        self._kernel = None
        self._lock = threading.Lock()

    def __repr__(self):
        return '<OperatorContext %s on the %s>' % (self.weight.spec(),
                                                   self.geometry.value)

    def moments(self, N):
        if self.geometry is Geometry.DISC:
            return disc_moments(self.weight, N)
        if self.geometry is Geometry.PLANE:
            return plane_moments(self.weight, N)
        raise UnsupportedRepresentationError('moment sequences',
                                             'the half-plane')

    def laplace(self):
        return laplace_symbol(self.weight)

    @property
    def kernel(self):
        with self._lock:
            if self._kernel is None:
                self._kernel = make_kernel(self.weight, self.kernel_mode,
                                           self.tol, self.r_max)
            return self._kernel


def _rng_for(text):
    return np.random.default_rng(zlib.crc32(text.encode('utf-8')))


def _root_radius(coeffs):
    """Root-test estimate of the radius of convergence from the upper half
    of the nonzero coefficients, or None for short series."""
    nz = np.nonzero(coeffs)[0]
    nz = nz[nz > 0]
    if nz.size < 16:
        return None
    top = nz[nz.size // 2:]
    roots = np.abs(coeffs[top]) ** (1.0 / top)
    return 1.0 / float(np.max(roots))


def _taylor_input(ctx, f, operation):
    if ctx.geometry is Geometry.HALFPLANE:
        raise UnsupportedRepresentationError(operation, 'the half-plane')
    if not isinstance(f, TaylorSeries):
        raise UnsupportedRepresentationError(operation, type(f).__name__)
    return f.coefficients()


def _check_by_quadrature(ctx, f, g):
    radius = 0.8 if ctx.geometry is Geometry.DISC else 1.5
    radius = min(radius, 0.9 * f.radius)
    rng = _rng_for('apply_L:%s:%s' % (ctx.weight.spec(), f.spec()))
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, _CHECK_POINTS))
    zs = r * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, _CHECK_POINTS))

    def integrand(t):
        return f.evaluate(t[:, None] * zs[None, :])

    direct, _ = ctx.weight.stieltjes(integrand, rtol=ctx.tol * 1e-2,
                                     atol=ctx.tol * 1e-2,
                                     what='L by quadrature')
    direct = -np.asarray(direct)
    series = g.evaluate(zs)
    gap = float(np.max(np.abs(direct - series)
                       / np.maximum(1.0, np.abs(series))))
    _logger.debug('apply_L coefficient/quadrature gap %.3g', gap)
    if gap > _CHECK_TOL:
        raise ConsistencyError('L %s by coefficients and by quadrature'
                               % f.spec(), gap)


def _halfplane_closed(ctx, f):
    pd = power_data(ctx.weight)
    if pd is None:
        return None
    coef, alpha, cap = pd
    if alpha == -1.0:
        if isinstance(f, RationalHalfPlane):
            return coef * f
        return PointwiseFunction(lambda z: coef * evaluate(f, z),
                                 Geometry.HALFPLANE, f.boundary_margin,
                                 'L %s' % f.spec())
    if alpha != 0.0 or not isinstance(f, RationalHalfPlane):
        return None
    if any(k < 2 for _, _, k in f.terms):
        return None
    terms = []
    for b, c, k in f.terms:
        factor = coef * b * 1j / (k - 1)
        if cap is not None:
            terms.append((factor, c + cap, k - 1))
        terms.append((-factor, c, k - 1))
    return RationalHalfPlane(terms)


def _halfplane_image(ctx, f):
    w = ctx.weight
    tol = ctx.tol

    def image(z):
        z = np.asarray(z, dtype=complex)
        flat = z.ravel()

        def integrand(t):
            return evaluate(f, flat[None, :] + 1j * t[:, None])

        value, _ = w.stieltjes(integrand, rtol=tol, atol=tol * 1e-3,
                               what='half-plane L')
        return np.asarray(value).reshape(z.shape)

    return PointwiseFunction(image, Geometry.HALFPLANE, f.boundary_margin,
                             'L[%s] %s' % (w.spec(), f.spec()))


def apply_L(ctx, f, check=True):
    """Apply ``L`` to `f`.

    Disc and plane: `f` must be a `TaylorSeries`; the result is the series
    with coefficients a_n * Delta_n, checked against direct quadrature at
    10 seeded points when `check` is true. Half-plane: capped or uncapped
    linear weights map rational functions (orders >= 2) to rational
    functions in closed form, the atom-only weight (alpha = -1) scales `f`;
    otherwise a `PointwiseFunction` evaluating the Stieltjes integral is
    returned.

    :Raises ConsistencyError: if the coefficient and quadrature routes
        disagree beyond 1e-8.
    """
    if ctx.geometry is Geometry.HALFPLANE:
        if isinstance(f, TaylorSeries):
            raise UnsupportedRepresentationError('half-plane L',
                                                 'Taylor series')
        closed = _halfplane_closed(ctx, f)
        if closed is not None:
            return closed
        return _halfplane_image(ctx, f)
    coeffs = _taylor_input(ctx, f, 'L')
    delta = ctx.moments(coeffs.size - 1).values
    g = TaylorSeries(coeffs * delta, f.radius)
    if ctx.geometry is Geometry.PLANE:
        _warn_radius(f, g)
    if check:
        _check_by_quadrature(ctx, f, g)
    return g


def _warn_radius(f, g):
    before = _root_radius(f.coefficients())
    after = _root_radius(g.coefficients())
    if before is not None and after is not None and after < 0.5 * before:
        _logger.warning('apparent radius of convergence shrinks from %.3g '
                        'to %.3g', before, after)


def invert_L(ctx, g):
    """Divide the Taylor coefficients of `g` by Delta_n.

    :Raises UnsupportedRepresentationError: on the half-plane, where the
        inverse is only available through `reconstruct_boundary`.
    """
    coeffs = _taylor_input(ctx, g, 'inverse of L')
    delta = ctx.moments(coeffs.size - 1).values
    f = TaylorSeries(coeffs / delta, g.radius)
    _warn_radius(g, f)
    return f


def _boundary_values(phi, points):
    return np.asarray(evaluate(phi, points), dtype=complex)


def reconstruct_boundary(ctx, phi, z):
    """Recover f(z) from boundary data `phi` of ``L f``.

    Disc and plane: ``f(z) = (1/2pi) int C(z e^(-i theta)) phi(e^(i theta))
    d theta``, with `phi` a function or callable evaluated on the unit
    circle (trapezoid rule doubled until converged) or an array of samples
    at the angles ``2 pi j / M``. Half-plane:
    ``f(z) = (1/2pi) int C(z - t) phi(t) dt`` over the real line, with the
    truncation doubled until the increment is below tol/4.

    Components of `phi` orthogonal to H**2 do not contribute.
    """
    scalar = np.ndim(z) == 0
    za = np.atleast_1d(np.asarray(z, dtype=complex))
    k = ctx.kernel
    if ctx.geometry is Geometry.HALFPLANE:
        out = np.array([_reconstruct_line(ctx, phi, zj) for zj in za.ravel()])
        out = out.reshape(za.shape)
    elif isinstance(phi, np.ndarray):
        m = phi.shape[0]
        theta = 2.0 * np.pi * np.arange(m) / m
        samples = (k.evaluate(za.ravel()[None, :]
                              * np.exp(-1j * theta)[:, None])
                   * phi[:, None])
        out, err = sampled_circle_mean(samples)
        if np.any(err > max(ctx.tol, 1e-8) * np.maximum(1.0, np.abs(out))):
            raise AccuracyError('boundary resolution insufficient for %d '
                                'samples' % m, float(np.max(err)), ctx.tol)
        out = np.asarray(out).reshape(za.shape)
    else:
        flat = za.ravel()

        def integrand(theta):
            e = np.exp(1j * theta)
            return (k.evaluate(flat[None, :] / e[:, None])
                    * _boundary_values(phi, e)[:, None])

        out, _ = circle_mean(integrand, ctx.tol, ctx.tol * 1e-2,
                             what='boundary reconstruction')
        out = np.asarray(out).reshape(za.shape)
    return complex(out.ravel()[0]) if scalar else out


def _reconstruct_line(ctx, phi, z):
    k = ctx.kernel
    tol = ctx.tol

    def integrand(t):
        return k.evaluate(z - t) * _boundary_values(phi, t + 0j)

    def piece(a, b):
        panels = max(8, int(min(b - a, 4096)))
        value, _ = integrate(integrand, a, b, tol, tol * 1e-2, panels=panels,
                             what='half-plane reconstruction')
        return value

    c = z.real
    half = 8.0 * (1.0 + abs(z.real) + z.imag)
    total = piece(c - half, c + half)
    while True:
        increment = piece(c - 2.0 * half, c - half) + \
            piece(c + half, c + 2.0 * half)
        total += increment
        half *= 2.0
        if abs(increment) / (2.0 * np.pi) < tol / 4.0:
            break
        if half > _MAX_LINE:
            raise AccuracyError('half-plane reconstruction: truncation did '
                                'not settle by |t| = %g' % half)
    _logger.debug('half-plane reconstruction at %s truncated at |t-x|=%g',
                  z, half)
    return total / (2.0 * np.pi)


def _radial_reproduce(ctx, F, za):
    k = ctx.kernel
    w = ctx.weight
    tol = ctx.tol
    flat = za.ravel()

    def radial(u):
        rho = np.sqrt(u)

        def angular(theta):
            e = np.exp(1j * theta)[:, None, None]
            zeta = rho[None, :, None] * e
            return (np.asarray(evaluate(F, zeta))
                    * k.evaluate(flat[None, None, :] * np.conj(zeta)))

        value, _ = circle_mean(angular, tol, tol * 1e-2,
                               what='angular mean')
        return np.asarray(value)

    hi = None
    if ctx.geometry is Geometry.PLANE:
        hi = w.mass_cutoff()
    value, _ = w.stieltjes(radial, 0.0, hi, rtol=tol, atol=tol * 1e-2,
                           what='area representation')
    return -np.asarray(value)


def _halfplane_reproduce(ctx, F, za):
    k = ctx.kernel
    w = ctx.weight
    tol = ctx.tol

    def one(z):
        def vertical(s):
            y = s / 2.0

            def horizontal(x):
                wpts = x[:, None] + 1j * y[None, :]
                return (np.asarray(evaluate(F, wpts))
                        * k.evaluate(z - np.conj(wpts)))

            value, _ = integrate_line(horizontal, z.real,
                                      1.0 + z.imag, tol, tol * 1e-2,
                                      what='horizontal line integral')
            return np.asarray(value)

        value, _ = w.stieltjes(vertical, rtol=tol, atol=tol * 1e-2,
                               what='half-plane area representation')
        return complex(value) / (2.0 * np.pi)

    return np.array([one(zj) for zj in za.ravel()]).reshape(za.shape)


def area_reproduce(ctx, F, z):
    """Integrate `F` against the kernel over the whole domain.

    Disc: ``(1/2pi) int int F(zeta) C(z conj(zeta)) d mu(zeta)`` with
    ``d mu(rho e^(i theta)) = -d omega(rho**2) d theta``; plane likewise
    with the radial integral cut where the remaining mass of omega is
    below 1e-40. Half-plane: ``(1/2pi) int int F(w) C(z - conj(w))
    dx d omega(2y)``. Holomorphic members of the space are reproduced;
    other square integrable `F` are projected.

    :Raises PreconditionError: on the plane, when no exponent p was given.
    :Raises OpenProblemError: on the plane, for p < 2.
    """
    if ctx.geometry is Geometry.PLANE:
        if ctx.p is None:
            raise PreconditionError('the plane representation needs the '
                                    'exponent p of the space (p >= 2)')
        if ctx.p < 2:
            raise OpenProblemError('representation of A^p on the plane '
                                   'for p = %g < 2' % ctx.p)
    scalar = np.ndim(z) == 0
    za = np.atleast_1d(np.asarray(z, dtype=complex))
    if ctx.geometry is Geometry.HALFPLANE:
        if np.any(za.imag <= 0):
            raise DomainError('the half-plane representation needs Im z > 0')
        out = _halfplane_reproduce(ctx, F, za)
    else:
        out = _radial_reproduce(ctx, F, za).reshape(za.shape)
    return complex(out.ravel()[0]) if scalar else out


def real_part_reproduce(ctx, f, z, f0=None):
    """Recover f(z) from Re f alone.

    Disc and plane: ``-conj(f(0)) + 2 area_reproduce(Re f)``; `f0`
    overrides f(0). Half-plane: ``2 area_reproduce(Re f)``.
    """
    def real_part(zeta):
        return np.real(evaluate(f, zeta)) + 0j

    value = 2.0 * np.asarray(area_reproduce(ctx, real_part, z))
    if ctx.geometry is not Geometry.HALFPLANE:
        if f0 is None:
            f0 = evaluate(f, 0j)
        value = value - np.conj(f0)
    if np.ndim(z) == 0:
        return complex(value)
    return value
