"""Cauchy type kernels of weighted spaces.

Disc and plane kernels are the power series ``sum z**n / Delta_n``; the
half-plane kernel is ``int_0^inf exp(i t z) / I(t) dt``. Closed forms are
used where the weight family has one, otherwise the series (resp. the
Fourier-Laplace integral) is summed with a certified truncation.
"""

# Copyright (C) 2026 The holospaces developers
# Licensed under the MIT license; see COPYING.

__all__ = ('KernelMode', 'KernelEvaluator', 'DecayProbe', 'make_kernel',
           'eval_disc_kernel', 'eval_plane_kernel', 'eval_halfplane_kernel',
           'mittag_leffler', 'decay_probe')
__docformat__ = 'restructuredtext'

import collections
import enum
import logging
import math
import threading

import mpmath
import numpy as np
from scipy.special import gamma as gamma_fn, gammaln, wofz

from holospaces import _config
from holospaces.exceptions import (AccuracyError, DomainError, RadiusError,
                                   UnsupportedRepresentationError)
from holospaces.moments import disc_moments, laplace_symbol, plane_moments
from holospaces.quadrature import integrate
from holospaces.weights import Geometry, decay_data, power_data

_logger = logging.getLogger('holospaces.kernels')

# consecutive term ratios that must stay below 1 before a tail is trusted
_STABLE_RATIOS = 8
_EXP_LIMIT = 700.0

_trigamma = np.frompyfunc(lambda z: complex(mpmath.psi(1, z)), 1, 1)


class KernelMode(enum.Enum):
    SERIES = 'series'
    QUADRATURE = 'quadrature'
    CLOSED_FORM = 'closed-form'


DecayProbe = collections.namedtuple('DecayProbe',
                                    'radii values slope bounded exponent')


def mittag_leffler(a, b, z, tol=None):
    """Return ``E_{a,b}(z) = sum z**k / Gamma(a k + b)``.

    ``E_{1,1}`` is exp and ``E_{1/2,1}(z) = exp(z**2) erfc(-z)``; other
    parameters are summed in log space until the terms past the peak fall
    below `tol` relative to the largest one.

    :Raises AccuracyError: if a term overflows.
    """
    if tol is None:
        tol = _config.get('tol')
    z = np.asarray(z, dtype=complex)
    if a == 1 and b == 1:
        return np.exp(z)
    if a == 0.5 and b == 1:
        return wofz(-1j * z)
    if not (a > 0 and b > 0):
        raise DomainError('Mittag-Leffler parameters must be positive')
    flat = z.ravel()
    out = np.empty(flat.shape, dtype=complex)
    for j, zj in enumerate(flat):
        out[j] = _ml_series(a, b, zj, tol)
    return out.reshape(z.shape)


def _ml_series(a, b, z, tol):
    if z == 0:
        return 1.0 / gamma_fn(b)
    logz = np.log(complex(z))
    total = 0j
    peak = -math.inf
    k = 0
    below = 0
    while True:
        log_mag = k * logz.real - gammaln(a * k + b)
        if log_mag > _EXP_LIMIT:
            raise AccuracyError('Mittag-Leffler term %d overflows at '
                                '|z| = %.3g; use a scaled evaluation'
                                % (k, abs(z)))
        peak = max(peak, log_mag)
        total += np.exp(log_mag + 1j * k * logz.imag)
        if log_mag < peak + math.log(tol) - 3.0 and k > 2:
            below += 1
            if below >= _STABLE_RATIOS:
                return total
        else:
            below = 0
        k += 1


def _log_terms(log_moments, r):
    n = np.arange(log_moments.size)
    with np.errstate(divide='ignore'):
        return n * math.log(r) - log_moments if r > 0 else \
            np.where(n == 0, -log_moments, -np.inf)


def _tail_bound(log_terms):
    """Return the geometric tail majorant after the last term, or None if
    the last `_STABLE_RATIOS` ratios are not all below 1."""
    if log_terms.size <= _STABLE_RATIOS + 1:
        return None
    if np.isneginf(log_terms[-1]):
        return 0.0
    ratios = np.diff(log_terms[-_STABLE_RATIOS - 1:])
    if not np.all(ratios < 0):
        return None
    rhat = math.exp(float(np.max(ratios)))
    return math.exp(float(log_terms[-1])) * rhat / (1.0 - rhat)


class KernelEvaluator(object):
    """Evaluator of the kernel of one weight.

    :IVariables:
        `mode` : `KernelMode`
        `tol` : float
            Target absolute error (relative to max(1, |value|) for the plane
            series).
        `r_max` : float or None
            Certified radius (disc only).
        `n_terms` : int or None
            Series length chosen for `r_max` (disc series).
    """

    __slots__ = ('weight', 'geometry', 'mode', 'tol', 'r_max', 'closed_tag',
                 'n_terms', '_closed', '_moments', '_symbol', '_lock')

    def __init__(self, weight, mode='auto', tol=None, r_max=None):
        self.weight = weight
        self.geometry = weight.geometry
        self.tol = _config.get('tol') if tol is None else float(tol)
        self._lock = threading.Lock()
        self._moments = None
        self._symbol = None
        self.n_terms = None
        self.closed_tag, self._closed = _closed_form(weight)
        if mode == 'auto':
            if self._closed is not None:
                mode = KernelMode.CLOSED_FORM
            elif self.geometry is Geometry.HALFPLANE:
                mode = KernelMode.QUADRATURE
            else:
                mode = KernelMode.SERIES
        mode = KernelMode(mode)
        if mode is KernelMode.CLOSED_FORM and self._closed is None:
            raise UnsupportedRepresentationError('closed-form kernel',
                                                 weight.spec())
        halfplane = self.geometry is Geometry.HALFPLANE
        if (mode is KernelMode.SERIES and halfplane) or \
                (mode is KernelMode.QUADRATURE and not halfplane):
            raise UnsupportedRepresentationError('%s kernel' % mode.value,
                                                 'the %s'
                                                 % self.geometry.value)
        self.mode = mode
        self.r_max = None
        if self.geometry is Geometry.DISC:
            refusal = _config.get('disc_refusal_radius')
            r_max = _config.get('disc_certified_radius') if r_max is None \
                else float(r_max)
            if r_max > refusal:
                raise RadiusError(refusal)
            if not r_max > 0:
                raise DomainError('r_max must be positive')
            self.r_max = r_max
            if mode is KernelMode.SERIES:
                self._prepare_disc_series()
        elif self.geometry is Geometry.HALFPLANE:
            if weight.growth > 0:
                raise DomainError('the half-plane kernel needs a Laplace '
                                  'integral converging for every t > 0')
            if mode is KernelMode.QUADRATURE:
                self._symbol = laplace_symbol(weight)
        _logger.debug('kernel of %s on the %s: %s', weight.spec(),
                      self.geometry.value, mode.value)

    def __repr__(self):
        return '<KernelEvaluator %s %s>' % (self.weight.spec(),
                                            self.mode.value)

    # -- disc series ---------------------------------------------------

    def _prepare_disc_series(self):
        cap = _config.get('series_n_cap')
        n = 64
        while True:
            mom = disc_moments(self.weight, n)
            logs = _log_terms(mom.log_values, self.r_max)
            tail = _tail_bound(logs)
            total = float(np.sum(np.exp(logs)))
            if tail is not None and tail < self.tol * max(1.0, total):
                self._moments = mom
                self.n_terms = n
                _logger.debug('disc series of %s: N=%d for r_max=%g',
                              self.weight.spec(), n, self.r_max)
                return
            if n >= cap:
                raise AccuracyError('disc kernel series of %s does not '
                                    'settle within %d terms at r = %g'
                                    % (self.weight.spec(), cap, self.r_max))
            n = min(2 * n, cap)

    def _disc_series(self, z):
        coeffs = np.exp(-self._moments.log_values) \
            * np.sign(self._moments.values)
        out = np.zeros(z.shape, dtype=complex)
        for c in coeffs[::-1]:
            out = out * z + c
        return out

    # -- plane series --------------------------------------------------

    def _plane_moments_for(self, log_r):
        cap = _config.get('series_n_cap')
        with self._lock:
            mom = self._moments
            n = 64 if mom is None else mom.N
        while True:
            if mom is None or mom.N < n:
                mom = plane_moments(self.weight, n)
            logs = np.arange(mom.N + 1) * log_r - mom.log_values
            peak = float(np.max(logs))
            if peak > _EXP_LIMIT:
                raise AccuracyError('plane kernel terms of %s overflow at '
                                    '|z| = %.3g; use a scaled evaluation'
                                    % (self.weight.spec(), math.exp(log_r)))
            tail = _tail_bound(logs)
            if tail is not None and tail < self.tol * max(1.0,
                                                          math.exp(peak)):
                break
            if n >= cap:
                raise AccuracyError('plane kernel series of %s does not '
                                    'settle within %d terms at |z| = %.3g'
                                    % (self.weight.spec(), cap,
                                       math.exp(log_r)))
            n = min(2 * n, cap)
        with self._lock:
            if self._moments is None or self._moments.N < mom.N:
                self._moments = mom
        return mom, tail

    def _plane_series(self, z):
        r = float(np.max(np.abs(z))) if z.size else 0.0
        mom, _ = self._plane_moments_for(math.log(max(r, 1e-300)))
        n = np.arange(mom.N + 1)
        out = np.empty(z.shape, dtype=complex)
        flat = z.ravel()
        res = out.reshape(-1)
        for j, zj in enumerate(flat):
            if zj == 0:
                res[j] = 1.0 / mom.values[0]
                continue
            logs = n * np.log(zj) - mom.log_values
            res[j] = np.sum(np.exp(logs))
        return out

    # -- half-plane quadrature -----------------------------------------

    def _halfplane_quadrature(self, z):
        flat = z.ravel()
        y = flat.imag
        ymin = float(np.min(y))
        tstar = max(1.0, 40.0 / ymin)
        symbol = self._symbol
        while True:
            bound = 2.0 * math.exp(-tstar * ymin) / (ymin
                                                       * symbol(tstar))
            if bound < self.tol / 10.0:
                break
            tstar *= 2.0
        reach = float(np.max(np.abs(flat.real) + y))
        panels = int(16 + tstar * reach / 4.0)

        def integrand(t):
            inv = 1.0 / symbol(t)
            with np.errstate(under='ignore'):
                return np.exp(1j * t[:, None] * flat[None, :]) \
                    * inv[:, None]

        value, err = integrate(integrand, 0.0, tstar, self.tol, self.tol,
                               panels=panels,
                               what='half-plane kernel of %s'
                               % self.weight.spec())
        _logger.debug('half-plane kernel: t*=%.3g, %d panels', tstar, panels)
        return (np.asarray(value).reshape(z.shape),
                (np.asarray(err) + bound).reshape(z.shape))

    # -- public --------------------------------------------------------

    def _check_points(self, z):
        if self.geometry is Geometry.DISC:
            modulus = float(np.max(np.abs(z))) if z.size else 0.0
            if modulus > self.r_max:
                raise RadiusError(self.r_max, modulus)
        elif self.geometry is Geometry.HALFPLANE:
            if z.size and np.any(z.imag <= 0):
                raise DomainError('the half-plane kernel needs Im z > 0')
            floor = _config.get('halfplane_im_floor')
            if z.size and np.min(z.imag) < floor:
                raise AccuracyError('Im z = %.3g is below the floor %g '
                                    '(oscillatory regime)'
                                    % (np.min(z.imag), floor))

    def evaluate(self, z):
        """Return the kernel at `z` (scalar or array).

        :Raises RadiusError: on the disc, for |z| beyond `r_max`.
        :Raises DomainError: on the half-plane, for Im z <= 0.
        :Raises AccuracyError: on the half-plane, for Im z below the
            configured floor; on the plane, when terms overflow.
        """
        return self._evaluate(z)[0]

    __call__ = evaluate

    def estimate_error(self, z):
        """Return the estimated absolute error of `evaluate` at `z`."""
        return self._evaluate(z)[1]

    def _evaluate(self, z):
        scalar = np.ndim(z) == 0
        za = np.atleast_1d(np.asarray(z, dtype=complex))
        self._check_points(za)
        if self.mode is KernelMode.CLOSED_FORM:
            value = np.asarray(self._closed(za), dtype=complex)
            err = np.full(za.shape, 1e-15) * np.maximum(1.0, np.abs(value))
        elif self.geometry is Geometry.DISC:
            value = self._disc_series(za)
            err = np.empty(za.shape)
            for j, r in enumerate(np.abs(za).ravel()):
                tail = _tail_bound(_log_terms(self._moments.log_values, r))
                err.reshape(-1)[j] = self.tol if tail is None else tail
        elif self.geometry is Geometry.PLANE:
            value = self._plane_series(za)
            err = self.tol * np.maximum(1.0, np.abs(value))
        else:
            value, err = self._halfplane_quadrature(za)
        if scalar:
            return complex(value[0]), float(err[0])
        return value, err


def _closed_form(w):
    pd = power_data(w)
    if w.geometry is Geometry.DISC:
        if pd is None:
            return None, None
        coef, alpha, _ = pd
        return ('power', lambda z: (1.0 - z) ** (-(1.0 + alpha)) / coef)
    if w.geometry is Geometry.PLANE:
        dd = decay_data(w)
        if dd is None:
            return None, None
        gamma, rho, mu = dd
        if (gamma, rho, mu) == (1.0, 1.0, 1.0):
            return 'exp', np.exp
        scale = gamma ** (1.0 / rho)
        g_mu = gamma_fn(mu)
        return ('mittag-leffler',
                lambda z: g_mu * mittag_leffler(1.0 / rho, mu, scale * z))
    if pd is not None:
        coef, alpha, cap = pd
        if alpha == -1.0:
            return 'inverse', lambda z: 1j / (coef * z)
        if cap is None:
            return ('power',
                    lambda z: (-1j * z) ** (-(2.0 + alpha)) / coef)
        if alpha == 0.0:
            return ('trigamma',
                    lambda z: _trigamma(-1j * z / cap).astype(complex)
                    / (coef * cap * cap))
    return None, None


def make_kernel(w, mode='auto', tol=None, r_max=None):
    """Return a `KernelEvaluator` for `w`.

    :Parameters:
        `mode` : str or `KernelMode`
            ``auto`` picks the closed form when the family has one, the
            series on the disc and the plane and the quadrature on the
            half-plane.
        `r_max` : float
            Disc only: certified radius, at most the configured refusal
            radius (0.98 by default).
    """
    return KernelEvaluator(w, mode, tol, r_max)


def _require(k, geometry):
    if k.geometry is not geometry:
        raise DomainError('%s kernel requested from a %s evaluator'
                          % (geometry.value, k.geometry.value))


def eval_disc_kernel(k, z):
    _require(k, Geometry.DISC)
    return k.evaluate(z)


def eval_plane_kernel(k, z):
    _require(k, Geometry.PLANE)
    return k.evaluate(z)


def eval_halfplane_kernel(k, z):
    _require(k, Geometry.HALFPLANE)
    return k.evaluate(z)


def decay_probe(k, exponent, eps=0.5, r_max=1e3, n=25):
    """Sample ``|C(z)| |z|**exponent`` along ``z = r + i eps`` for r
    log-spaced in [1, r_max].

    The samples are declared bounded when the log-log slope over the
    upper half of the grid is at most 0.05.
    """
    _require(k, Geometry.HALFPLANE)
    radii = np.logspace(0.0, math.log10(r_max), n)
    z = radii + 1j * eps
    values = np.abs(k.evaluate(z)) * np.abs(z) ** exponent
    half = n // 2
    slope = float(np.polyfit(np.log(radii[half:]), np.log(values[half:]),
                             1)[0])
    bounded = slope <= 0.05
    _logger.debug('decay probe of %s with exponent %g: slope %.3g',
                  k.weight.spec(), exponent, slope)
    return DecayProbe(radii, values, slope, bounded, exponent)
